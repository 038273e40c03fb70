# coding=utf-8
# Copyright 2020 The Cocycle States Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sign-valued cochains of G = (Z_2)^m.

A cochain of degree d takes values +1/-1 and is stored as its Z_2 exponent.
Group elements are ints in [0, 2^m): coordinate i is bit i and the group
product is XOR. The exponent table of a degree d cochain is a d-dimensional
uint8 array with 2^m entries per axis.
"""

import functools
import math
import typing

from absl import logging
import numpy as np
from cocycle_states.algebra import gf2_core
from cocycle_states.algebra import modes

MAX_DEGREE = 3


class GroupZ2m(typing.NamedTuple):
  """The group (Z_2)^m with generators e_i = 1 << i."""
  m: int

  @property
  def order(self):
    return 1 << self.m

  @property
  def identity(self):
    return 0

  def elements(self):
    return np.arange(self.order, dtype=np.int64)

  def generators(self):
    return [1 << i for i in range(self.m)]

  def coordinates(self, g):
    return gf2_core.unpack_bits(int(g), self.m)

  def element(self, coordinates):
    coordinates = gf2_core.bit_vector(coordinates)
    if coordinates.shape[0] != self.m:
      raise ValueError('expected %d coordinates, got %d' %
                       (self.m, coordinates.shape[0]))
    return gf2_core.pack_bits(coordinates)

  def multiply(self, g, h):
    return g ^ h

  def inverse(self, g):
    return g


class Cochain(object):
  """Exponent table of a sign-valued cochain.

  Attributes:
    group: GroupZ2m
    degree: number of arguments d
    form: one of modes.Forms
    table: read-only uint8 array of shape (2^m,) * d
  """

  def __init__(self, m, degree, table, form=modes.Forms.INHOMOGENEOUS):
    modes.check_mode(form, modes.Forms.ALL, 'cochain form')
    if degree < 0:
      raise ValueError('negative cochain degree %d' % degree)
    table = gf2_core.check_bits(table, 'exponent table')
    if table.size != 1 << (m * degree):
      raise ValueError('degree %d cochain of m=%d needs %d entries, got %d' %
                       (degree, m, 1 << (m * degree), table.size))
    table = table.reshape((1 << m,) * degree).copy()
    table.flags.writeable = False
    self.group = GroupZ2m(m)
    self.degree = degree
    self.form = form
    self.table = table

  @property
  def m(self):
    return self.group.m

  @classmethod
  def trivial(cls, m, degree, form=modes.Forms.INHOMOGENEOUS):
    return cls(m, degree, np.zeros((1 << m,) * degree, dtype=np.uint8), form)

  @classmethod
  def from_function(cls, m, degree, fn, form=modes.Forms.INHOMOGENEOUS):
    """Tabulates fn, called with one broadcastable index array per argument."""
    grids = np.indices((1 << m,) * degree, sparse=True)
    values = np.broadcast_to(np.asarray(fn(*grids)) & 1, (1 << m,) * degree)
    return cls(m, degree, values, form)

  def is_trivial(self):
    return not self.table.any()

  def __call__(self, *args):
    if len(args) != self.degree:
      raise ValueError('cochain of degree %d called with %d arguments' %
                       (self.degree, len(args)))
    return int(self.table[tuple(int(a) for a in args)])

  def __eq__(self, other):
    if not isinstance(other, Cochain):
      return NotImplemented
    return (self.m == other.m and self.degree == other.degree and
            self.form == other.form and
            np.array_equal(self.table, other.table))

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return hash((self.m, self.degree, self.form, self.table.tobytes()))

  def __repr__(self):
    return 'Cochain(m=%d, degree=%d, form=%s, support=%d)' % (
        self.m, self.degree, self.form, int(self.table.sum()))


def _grids(m, count):
  return list(np.indices((1 << m,) * count, sparse=True))


def coboundary(x):
  """Coboundary of a cochain, in the same storage form.

  The inhomogeneous exponent is
    x(g_2..g_{d+1}) + sum_k x(.., g_k g_{k+1}, ..) + x(g_1..g_d)
  and the homogeneous one the sum of x over the d+2 faces of
  (e, a_1, ..., a_{d+1}).

  Args:
    x: Cochain of degree d

  Returns:
    Cochain of degree d+1
  """
  d = x.degree
  n = 1 << x.m
  idx = _grids(x.m, d + 1)
  table = x.table
  out = np.zeros((n,) * (d + 1), dtype=np.uint8)
  if x.form == modes.Forms.INHOMOGENEOUS:
    out ^= table[tuple(idx[1:])]
    for k in range(1, d + 1):
      args = idx[:k - 1] + [idx[k - 1] ^ idx[k]] + idx[k + 1:]
      out ^= table[tuple(args)]
    out ^= table[tuple(idx[:d])]
  else:
    # face without e, moved back to start at e
    out ^= table[tuple(idx[j] ^ idx[0] for j in range(1, d + 1))]
    for k in range(d + 1):
      out ^= table[tuple(idx[:k] + idx[k + 1:])]
  return Cochain(x.m, d + 1, out, x.form)


def is_cocycle(x):
  return coboundary(x).is_trivial()


@functools.lru_cache(maxsize=None)
def _coboundary_matrix(m, degree, form):
  size = 1 << (m * degree)
  columns = []
  for c in range(size):
    basis = np.zeros(size, dtype=np.uint8)
    basis[c] = 1
    columns.append(coboundary(Cochain(m, degree, basis, form)).table.ravel())
  matrix = np.stack(columns, axis=1).astype(np.uint8)
  matrix.flags.writeable = False
  return matrix


def coboundary_matrix(m, degree, form=modes.Forms.INHOMOGENEOUS):
  """GF(2) matrix of the exponent map from degree to degree+1 cochains.

  Column c is the flattened coboundary of the cochain whose only nonzero
  exponent sits at flat index c.

  Args:
    m: number of group generators
    degree: source degree
    form: storage form of both sides

  Returns:
    read-only uint8 matrix of shape (2^(m(degree+1)), 2^(m degree))
  """
  modes.check_mode(form, modes.Forms.ALL, 'cochain form')
  return _coboundary_matrix(m, degree, form)


def is_coboundary(x):
  """True iff x is the coboundary of some sign-valued (d-1)-cochain."""
  if x.degree < 1:
    raise ValueError('coboundaries have degree >= 1, got %d' % x.degree)
  matrix = coboundary_matrix(x.m, x.degree - 1, x.form)
  return gf2_core.solve_linear(matrix, x.table.ravel()) is not None


def cocycle_basis(m, degree, form=modes.Forms.INHOMOGENEOUS):
  """Basis of the sign-valued cocycles, as flattened exponent tables."""
  return gf2_core.null_space(coboundary_matrix(m, degree, form))


def enumerate_cocycles(m, degree, form=modes.Forms.INHOMOGENEOUS):
  """Yields every sign-valued cocycle of the given degree.

  Cocycles are generated from cocycle_basis; the i-th yielded cocycle is the
  sum of the basis vectors selected by the bits of i.

  Args:
    m: number of group generators
    degree: cocycle degree
    form: storage form

  Yields:
    Cochain
  """
  basis = cocycle_basis(m, degree, form)
  logging.debug('m=%d degree=%d: %d cocycles', m, degree, 1 << len(basis))
  for code in range(1 << len(basis)):
    table = np.zeros(1 << (m * degree), dtype=np.uint8)
    for i in range(len(basis)):
      if (code >> i) & 1:
        table ^= basis[i]
    yield Cochain(m, degree, table, form)


def convert_form(x, target):
  """Converts between inhomogeneous and homogeneous storage.

  Homogeneous entry (a_1, ..., a_d) is x(a_1, a_1 a_2, ..., a_{d-1} a_d);
  the inverse reads x(g_1, ..., g_d) at (g_1, g_1 g_2, ..., g_1 ... g_d).

  Args:
    x: Cochain
    target: one of modes.Forms

  Returns:
    Cochain in the target form
  """
  modes.check_mode(target, modes.Forms.ALL, 'cochain form')
  if target == x.form or x.degree == 0:
    return Cochain(x.m, x.degree, x.table, target)
  idx = _grids(x.m, x.degree)
  if target == modes.Forms.HOMOGENEOUS:
    args = [idx[0]] + [idx[k - 1] ^ idx[k] for k in range(1, x.degree)]
  else:
    args = [idx[0]]
    for k in range(1, x.degree):
      args.append(args[-1] ^ idx[k])
  table = np.broadcast_to(x.table[tuple(args)], (1 << x.m,) * x.degree)
  return Cochain(x.m, x.degree, table, target)


def coordinate_bits(m):
  """Matrix of shape (2^m, m) whose row g holds the coordinates of g."""
  g = np.arange(1 << m, dtype=np.int64)
  return ((g[:, None] >> np.arange(m)) & 1).astype(np.int64)


class MultilinearForm(object):
  """A cochain that is a character in each argument.

  It is encoded by its binary components: a vector (d=1), matrix (d=2) or
  m x m x m tensor (d=3); the exponent at (g, h, f) is the contraction
  sum t(i,j,k) g_i h_j f_k.
  """

  def __init__(self, components):
    components = gf2_core.check_bits(components, 'components')
    if not 1 <= components.ndim <= MAX_DEGREE:
      raise ValueError('multilinear forms have degree 1..%d, got %d' %
                       (MAX_DEGREE, components.ndim))
    if len(set(components.shape)) != 1:
      raise ValueError('components must be square, got shape %s' %
                       (components.shape,))
    components = components.copy()
    components.flags.writeable = False
    self.components = components

  @property
  def degree(self):
    return self.components.ndim

  @property
  def m(self):
    return self.components.shape[0]

  def to_cochain(self):
    """Inhomogeneous Cochain of the form."""
    bits = coordinate_bits(self.m)
    letters = 'ijk'[:self.degree]
    args = ','.join('%s%s' % (a, i) for a, i in zip('abc', letters))
    spec = '%s,%s->%s' % (args, letters, 'abc'[:self.degree])
    operands = [bits] * self.degree + [self.components.astype(np.int64)]
    table = np.einsum(spec, *operands) & 1
    return Cochain(self.m, self.degree, table)

  def __eq__(self, other):
    if not isinstance(other, MultilinearForm):
      return NotImplemented
    return np.array_equal(self.components, other.components)

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return hash((self.components.shape, self.components.tobytes()))

  def __repr__(self):
    return 'MultilinearForm(degree=%d, m=%d, cells=%d)' % (
        self.degree, self.m, int(self.components.sum()))


def eval_multilinear(t, args):
  """Exponent of a multilinear form at d group elements.

  Args:
    t: MultilinearForm
    args: d group elements, each an int or a coordinate bit vector

  Returns:
    0 or 1
  """
  if len(args) != t.degree:
    raise ValueError('form of degree %d evaluated at %d arguments' %
                     (t.degree, len(args)))
  result = t.components.astype(np.int64)
  for arg in args:
    if np.ndim(arg):
      coordinates = gf2_core.bit_vector(arg).astype(np.int64)
    else:
      coordinates = gf2_core.unpack_bits(int(arg), t.m).astype(np.int64)
    result = np.tensordot(coordinates, result, axes=(0, 0))
  return int(result) & 1


def extract_multilinear(x):
  """Reads the components of a multilinear cochain.

  Args:
    x: inhomogeneous Cochain of degree 1..3

  Returns:
    MultilinearForm, or None if x is not multilinear

  Raises:
    ValueError: for homogeneous input or unsupported degree
  """
  if x.form != modes.Forms.INHOMOGENEOUS:
    raise ValueError('extract_multilinear needs an inhomogeneous cochain')
  if not 1 <= x.degree <= MAX_DEGREE:
    raise ValueError('multilinear forms have degree 1..%d, got %d' %
                     (MAX_DEGREE, x.degree))
  generators = np.array(x.group.generators(), dtype=np.int64)
  components = x.table[np.ix_(*([generators] * x.degree))]
  form = MultilinearForm(components)
  if form.to_cochain() != x:
    return None
  return form


def cohomology_factor_ranks(m):
  """Ranks of the type-I, type-II and type-III factors of H^3((Z_2)^m)."""
  if m < 1:
    raise ValueError('m must be >= 1, got %d' % m)
  return m, math.comb(m, 2), math.comb(m, 3)


def cohomology_order(m):
  """Order of H^3((Z_2)^m, U(1))."""
  return 2 ** sum(cohomology_factor_ranks(m))


def cluster_cocycle():
  """Bilinear 2-cocycle (g, h) -> g.h of Z_2."""
  return Cochain(1, 2, [[0, 0], [0, 1]])


def union_jack_cocycle():
  """Trilinear 3-cocycle (g, h, f) -> g.h.f of Z_2."""
  table = np.zeros((2, 2, 2), dtype=np.uint8)
  table[1, 1, 1] = 1
  return Cochain(1, 3, table)
