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

"""Gauge action and normal forms of component matrices and tensors.

A gauge is an invertible matrix per color. It acts on a component matrix as
chi_A^T t chi_B and on a component tensor by contracting index i with chi_A,
j with chi_B and k with chi_C:
  t'(a, b, c) = sum_{i,j,k} t(i,j,k) chi_A(i,a) chi_B(j,b) chi_C(k,c).
Composition is compose(g, h) = (chi_A^g chi_A^h, ...), so applying g and then
h equals applying compose(g, h).
"""

import typing

from absl import logging
import numpy as np
from cocycle_states.algebra import gf2_core
from cocycle_states.algebra import tensor_codes

# largest index size handled by exhaustive orbit searches
MAX_EXHAUSTIVE_DIM = 3


class GaugePair(typing.NamedTuple):
  chi_a: np.ndarray
  chi_b: np.ndarray

  @classmethod
  def identity(cls, rows, cols):
    return cls(gf2_core.identity(rows), gf2_core.identity(cols))

  def compose(self, other):
    return GaugePair(gf2_core.matmul(self.chi_a, other.chi_a),
                     gf2_core.matmul(self.chi_b, other.chi_b))

  def inverse(self):
    return GaugePair(gf2_core.invert(self.chi_a), gf2_core.invert(self.chi_b))


class GaugeTriple(typing.NamedTuple):
  chi_a: np.ndarray
  chi_b: np.ndarray
  chi_c: np.ndarray

  @classmethod
  def identity(cls, dims):
    return cls(*[gf2_core.identity(n) for n in dims])

  @property
  def dims(self):
    return tuple(chi.shape[0] for chi in self)

  def compose(self, other):
    return GaugeTriple(*[gf2_core.matmul(x, y) for x, y in zip(self, other)])

  def inverse(self):
    return GaugeTriple(*[gf2_core.invert(x) for x in self])


def check_gauge(g):
  """Raises SingularMatrixError unless every matrix of g is invertible."""
  for chi in g:
    gf2_core.invert(chi)
  return g


def as_tensor(t):
  t = gf2_core.check_bits(t, 'component tensor')
  if t.ndim != 3:
    raise ValueError('expected a 3-index tensor, got shape %s' % (t.shape,))
  return t


def gauge2(t, g):
  """chi_A^T t chi_B over GF(2)."""
  t = gf2_core.check_bits(t, 'component matrix')
  if t.shape != (g.chi_a.shape[0], g.chi_b.shape[0]):
    raise ValueError('gauge of sizes %s does not fit a %s matrix' %
                     ((g.chi_a.shape[0], g.chi_b.shape[0]), t.shape))
  return gf2_core.matmul(gf2_core.matmul(gf2_core.transpose(g.chi_a), t),
                         g.chi_b)


def gauge3(t, g):
  """Contracts each tensor index with the matrix of its color."""
  t = as_tensor(t)
  if t.shape != g.dims:
    raise ValueError('gauge of sizes %s does not fit a %s tensor' %
                     (g.dims, t.shape))
  out = np.einsum('ijk,ia,jb,kc->abc', t.astype(np.int64),
                  g.chi_a.astype(np.int64), g.chi_b.astype(np.int64),
                  g.chi_c.astype(np.int64))
  return (out & 1).astype(np.uint8)


class DiagonalForm(typing.NamedTuple):
  """gauge2(input, gauge) == output, output = diag(1, .., 1, 0, ..) of rank r."""
  output: np.ndarray
  gauge: GaugePair
  r: int


def diagonal_normal_form(t):
  """Gaussian elimination of a component matrix to diagonal form.

  Pivots are taken at the first nonzero entry of the remaining block in
  row-major order; row operations accumulate into chi_A^T and column
  operations into chi_B.

  Args:
    t: component matrix

  Returns:
    DiagonalForm
  """
  work = gf2_core.check_bits(t, 'component matrix').copy()
  rows, cols = work.shape
  row_ops = gf2_core.identity(rows)
  col_ops = gf2_core.identity(cols)
  r = 0
  while r < min(rows, cols):
    nonzero = np.argwhere(work[r:, r:])
    if not nonzero.size:
      break
    i, j = nonzero[0] + r
    work[[r, i]] = work[[i, r]]
    row_ops[[r, i]] = row_ops[[i, r]]
    work[:, [r, j]] = work[:, [j, r]]
    col_ops[:, [r, j]] = col_ops[:, [j, r]]
    for i in np.flatnonzero(work[:, r]):
      if i != r:
        work[i] ^= work[r]
        row_ops[i] ^= row_ops[r]
    for j in np.flatnonzero(work[r]):
      if j != r:
        work[:, j] ^= work[:, r]
        col_ops[:, j] ^= col_ops[:, r]
    r += 1
  return DiagonalForm(work, GaugePair(gf2_core.transpose(row_ops), col_ops), r)


class SupportSets(typing.NamedTuple):
  """Bases (one vector per row) of the support subspaces of a tensor."""
  s_a: np.ndarray
  s_b: np.ndarray
  s_c: np.ndarray

  @property
  def dims(self):
    return tuple(len(s) for s in self)


def supports(t):
  """Spans of the contractions of t against every pair of other arguments.

  S_C is spanned by v(a, b)_k = sum_{i,j} t(i,j,k) a_i b_j; taking a, b to be
  basis vectors shows it is the row space of the (i,j) x k flattening.

  Args:
    t: component tensor

  Returns:
    SupportSets
  """
  t = as_tensor(t)
  p, q, s = t.shape
  return SupportSets(
      gf2_core.row_basis(np.transpose(t, (1, 2, 0)).reshape(q * s, p)),
      gf2_core.row_basis(np.transpose(t, (0, 2, 1)).reshape(p * s, q)),
      gf2_core.row_basis(t.reshape(p * q, s)))


class _UnionFind(object):
  """Union-find over vertex keys with path compression."""

  def __init__(self):
    self._parent = {}

  def root(self, x):
    parent = self._parent.setdefault(x, x)
    if parent == x:
      return x
    top = self.root(parent)
    self._parent[x] = top
    return top

  def merge(self, x, y):
    x, y = self.root(x), self.root(y)
    if x != y:
      self._parent[max(x, y)] = min(x, y)


def split_components(t):
  """Splits t into blocks whose cells share no index value at any color.

  Cells are triangles on the vertices (color, index); blocks are the
  connected components, ordered by their smallest cell.

  Args:
    t: component tensor

  Returns:
    list of tensors of the same dims, summing to t
  """
  t = as_tensor(t)
  cells = [tuple(int(x) for x in cell) for cell in np.argwhere(t)]
  forest = _UnionFind()
  for i, j, k in cells:
    forest.merge((0, i), (1, j))
    forest.merge((0, i), (2, k))
  blocks = {}
  for cell in cells:
    root = forest.root((0, cell[0]))
    blocks.setdefault(root, np.zeros_like(t))[cell] = 1
  return sorted(blocks.values(), key=lambda b: tuple(np.argwhere(b)[0]))


def is_decomposable(t):
  return len(split_components(t)) >= 2


def gauge_generators(dims):
  """Gauge triples generating GL(p,2) x GL(q,2) x GL(s,2).

  Each color of size n >= 2 contributes shear(n, 0, 1) and the n-cycle.

  Args:
    dims: tensor dims

  Returns:
    list of GaugeTriple
  """
  generators = []
  for color, n in enumerate(dims):
    if n < 2:
      continue
    for chi in (gf2_core.shear(n, 0, 1), gf2_core.cyclic_permutation(n)):
      matrices = [gf2_core.identity(size) for size in dims]
      matrices[color] = chi
      generators.append(GaugeTriple(*matrices))
  return generators


def _check_exhaustive(dims):
  if max(dims) > MAX_EXHAUSTIVE_DIM:
    raise tensor_codes.ResourceGuardError(
        'exhaustive gauge search supports index sizes <= %d, got %s' %
        (MAX_EXHAUSTIVE_DIM, dims))


def _code_maps(dims, generators):
  return [
      tensor_codes.LinearCodeMap.from_tensor_map(
          dims, lambda x, g=g: gauge3(x, g)) for g in generators
  ]


def orbit_codes(t):
  """Sorted codes of every gauge3 image of t."""
  t = as_tensor(t)
  _check_exhaustive(t.shape)
  maps = _code_maps(t.shape, gauge_generators(t.shape))
  search = tensor_codes.orbit_search(
      tensor_codes.tensor_to_code(t), maps, tensor_codes.code_bits(t.shape))
  return np.sort(search.codes)


def is_irreducible(t):
  """True iff t is nonzero and no gauge3 image of t is decomposable.

  The whole orbit of t is searched, so index sizes are limited to
  MAX_EXHAUSTIVE_DIM.

  Args:
    t: component tensor

  Returns:
    bool

  Raises:
    ResourceGuardError: if an index size exceeds MAX_EXHAUSTIVE_DIM
  """
  t = as_tensor(t)
  _check_exhaustive(t.shape)
  if not t.any():
    return False
  maps = _code_maps(t.shape, gauge_generators(t.shape))
  search = tensor_codes.orbit_search(
      tensor_codes.tensor_to_code(t), maps, tensor_codes.code_bits(t.shape),
      targets=tensor_codes.decomposable_codes(t.shape))
  return search.hit is None


def first_decomposing_gauge(t, shuffle_seed=None):
  """First gauge triple with a decomposable gauge3 image.

  t itself is tried first and gets the identity gauge. Otherwise triples are
  scanned in enumerate_gl order, chi_A slowest and chi_C fastest; for each
  chi_A all (chi_B, chi_C) images are computed in one batch.

  Args:
    t: component tensor
    shuffle_seed: if set, each enumerate_gl list is shuffled with this seed

  Returns:
    GaugeTriple, or None if t is zero or irreducible

  Raises:
    ResourceGuardError: if an index size exceeds MAX_EXHAUSTIVE_DIM
  """
  t = as_tensor(t)
  dims = t.shape
  _check_exhaustive(dims)
  if not t.any():
    return None
  decomposable = tensor_codes.decomposable_bitmap(dims)
  if decomposable.contains([tensor_codes.tensor_to_code(t)])[0]:
    return GaugeTriple.identity(dims)

  groups = [np.array(gf2_core.enumerate_gl(n), dtype=np.int64) for n in dims]
  if shuffle_seed is not None:
    rng = np.random.default_rng(shuffle_seed)
    groups = [group[rng.permutation(len(group))] for group in groups]
  weights = np.left_shift(1, np.arange(tensor_codes.code_bits(dims),
                                       dtype=np.int64))
  n_c = len(groups[2])
  for chi_a in groups[0]:
    partial = np.einsum('ijk,ia->ajk', t.astype(np.int64), chi_a)
    images = np.einsum('ajk,yjb,zkc->yzabc', partial, groups[1], groups[2],
                       optimize=True) & 1
    codes = images.reshape(len(groups[1]) * n_c, -1) @ weights
    hits = np.flatnonzero(decomposable.contains(codes))
    if hits.size:
      b, c = divmod(int(hits[0]), n_c)
      return GaugeTriple(*[chi.astype(np.uint8)
                           for chi in (chi_a, groups[1][b], groups[2][c])])
  return None


class DisjointDecomposition(typing.NamedTuple):
  """gauge3(input, gauge) is the sum of r support-disjoint irreducible blocks."""
  gauge: GaugeTriple
  blocks: typing.List[np.ndarray]
  r: int


def _lift_gauge(sub_gauge, dims, index_sets):
  matrices = []
  for chi, n, index in zip(sub_gauge, dims, index_sets):
    full = gf2_core.identity(n)
    full[np.ix_(index, index)] = chi
    matrices.append(full)
  return GaugeTriple(*matrices)


def disjoint_normal_form(t, shuffle_seed=None):
  """Maximal decomposition of t into support-disjoint irreducible blocks.

  The first decomposing gauge is taken (see first_decomposing_gauge); the
  components of the image are restricted to the indices they use and
  decomposed again with gauges acting on those indices only.

  Args:
    t: component tensor
    shuffle_seed: if set, the enumerate_gl order of every search is
      shuffled with this seed (the block count does not depend on it)

  Returns:
    DisjointDecomposition
  """
  t = as_tensor(t)
  dims = t.shape
  _check_exhaustive(dims)
  identity = GaugeTriple.identity(dims)
  if not t.any():
    return DisjointDecomposition(identity, [], 0)

  gauge = first_decomposing_gauge(t, shuffle_seed)
  if gauge is None:
    return DisjointDecomposition(identity, [t.copy()], 1)
  image = gauge3(t, gauge)

  blocks = []
  for component in split_components(image):
    index_sets = [
        np.flatnonzero(component.any(axis=axes))
        for axes in ((1, 2), (0, 2), (0, 1))
    ]
    sub = component[np.ix_(*index_sets)]
    sub_decomposition = disjoint_normal_form(sub, shuffle_seed)
    gauge = gauge.compose(
        _lift_gauge(sub_decomposition.gauge, dims, index_sets))
    for sub_block in sub_decomposition.blocks:
      block = np.zeros_like(t)
      block[np.ix_(*index_sets)] = sub_block
      blocks.append(block)
  blocks.sort(key=lambda b: tuple(np.argwhere(b)[0]))
  logging.debug('disjoint normal form of %d cells: r=%d', int(t.sum()),
                len(blocks))
  return DisjointDecomposition(gauge, blocks, len(blocks))


def index_agreements(cell, other):
  return sum(int(x == y) for x, y in zip(cell, other))


def first_cell(t):
  cells = np.argwhere(t)
  if not cells.size:
    raise ValueError('tensor has no nonzero cell')
  return tuple(int(x) for x in cells[0])


def edge_disjoint_form(t, fiducial=None):
  """Removes every edge incidence with a fiducial cell by shears.

  A cell (i0, j0, k1) is cleared by the C shear adding slice k0 to slice k1;
  the B and A cases are analogous. A shear never creates a new edge
  incidence, so at most one shear per incident cell is applied.

  Args:
    t: nonzero component tensor
    fiducial: cell (i0, j0, k0) holding 1, or None for the first nonzero cell
      in lexicographic order

  Returns:
    (tensor, GaugeTriple) with gauge3(t, gauge) == tensor

  Raises:
    ValueError: if t is zero or the fiducial cell is 0
  """
  t = as_tensor(t)
  if fiducial is None:
    fiducial = first_cell(t)
  fiducial = tuple(int(x) for x in fiducial)
  if not t[fiducial]:
    raise ValueError('fiducial cell %s is 0' % (fiducial,))
  i0, j0, k0 = fiducial
  dims = t.shape
  gauge = GaugeTriple.identity(dims)
  out = t
  while True:
    incident = [
        tuple(int(x) for x in cell)
        for cell in np.argwhere(out)
        if tuple(cell) != fiducial and index_agreements(cell, fiducial) == 2
    ]
    if not incident:
      break
    i, j, k = incident[0]
    matrices = [gf2_core.identity(n) for n in dims]
    if k != k0:
      matrices[2] = gf2_core.shear(dims[2], k0, k)
    elif j != j0:
      matrices[1] = gf2_core.shear(dims[1], j0, j)
    else:
      matrices[0] = gf2_core.shear(dims[0], i0, i)
    step = GaugeTriple(*matrices)
    out = gauge3(out, step)
    gauge = gauge.compose(step)
  return out, gauge


def spto_labels(t):
  """Generator triples (i, j + m_A, k + m_A + m_B), one per nonzero cell."""
  t = as_tensor(t)
  p, q, _ = t.shape
  return frozenset(
      (int(i), int(j) + p, int(k) + p + q) for i, j, k in np.argwhere(t))
