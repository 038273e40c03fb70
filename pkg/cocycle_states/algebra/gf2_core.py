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

"""Exact GF(2) linear algebra.

Vectors, matrices and 3-index tensors are numpy uint8 arrays holding 0/1.
Elimination runs on packed row words (python ints, column j is bit j), so a
row operation is a single XOR of two words.
"""

import functools
import numpy as np

# largest m for which enumerate_gl is supported
MAX_GL_DIM = 4


class SingularMatrixError(ValueError):
  """Raised when a matrix has no inverse over GF(2)."""


def check_bits(a, name='array'):
  """Returns `a` as a uint8 array, checking that it only holds 0 and 1.

  Args:
    a: array like
    name: name used in the error message

  Returns:
    numpy uint8 array

  Raises:
    ValueError: if an entry is not 0 or 1
  """
  arr = np.asarray(a)
  if arr.size and (arr.min() < 0 or arr.max() > 1):
    raise ValueError('%s must only hold 0/1 entries' % name)
  return arr.astype(np.uint8)


def bit_vector(bits):
  return check_bits(np.asarray(bits).reshape(-1), 'bit vector')


def pack_bits(v):
  """Packs a bit vector into an int, entry i becomes bit i."""
  word = 0
  for i, bit in enumerate(np.asarray(v).reshape(-1)):
    if bit:
      word |= 1 << i
  return word


def unpack_bits(word, n):
  """Inverse of pack_bits for a vector of length n."""
  return np.array([(word >> i) & 1 for i in range(n)], dtype=np.uint8)


def identity(m):
  return np.eye(m, dtype=np.uint8)


def transpose(a):
  return np.ascontiguousarray(np.asarray(a, dtype=np.uint8).T)


def matmul(a, b):
  """Matrix product over GF(2)."""
  a = np.asarray(a, dtype=np.int64)
  b = np.asarray(b, dtype=np.int64)
  if a.shape[-1] != b.shape[0]:
    raise ValueError('dimension mismatch: %s x %s' % (a.shape, b.shape))
  return ((a @ b) & 1).astype(np.uint8)


def shear(m, i, j):
  """Identity matrix with one extra 1 at (i, j).

  Used as a gauge it adds slice i of a tensor index to slice j.

  Args:
    m: matrix size
    i: row of the off-diagonal entry
    j: column of the off-diagonal entry

  Returns:
    m x m uint8 matrix

  Raises:
    ValueError: if i == j or an index is out of range
  """
  if i == j:
    raise ValueError('shear needs i != j, got i=j=%d' % i)
  if not (0 <= i < m and 0 <= j < m):
    raise ValueError('shear indices (%d, %d) out of range for m=%d' % (i, j, m))
  a = identity(m)
  a[i, j] = 1
  return a


def cyclic_permutation(m):
  """Permutation matrix of the m-cycle: entry (i, i+1 mod m) is 1."""
  a = np.zeros((m, m), dtype=np.uint8)
  for i in range(m):
    a[i, (i + 1) % m] = 1
  return a


def _row_words(a):
  a = check_bits(a, 'matrix')
  if a.ndim != 2:
    raise ValueError('expected a matrix, got shape %s' % (a.shape,))
  words = []
  for row in a:
    packed = np.packbits(row, bitorder='little')
    words.append(int.from_bytes(packed.tobytes(), 'little'))
  return words


def _words_to_matrix(words, cols):
  out = np.zeros((len(words), cols), dtype=np.uint8)
  for r, word in enumerate(words):
    for j in range(cols):
      out[r, j] = (word >> j) & 1
  return out


def _eliminate(words, ncols):
  """Reduced row echelon form of packed rows.

  Pivots are searched column by column, taking the first row at or below the
  current pivot row; only columns < ncols are pivot candidates.

  Args:
    words: list of packed rows
    ncols: number of pivot columns

  Returns:
    (reduced rows, pivot columns)
  """
  words = list(words)
  pivots = []
  row = 0
  for col in range(ncols):
    bit = 1 << col
    for r in range(row, len(words)):
      if words[r] & bit:
        break
    else:
      continue
    words[row], words[r] = words[r], words[row]
    for r in range(len(words)):
      if r != row and words[r] & bit:
        words[r] ^= words[row]
    pivots.append(col)
    row += 1
    if row == len(words):
      break
  return words, pivots


def _rank_words(words):
  rank = 0
  words = [w for w in words if w]
  while words:
    pivot = words.pop()
    low = pivot & -pivot
    words = [w ^ pivot if w & low else w for w in words]
    words = [w for w in words if w]
    rank += 1
  return rank


def rank(a):
  """GF(2) rank of a matrix."""
  return _rank_words(_row_words(a))


def invert(a):
  """Inverse of a square GF(2) matrix.

  Args:
    a: m x m matrix

  Returns:
    the inverse matrix

  Raises:
    ValueError: if a is not square
    SingularMatrixError: if a is not in GL(m,2)
  """
  a = check_bits(a, 'matrix')
  if a.ndim != 2 or a.shape[0] != a.shape[1]:
    raise ValueError('invert needs a square matrix, got %s' % (a.shape,))
  m = a.shape[0]
  words = [w | (1 << (m + r)) for r, w in enumerate(_row_words(a))]
  words, pivots = _eliminate(words, m)
  if len(pivots) < m:
    raise SingularMatrixError('matrix of rank %d < %d' % (len(pivots), m))
  return _words_to_matrix([w >> m for w in words], m)


def solve_linear(a, b):
  """Solves a.x = b over GF(2).

  Free variables are set to 0, so the result is the first solution in
  lexicographic free-variable order.

  Args:
    a: rows x cols matrix
    b: bit vector of length rows

  Returns:
    bit vector x of length cols, or None if the system is inconsistent
  """
  a = check_bits(a, 'matrix')
  b = bit_vector(b)
  rows, cols = a.shape
  if b.shape[0] != rows:
    raise ValueError('b has length %d, expected %d' % (b.shape[0], rows))
  words = [w | (int(b[r]) << cols) for r, w in enumerate(_row_words(a))]
  words, pivots = _eliminate(words, cols)
  target = 1 << cols
  for word in words[len(pivots):]:
    if word & target:
      return None
  x = np.zeros(cols, dtype=np.uint8)
  for r, col in enumerate(pivots):
    x[col] = (words[r] >> cols) & 1
  return x


def row_basis(a):
  """Reduced row echelon basis of the row space, one basis vector per row."""
  a = check_bits(a, 'matrix')
  words, pivots = _eliminate(_row_words(a), a.shape[1])
  return _words_to_matrix(words[:len(pivots)], a.shape[1])


def null_space(a):
  """Basis of {x : a.x = 0}, one vector per row, ordered by free column."""
  a = check_bits(a, 'matrix')
  cols = a.shape[1]
  words, pivots = _eliminate(_row_words(a), cols)
  pivot_set = set(pivots)
  basis = []
  for free in range(cols):
    if free in pivot_set:
      continue
    x = np.zeros(cols, dtype=np.uint8)
    x[free] = 1
    for r, col in enumerate(pivots):
      x[col] = (words[r] >> free) & 1
    basis.append(x)
  return np.array(basis, dtype=np.uint8).reshape(len(basis), cols)


@functools.lru_cache(maxsize=None)
def _general_linear_group(m):
  mask = (1 << m) - 1
  matrices = []
  for code in range(1 << (m * m)):
    words = [(code >> (m * (m - 1 - r))) & mask for r in range(m)]
    if _rank_words(words) == m:
      matrix = _words_to_matrix(words, m)
      matrix.flags.writeable = False
      matrices.append(matrix)
  return tuple(matrices)


def enumerate_gl(m):
  """All invertible m x m GF(2) matrices.

  Matrices are ordered lexicographically on their packed row words (row 0
  first); the order is stable across runs.

  Args:
    m: matrix size, 1 <= m <= MAX_GL_DIM

  Returns:
    tuple of read-only uint8 matrices, prod_{i<m}(2^m - 2^i) of them

  Raises:
    ValueError: if m is out of the supported range
  """
  if not 1 <= m <= MAX_GL_DIM:
    raise ValueError('enumerate_gl supports 1 <= m <= %d, got %d' %
                     (MAX_GL_DIM, m))
  return _general_linear_group(m)


def gl_order(m):
  order = 1
  for i in range(m):
    order *= (1 << m) - (1 << i)
  return order


class BooleanFunction(object):
  """Truth table of a function from n bits to GF(2).

  Input bit i of the argument is bit i of the table index.
  """

  def __init__(self, n, table):
    table = check_bits(table, 'truth table').reshape(-1)
    if table.shape[0] != 1 << n:
      raise ValueError('truth table of %d inputs needs %d entries, got %d' %
                       (n, 1 << n, table.shape[0]))
    table = table.copy()
    table.flags.writeable = False
    self._n = n
    self._table = table

  @classmethod
  def from_callable(cls, n, fn):
    """Builds the table from fn applied to the int64 array of all inputs."""
    x = np.arange(1 << n, dtype=np.int64)
    return cls(n, np.asarray(fn(x)) & 1)

  @classmethod
  def constant(cls, n, value=0):
    return cls(n, np.full(1 << n, value & 1, dtype=np.uint8))

  @property
  def n(self):
    return self._n

  @property
  def table(self):
    return self._table

  def restrict(self, var, value):
    """Function of n-1 bits obtained by fixing input `var` to `value`."""
    if not 0 <= var < self._n:
      raise ValueError('variable %d out of range for n=%d' % (var, self._n))
    halves = self._table.reshape(-1, 2, 1 << var)
    return BooleanFunction(self._n - 1, halves[:, value & 1, :].reshape(-1))

  def xor(self, other):
    if other.n != self._n:
      raise ValueError('xor of functions with %d and %d inputs' %
                       (self._n, other.n))
    return BooleanFunction(self._n, self._table ^ other.table)

  def __eq__(self, other):
    if not isinstance(other, BooleanFunction):
      return NotImplemented
    return self._n == other.n and np.array_equal(self._table, other.table)

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return hash((self._n, self._table.tobytes()))

  def __repr__(self):
    return 'BooleanFunction(n=%d, weight=%d)' % (self._n,
                                                 int(self._table.sum()))


def affine_decomposition(f):
  """Finds c and a with f(x) = c xor a.x.

  Args:
    f: BooleanFunction

  Returns:
    (c, a) with c an int and a a bit vector of length f.n, or None when f is
    not affine
  """
  table = f.table
  c = int(table[0])
  coefficients = np.array([table[1 << i] ^ c for i in range(f.n)],
                          dtype=np.uint8)
  x = np.arange(1 << f.n, dtype=np.int64)
  candidate = np.full(1 << f.n, c, dtype=np.uint8)
  for i in np.flatnonzero(coefficients):
    candidate ^= ((x >> i) & 1).astype(np.uint8)
  if np.array_equal(candidate, table):
    return c, coefficients
  return None


def is_affine(f):
  return affine_decomposition(f) is not None


def essential_variables(f):
  """Inputs that f actually depends on, in increasing order."""
  variables = []
  for var in range(f.n):
    halves = f.table.reshape(-1, 2, 1 << var)
    if np.any(halves[:, 0, :] != halves[:, 1, :]):
      variables.append(var)
  return variables
