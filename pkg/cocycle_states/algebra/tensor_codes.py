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

"""Component tensors as packed integer codes.

Cell (i, j, k) of a tensor with dims (p, q, s) is bit (i*q + j)*s + k of its
code, so a 3x3x3 tensor is a 27-bit code. Gauge transformations and color
permutations are GF(2)-linear on codes and are applied to whole numpy arrays
of codes through per-chunk lookup tables.
"""

import functools
import itertools
import typing

from absl import logging
import numpy as np
from cocycle_states.algebra import gf2_core

# codes wider than this are refused
MAX_CODE_BITS = 27

# input bits resolved by one lookup table
TABLE_BITS = 9


class ResourceGuardError(ValueError):
  """Raised when a request exceeds the desk-scale limits."""


def check_dims(dims):
  dims = tuple(int(d) for d in dims)
  if len(dims) != 3 or min(dims) < 1:
    raise ValueError('tensor dims must be three positive sizes, got %s' %
                     (dims,))
  return dims


def code_bits(dims):
  p, q, s = check_dims(dims)
  return p * q * s


def tensor_to_code(t):
  return gf2_core.pack_bits(np.asarray(t).reshape(-1))


def code_to_tensor(code, dims):
  dims = check_dims(dims)
  return gf2_core.unpack_bits(int(code), code_bits(dims)).reshape(dims)


def cell_tensor(bit, dims):
  """Tensor whose only nonzero cell has the given bit position."""
  t = np.zeros(code_bits(dims), dtype=np.uint8)
  t[bit] = 1
  return t.reshape(dims)


class LinearCodeMap(object):
  """A GF(2)-linear map between codes.

  The map is given by the images of the single-cell codes; applying it to an
  array of codes costs one table lookup per TABLE_BITS input bits.
  """

  def __init__(self, images):
    self.images = tuple(int(x) for x in images)
    self.nbits = len(self.images)
    self.tables = []
    for start in range(0, self.nbits, TABLE_BITS):
      table = np.zeros(1, dtype=np.int64)
      for image in self.images[start:start + TABLE_BITS]:
        table = np.concatenate([table, table ^ image])
      self.tables.append(table)

  @classmethod
  def from_tensor_map(cls, dims, fn):
    """Map on codes induced by a linear map `fn` from tensors to tensors."""
    nbits = code_bits(dims)
    images = [tensor_to_code(fn(cell_tensor(b, dims))) for b in range(nbits)]
    return cls(images)

  def __call__(self, codes):
    codes = np.asarray(codes, dtype=np.int64)
    mask = (1 << TABLE_BITS) - 1
    out = self.tables[0][codes & mask]
    for c in range(1, len(self.tables)):
      out ^= self.tables[c][(codes >> (c * TABLE_BITS)) & mask]
    return out

  def apply(self, code):
    return int(self(np.array([code]))[0])


class VisitedBitmap(object):
  """Set of codes in [0, size), packed eight codes per byte."""

  def __init__(self, size):
    self.size = size
    self.words = np.zeros((size + 7) >> 3, dtype=np.uint8)

  def contains(self, codes):
    codes = np.asarray(codes, dtype=np.int64)
    return ((self.words[codes >> 3] >> (codes & 7)) & 1).astype(bool)

  def add(self, codes):
    """Marks codes, which must be sorted."""
    codes = np.asarray(codes, dtype=np.int64)
    if not codes.size:
      return
    index = codes >> 3
    bits = np.left_shift(1, codes & 7).astype(np.uint8)
    # one OR per byte: fancy assignment would drop bits sharing a byte
    starts = np.flatnonzero(np.r_[True, index[1:] != index[:-1]])
    self.words[index[starts]] |= np.bitwise_or.reduceat(bits, starts)

  def next_clear(self, start, chunk=1 << 20):
    """Smallest unmarked code >= start, or size if there is none."""
    while start < self.size:
      stop = min(start + chunk, self.size)
      clear = np.flatnonzero(~self.contains(np.arange(start, stop)))
      if clear.size:
        return start + int(clear[0])
      start = stop
    return self.size


class OrbitSearch(typing.NamedTuple):
  """Result of a breadth first search over an orbit.

  Attributes:
    codes: visited codes in discovery order
    hit: position of the first visited target code, or None
  """
  codes: np.ndarray
  hit: typing.Optional[int]


def orbit_search(start, maps, nbits, targets=None):
  """Breadth first search over the orbit of a code.

  Args:
    start: code to start from
    maps: list of LinearCodeMap generating the group
    nbits: code width
    targets: optional sorted array of codes; the search stops at the first
      layer containing one of them

  Returns:
    OrbitSearch
  """
  if nbits > MAX_CODE_BITS:
    raise ResourceGuardError('orbit search over %d-bit codes' % nbits)
  visited = VisitedBitmap(1 << nbits)
  visited.add([start])
  codes = [np.array([start], dtype=np.int64)]
  hit = None
  if targets is not None and np.isin(start, targets):
    hit = 0
  frontier = codes[0]
  total = 1
  while hit is None and frontier.size and maps:
    image = np.unique(np.concatenate([code_map(frontier) for code_map in maps]))
    frontier = image[~visited.contains(image)]
    if not frontier.size:
      break
    visited.add(frontier)
    codes.append(frontier)
    if targets is not None:
      found = np.flatnonzero(np.isin(frontier, targets))
      if found.size:
        hit = total + int(found[0])
    total += frontier.size
  logging.debug('orbit search from %d: %d codes, hit=%s', start, total, hit)
  return OrbitSearch(np.concatenate(codes), hit)


def _disjoint_index_pairs(n):
  """Ordered pairs of disjoint nonempty subsets of range(n), as bitmasks."""
  pairs = []
  for first in range(1, 1 << n):
    rest = ((1 << n) - 1) & ~first
    second = rest
    while second:
      pairs.append((first, second))
      second = (second - 1) & rest
  return sorted(pairs)


def _members(mask):
  return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def _nonzero_subset_codes(bits):
  codes = np.zeros(1, dtype=np.int64)
  for b in bits:
    codes = np.concatenate([codes, codes | (1 << b)])
  return codes[1:]


@functools.lru_cache(maxsize=None)
def _decomposable_codes(dims):
  p, q, s = dims
  pairs_a = [pair for pair in _disjoint_index_pairs(p) if pair[0] < pair[1]]
  pairs_b = _disjoint_index_pairs(q)
  pairs_c = _disjoint_index_pairs(s)
  parts = [np.zeros(0, dtype=np.int64)]
  for (a1, a2), (b1, b2), (c1, c2) in itertools.product(pairs_a, pairs_b,
                                                        pairs_c):
    first = _nonzero_subset_codes(
        (i * q + j) * s + k for i, j, k in itertools.product(
            _members(a1), _members(b1), _members(c1)))
    second = _nonzero_subset_codes(
        (i * q + j) * s + k for i, j, k in itertools.product(
            _members(a2), _members(b2), _members(c2)))
    parts.append((first[:, None] | second[None, :]).ravel())
  codes = np.unique(np.concatenate(parts))
  codes.flags.writeable = False
  logging.debug('dims %s: %d decomposable codes', dims, codes.size)
  return codes


def decomposable_codes(dims):
  """Sorted codes of every decomposable tensor of the given dims.

  A tensor is decomposable iff it is the sum of two nonzero tensors living on
  index boxes that are disjoint at every color.

  Args:
    dims: (p, q, s)

  Returns:
    read-only sorted int64 array
  """
  dims = check_dims(dims)
  if code_bits(dims) > MAX_CODE_BITS:
    raise ResourceGuardError('decomposable codes for dims %s' % (dims,))
  return _decomposable_codes(dims)


@functools.lru_cache(maxsize=None)
def _decomposable_bitmap(dims):
  bitmap = VisitedBitmap(1 << code_bits(dims))
  bitmap.add(_decomposable_codes(dims))
  return bitmap


def decomposable_bitmap(dims):
  """decomposable_codes(dims) as a packed lookup set, shared between calls."""
  dims = check_dims(dims)
  if code_bits(dims) > MAX_CODE_BITS:
    raise ResourceGuardError('decomposable codes for dims %s' % (dims,))
  return _decomposable_bitmap(dims)
