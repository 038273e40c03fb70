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

"""Equal-magnitude real states stored as phase tables.

The amplitude of basis string z is (-1)^phase(z) / sqrt(2^N). Qubit number q
of a state is bit q of the table index, so in the C-ordered view of shape
(2,) * N it is axis N - 1 - q.
"""

from absl import logging
import numpy as np
from cocycle_states.algebra import gf2_core
from cocycle_states.algebra import tensor_codes

# largest state materialized without allow_large
MAX_QUBITS = 26

# largest side of a Schmidt decomposition
MAX_SCHMIDT_SIDE = 13


def check_qubit_count(n, allow_large=False):
  if n > MAX_QUBITS:
    if not allow_large:
      raise tensor_codes.ResourceGuardError(
          'state of %d qubits exceeds %d' % (n, MAX_QUBITS))
    logging.warning('materializing a %d qubit state', n)


class SignState(object):
  """Phase table over the unmeasured qubits.

  Attributes:
    qubits: (site, layer) label of every qubit, in table bit order
    phase: BooleanFunction of len(qubits) inputs
    measured: ((site, layer), outcome) of every measurement so far
  """

  def __init__(self, qubits, phase, measured=()):
    qubits = tuple((int(s), int(l)) for s, l in qubits)
    if len(set(qubits)) != len(qubits):
      raise ValueError('duplicate qubit labels')
    if not isinstance(phase, gf2_core.BooleanFunction):
      phase = gf2_core.BooleanFunction(len(qubits), phase)
    if phase.n != len(qubits):
      raise ValueError('phase of %d inputs for %d qubits' %
                       (phase.n, len(qubits)))
    self.qubits = qubits
    self.phase = phase
    self.measured = tuple(measured)

  @classmethod
  def product(cls, qubits):
    """|+> on every qubit."""
    qubits = tuple(qubits)
    return cls(qubits, gf2_core.BooleanFunction.constant(len(qubits)))

  @property
  def n_qubits(self):
    return len(self.qubits)

  @property
  def table(self):
    return self.phase.table

  def position(self, label):
    label = tuple(int(x) for x in label)
    if any(label == done for done, _ in self.measured):
      raise ValueError('qubit %s is already measured' % (label,))
    try:
      return self.qubits.index(label)
    except ValueError:
      raise ValueError('no qubit %s in the state' % (label,))

  def normalized_table(self):
    """Phase table with the global sign fixed by phase(0...0) = 0."""
    return self.table ^ self.table[0]

  def with_table(self, table):
    return SignState(self.qubits, table, self.measured)

  def __repr__(self):
    return 'SignState(qubits=%d, measured=%d)' % (self.n_qubits,
                                                  len(self.measured))


def is_same_state(s1, s2):
  """Equality up to a global sign.

  Args:
    s1: SignState
    s2: SignState

  Returns:
    bool

  Raises:
    ValueError: if the states carry different qubit labels
  """
  if s1.qubits != s2.qubits:
    raise ValueError('states have different qubits: %s vs %s' %
                     (s1.qubits, s2.qubits))
  return np.array_equal(s1.normalized_table(), s2.normalized_table())


def flip_qubits(s, labels):
  """Applies X to every listed qubit."""
  n = s.n_qubits
  axes = [n - 1 - s.position(label) for label in labels]
  if not axes:
    return s
  view = s.table.reshape((2,) * n)
  return s.with_table(np.flip(view, axis=axes).reshape(-1))


def apply_fractional_symmetry(s, lat, color, g):
  """Applies group element g to every site of one color.

  Bit i of g flips layer i of each site of that color.

  Args:
    s: SignState
    lat: Lattice the state lives on
    color: site color
    g: group element as an int

  Returns:
    SignState
  """
  labels = [(site, layer) for site, layer in s.qubits
            if lat.colors[site] == color and (g >> layer) & 1]
  return flip_qubits(s, labels)


def measure_z(s, qubit, outcome):
  """Projects one qubit on the Z eigenstate of the given outcome.

  Both outcomes have probability 1/2; the measured qubit is dropped and the
  phase is restricted to strings with that bit.

  Args:
    s: SignState
    qubit: (site, layer) label
    outcome: 0 or 1

  Returns:
    SignState

  Raises:
    ValueError: if the qubit was already measured or is unknown
  """
  if outcome not in (0, 1):
    raise ValueError('outcome must be 0 or 1, got %s' % (outcome,))
  p = s.position(qubit)
  qubits = s.qubits[:p] + s.qubits[p + 1:]
  measured = s.measured + ((s.qubits[p], int(outcome)),)
  return SignState(qubits, s.phase.restrict(p, outcome), measured)


def measure_many(s, outcomes):
  """Measures a list of (qubit, outcome) pairs in order."""
  for qubit, outcome in outcomes:
    s = measure_z(s, qubit, outcome)
  return s


def measurement_byproduct(s, qubit):
  """Phase difference between the outcome 1 and outcome 0 branches."""
  return measure_z(s, qubit, 1).phase.xor(measure_z(s, qubit, 0).phase)


def _sign_matrix_rank(matrix):
  """Rank over the rationals of an integer matrix (fraction-free Bareiss)."""
  work = [list(row) for row in matrix]
  rows = len(work)
  cols = len(work[0]) if rows else 0
  rank = 0
  previous = 1
  for col in range(cols):
    pivot = next((r for r in range(rank, rows) if work[r][col]), None)
    if pivot is None:
      continue
    work[rank], work[pivot] = work[pivot], work[rank]
    top = work[rank]
    for r in range(rank + 1, rows):
      lead = work[r][col]
      work[r] = [(x * top[col] - y * lead) // previous
                 for x, y in zip(work[r], top)]
    previous = top[col]
    rank += 1
    if rank == rows:
      break
  return rank


def _unique_up_to_sign(matrix):
  """Keeps one row of every class of rows equal up to sign."""
  signs = matrix[:, :1]
  return np.unique(matrix * signs, axis=0)


def schmidt_rank_log2(s, cut):
  """Log2 of the Schmidt rank across a bipartition of the qubits.

  Args:
    s: SignState
    cut: qubit labels on one side

  Returns:
    int

  Raises:
    ResourceGuardError: if a side holds more than MAX_SCHMIDT_SIDE qubits
    ValueError: if the rank is not a power of two
  """
  n = s.n_qubits
  side = sorted(s.position(label) for label in set(map(tuple, cut)))
  rest = [q for q in range(n) if q not in side]
  if max(len(side), len(rest)) > MAX_SCHMIDT_SIDE:
    raise tensor_codes.ResourceGuardError(
        'Schmidt cut of %d | %d qubits' % (len(side), len(rest)))
  view = s.table.reshape((2,) * n)
  order = [n - 1 - q for q in side] + [n - 1 - q for q in rest]
  phases = np.transpose(view, order).reshape(1 << len(side), 1 << len(rest))
  signs = 1 - 2 * phases.astype(np.int64)
  signs = _unique_up_to_sign(signs)
  signs = _unique_up_to_sign(signs.T)
  rank = _sign_matrix_rank(signs.tolist())
  if rank & (rank - 1):
    raise ValueError('Schmidt rank %d is not a power of two' % rank)
  logging.debug('Schmidt rank across %d | %d qubits: %d', len(side),
                len(rest), rank)
  return rank.bit_length() - 1


def site_cut(s, sites):
  """Labels of every qubit of the given sites."""
  sites = set(sites)
  return [label for label in s.qubits if label[0] in sites]
