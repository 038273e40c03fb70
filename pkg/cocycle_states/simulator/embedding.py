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

"""Embedding of a fractionally symmetric state into a globally G^3 symmetric one.

Every site gets 3m embedded layers; layer c*m + i is copy c of layer i. A
site of color c keeps its m original qubits in copy c, the other 2m layers
are padding qubits. The state is kept factorized as the original state
times the padding qubits, each in |+>, |0> or |1>.
"""

import typing

from absl import logging
import numpy as np
from cocycle_states.algebra import modes
from cocycle_states.simulator import cocycle_state
from cocycle_states.simulator import sign_state

PLUS = '+'
ZERO = '0'
ONE = '1'

_FLIPPED = {PLUS: PLUS, ZERO: ONE, ONE: ZERO}


class EmbeddedState(typing.NamedTuple):
  """Original state on its copies plus padding qubits.

  Attributes:
    base: SignState on the original (site, layer) qubits
    lat: Lattice
    m: layers per copy
    layer_map: original (site, layer) -> embedded (site, layer)
    pads: embedded (site, layer) -> PLUS, ZERO or ONE
  """
  base: sign_state.SignState
  lat: typing.Any
  m: int
  layer_map: typing.Dict[typing.Tuple[int, int], typing.Tuple[int, int]]
  pads: typing.Dict[typing.Tuple[int, int], str]

  @property
  def qubit_count(self):
    return 3 * self.m * self.lat.n_sites


def embed_g3(t, lat, convention=modes.Conventions.PLAIN, allow_large=False):
  """Embeds the state of t into copies selected by site color.

  Args:
    t: component matrix or tensor matching the lattice
    lat: Lattice
    convention: convention used to build the original state
    allow_large: skip the qubit count guard on the original state

  Returns:
    EmbeddedState
  """
  base = cocycle_state.build_state(lat, t, convention, allow_large)
  m = cocycle_state.as_form(t).m
  layer_map, pads = {}, {}
  for site in range(lat.n_sites):
    color = lat.colors[site]
    for layer in range(3 * m):
      if layer // m == color:
        layer_map[(site, layer % m)] = (site, layer)
      else:
        pads[(site, layer)] = PLUS
  logging.debug('embedded %d qubits into %d', base.n_qubits, 3 * m *
                lat.n_sites)
  return EmbeddedState(base, lat, m, layer_map, pads)


def apply_global_generator(e, generator):
  """Applies generator number `generator` of G^3 to every site.

  Generator c*m + i flips embedded layer c*m + i: on sites of color c that is
  original layer i, elsewhere a padding qubit.

  Args:
    e: EmbeddedState
    generator: 0 <= generator < 3m

  Returns:
    EmbeddedState
  """
  if not 0 <= generator < 3 * e.m:
    raise ValueError('G^3 of m=%d has %d generators, got %d' %
                     (e.m, 3 * e.m, generator))
  color, layer = divmod(generator, e.m)
  base = sign_state.apply_fractional_symmetry(e.base, e.lat, color, 1 << layer)
  pads = dict(e.pads)
  for (site, embedded_layer), value in e.pads.items():
    if embedded_layer == generator:
      pads[(site, embedded_layer)] = _FLIPPED[value]
  return e._replace(base=base, pads=pads)


def is_same_embedded(e1, e2):
  return e1.pads == e2.pads and sign_state.is_same_state(e1.base, e2.base)


def check_global_symmetry(e):
  """True iff every one of the 3m global generators leaves e invariant."""
  for generator in range(3 * e.m):
    if not is_same_embedded(e, apply_global_generator(e, generator)):
      logging.info('embedded state changes under generator %d', generator)
      return False
  return True


def corrupt_pad(e, site, layer, value=ZERO):
  """Sets one padding qubit to another single qubit state."""
  if (site, layer) not in e.pads:
    raise ValueError('(%d, %d) is not a padding qubit' % (site, layer))
  if value not in _FLIPPED:
    raise ValueError('Unknown pad state "%s"' % value)
  pads = dict(e.pads)
  pads[(site, layer)] = value
  return e._replace(pads=pads)


def to_sign_state(e, allow_large=False):
  """Materializes the embedded state.

  Embedded qubit (site, layer) is bit site*3m + layer of the table index.

  Args:
    e: EmbeddedState whose pads are all PLUS
    allow_large: skip the qubit count guard

  Returns:
    SignState

  Raises:
    ValueError: if a pad is not in |+>
  """
  if any(value != PLUS for value in e.pads.values()):
    raise ValueError('padding qubits outside |+> do not form a sign state')
  n = e.qubit_count
  sign_state.check_qubit_count(n, allow_large)
  qubits = [(site, layer) for site in range(e.lat.n_sites)
            for layer in range(3 * e.m)]
  # original qubits keep their relative order, pads become broadcast axes
  shape = [1 if q in e.pads else 2 for q in reversed(qubits)]
  view = e.base.table.reshape(shape)
  table = np.ascontiguousarray(np.broadcast_to(view, (2,) * n)).reshape(-1)
  return sign_state.SignState(qubits, table)
