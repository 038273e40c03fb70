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

"""Exhaustive check that fractional symmetry singles out multilinear states."""

import itertools
import typing

from absl import logging
import numpy as np
from cocycle_states.algebra import cohomology
from cocycle_states.algebra import tensor_codes
from cocycle_states.simulator import cocycle_state
from cocycle_states.simulator import lattice
from cocycle_states.simulator import sign_state

# largest chain swept for degree 2
MAX_SWEEP_CHAIN = 6


class SweepReport(typing.NamedTuple):
  """Outcome of lemma1_sweep.

  Attributes:
    degree: cocycle degree
    m: group rank
    lattice: lattice name
    cocycle_count: number of sign-valued cocycles enumerated
    symmetric_count: cocycles whose state is symmetric under every color
    symmetric_state_count: distinct symmetric states
    multilinear_state_count: distinct states of multilinear forms
    agrees: symmetric states are exactly the multilinear states
  """
  degree: int
  m: int
  lattice: str
  cocycle_count: int
  symmetric_count: int
  symmetric_state_count: int
  multilinear_state_count: int
  agrees: bool


def _check_scale(degree, m, lat, allow_large):
  if degree not in (2, 3):
    raise ValueError('sweeps cover degrees 2 and 3, got %d' % degree)
  if degree != lat.degree:
    raise ValueError('degree %d sweep on %s' % (degree, lat.name))
  if degree == 2:
    fits = m <= 2 and lat.n_sites <= MAX_SWEEP_CHAIN
  else:
    fits = m == 1 and lat.kind == lattice.UNION_JACK and lat.shape == (2, 2)
  if fits:
    return
  message = 'degree %d sweep with m=%d on %s' % (degree, m, lat.name)
  if not allow_large:
    raise tensor_codes.ResourceGuardError(message)
  logging.warning('running %s', message)


def is_fractionally_symmetric(s, lat, m):
  """True iff s is invariant under every element on every single color."""
  for color in range(lat.degree):
    for g in range(1, 1 << m):
      moved = sign_state.apply_fractional_symmetry(s, lat, color, g)
      if not sign_state.is_same_state(s, moved):
        return False
  return True


def _state_key(s):
  return s.normalized_table().tobytes()


def lemma1_sweep(degree, m, lat, allow_large=False):
  """Compares symmetric cocycle states with multilinear states.

  Every sign-valued cocycle of (Z_2)^m of the given degree is turned into a
  homogeneous-convention state and tested for invariance on each color; the
  set of symmetric states must equal the set of states of all multilinear
  forms.

  Args:
    degree: 2 or 3
    m: group rank
    lat: chain of at most 6 sites (degree 2, m <= 2) or the 2x2 Union Jack
      torus (degree 3, m = 1)
    allow_large: run outside those scales

  Returns:
    SweepReport
  """
  _check_scale(degree, m, lat, allow_large)
  logging.info('sweep degree=%d m=%d on %s', degree, m, lat.name)
  symmetric = set()
  cocycle_count = symmetric_count = 0
  for cocycle in cohomology.enumerate_cocycles(m, degree):
    cocycle_count += 1
    state = cocycle_state.build_cochain_state(lat, cocycle, allow_large)
    if is_fractionally_symmetric(state, lat, m):
      symmetric_count += 1
      symmetric.add(_state_key(state))
  multilinear = set()
  for bits in itertools.product((0, 1), repeat=m**degree):
    components = np.array(bits, dtype=np.uint8).reshape((m,) * degree)
    state = cocycle_state.build_state(lat, components, allow_large=allow_large)
    multilinear.add(_state_key(state))
  report = SweepReport(degree, m, lat.name, cocycle_count, symmetric_count,
                       len(symmetric), len(multilinear),
                       symmetric == multilinear)
  logging.info('sweep result: %s', report)
  return report
