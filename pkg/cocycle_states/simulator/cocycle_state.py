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

"""Cocycle states on lattices and their reduction to Union Jack states.

Site s carries m qubits (s, 0), ..., (s, m-1); qubit (s, i) is bit s*m + i of
the phase table index. Reshaped to (2^m,) * n_sites the table is indexed by
the group element held by each site, site s being axis n_sites - 1 - s.
"""

import typing

from absl import logging
import numpy as np
from cocycle_states.algebra import cohomology
from cocycle_states.algebra import gf2_core
from cocycle_states.algebra import modes
from cocycle_states.algebra import tensor_forms
from cocycle_states.simulator import lattice
from cocycle_states.simulator import sign_state


def as_form(t):
  if isinstance(t, cohomology.MultilinearForm):
    return t
  return cohomology.MultilinearForm(t)


def state_qubits(lat, m):
  return tuple((site, layer) for site in range(lat.n_sites)
               for layer in range(m))


def _phase_from_gates(lat, m, gate, allow_large):
  """XORs one gate table per simplex into the site-indexed phase table."""
  n = lat.n_sites
  sign_state.check_qubit_count(n * m, allow_large)
  phase = np.zeros((1 << m,) * n, dtype=np.uint8)
  for simplex in lat.simplices:
    axes = np.array([n - 1 - site for site in simplex])
    order = np.argsort(axes)
    shape = [1] * n
    for axis in axes:
      shape[axis] = 1 << m
    phase ^= np.transpose(gate, order).reshape(shape)
  return sign_state.SignState(state_qubits(lat, m), phase.reshape(-1))


def _check_arity(lat, degree):
  if degree != lat.degree:
    raise ValueError('degree %d cochain on a lattice of %d-simplices' %
                     (degree, lat.degree))


def build_state(lat, t, convention=modes.Conventions.HOMOGENEOUS,
                allow_large=False):
  """State of a multilinear form.

  The homogeneous convention applies the diagonal gate with eigenvalues
  nu(e, a_1, ..., a_d) on every simplex; the plain convention applies one CZ
  (d=2) or CCZ (d=3) per nonzero component, i.e. the form itself evaluated
  on the site values. Arguments are bound to site colors in order A, B, C.

  Args:
    lat: Lattice
    t: MultilinearForm or its components
    convention: modes.Conventions value
    allow_large: skip the qubit count guard

  Returns:
    SignState

  Raises:
    ValueError: if the form degree does not match the lattice
  """
  modes.check_mode(convention, modes.Conventions.ALL, 'state convention')
  form = as_form(t)
  _check_arity(lat, form.degree)
  cochain = form.to_cochain()
  if convention == modes.Conventions.HOMOGENEOUS:
    cochain = cohomology.convert_form(cochain, modes.Forms.HOMOGENEOUS)
  return _phase_from_gates(lat, form.m, cochain.table, allow_large)


def build_cochain_state(lat, cochain, allow_large=False):
  """Homogeneous-convention state of an arbitrary cochain."""
  _check_arity(lat, cochain.degree)
  gate = cohomology.convert_form(cochain, modes.Forms.HOMOGENEOUS).table
  return _phase_from_gates(lat, cochain.m, gate, allow_large)


def _layer_lookup(chi):
  """Index map v -> chi.v on group elements."""
  m = chi.shape[0]
  bits = cohomology.coordinate_bits(m)
  images = (bits @ chi.astype(np.int64).T) & 1
  return images @ (1 << np.arange(m, dtype=np.int64))


def apply_gauge(s, lat, gauge):
  """Layer-mixing basis change realizing a gauge on a state.

  The new phase at site values y is the old phase at chi_c y on every site
  of color c, which maps the state of t to the state of gauge3(t, gauge)
  (gauge2 for chains).

  Args:
    s: unmeasured SignState built on lat
    lat: Lattice
    gauge: GaugePair or GaugeTriple with one matrix per color

  Returns:
    SignState
  """
  if s.measured:
    raise ValueError('gauge of a measured state')
  if len(gauge) != lat.degree:
    raise ValueError('gauge of %d colors on a %d-colored lattice' %
                     (len(gauge), lat.degree))
  m = gauge[0].shape[0]
  n = lat.n_sites
  if s.qubits != state_qubits(lat, m):
    raise ValueError('state does not hold %d layers per site' % m)
  lookups = [_layer_lookup(chi) for chi in gauge]
  table = s.table.reshape((1 << m,) * n)
  for site in range(n):
    table = np.take(table, lookups[lat.colors[site]], axis=n - 1 - site)
  return s.with_table(table.reshape(-1))


class MeasurementRecord(typing.NamedTuple):
  """Measurements of a reduction and the byproduct certificate.

  Attributes:
    measured: measured (site, layer) labels, in order
    outcomes: outcome of each measurement
    byproduct: (c, a) with residual xor reference = c xor a.z, or None
    trials: number of random outcome patterns checked
    trials_passed: patterns whose residual also differed by an affine function
  """
  measured: typing.Tuple[typing.Tuple[int, int], ...]
  outcomes: typing.Tuple[int, ...]
  byproduct: typing.Optional[typing.Tuple[int, np.ndarray]]
  trials: int
  trials_passed: int


class Reduction(typing.NamedTuple):
  residual: sign_state.SignState
  record: MeasurementRecord
  ok: bool


def union_jack_state(lat):
  """The m=1 Union Jack reference state on a torus."""
  return build_state(lat, np.ones((1, 1, 1)), modes.Conventions.PLAIN)


def _residual_difference(residual, reference):
  if [site for site, _ in residual.qubits] != [
      site for site, _ in reference.qubits]:
    raise ValueError('residual does not keep one qubit per site')
  return residual.phase.xor(reference.phase)


def reduce_to_union_jack(t, lat, fiducial=None, byproduct_trials=0,
                         seed=modes.RANDOM_SEED, allow_large=False):
  """Reduces the state of t to one Union Jack state by Z measurements.

  The edge disjoint form gauge is applied to the plain-convention state;
  every layer but the fiducial one of each color (i0 on A, j0 on B, k0 on C)
  is then measured with outcome 0. The reduction succeeds when the gauge
  maps the state to the state of the transformed tensor and the residual
  differs from the reference Union Jack state by an affine function,
  i.e. a Pauli Z byproduct.

  Args:
    t: nonzero m x m x m component tensor, m <= 3
    lat: Union Jack torus
    fiducial: cell kept, or None for the first nonzero cell
    byproduct_trials: extra random outcome patterns to check
    seed: seed of the outcome patterns
    allow_large: skip the qubit count guard

  Returns:
    Reduction

  Raises:
    ValueError: on a chain lattice, zero tensor or zero fiducial cell
  """
  if lat.kind != lattice.UNION_JACK:
    raise ValueError('reduction needs a Union Jack torus, got %s' % lat.name)
  t = tensor_forms.as_tensor(t)
  m = t.shape[0]
  if len(set(t.shape)) != 1 or m > tensor_forms.MAX_EXHAUSTIVE_DIM:
    raise ValueError('reduction needs an m x m x m tensor with m <= %d, '
                     'got %s' % (tensor_forms.MAX_EXHAUSTIVE_DIM, t.shape))
  if fiducial is None:
    fiducial = tensor_forms.first_cell(t)
  fiducial = tuple(int(x) for x in fiducial)
  reduced, gauge = tensor_forms.edge_disjoint_form(t, fiducial)
  logging.info('reducing %d cells on %s, fiducial %s', int(t.sum()), lat.name,
               fiducial)

  state = build_state(lat, t, modes.Conventions.PLAIN, allow_large)
  gauged = apply_gauge(state, lat, gauge)
  gauge_ok = sign_state.is_same_state(
      gauged, build_state(lat, reduced, modes.Conventions.PLAIN, allow_large))

  others = [(site, layer) for site, layer in gauged.qubits
            if layer != fiducial[lat.colors[site]]]
  residual = sign_state.measure_many(gauged, [(q, 0) for q in others])
  reference = union_jack_state(lat)
  byproduct = gf2_core.affine_decomposition(
      _residual_difference(residual, reference))

  passed = 0
  rng = np.random.default_rng(seed)
  for _ in range(byproduct_trials):
    outcomes = rng.integers(0, 2, size=len(others))
    trial = sign_state.measure_many(gauged, zip(others, outcomes.tolist()))
    if gf2_core.is_affine(_residual_difference(trial, reference)):
      passed += 1

  record = MeasurementRecord(
      tuple(others), (0,) * len(others), byproduct, byproduct_trials, passed)
  ok = gauge_ok and byproduct is not None and passed == byproduct_trials
  logging.info('reduction on %s: %d measurements, ok=%s', lat.name,
               len(others), ok)
  return Reduction(residual, record, ok)
