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

"""Derived run settings and resource guards."""

from cocycle_states.algebra import modes
from cocycle_states.algebra import orbit_census
from cocycle_states.algebra import tensor_codes
from cocycle_states.run import commands
from cocycle_states.simulator import lattice
from cocycle_states.simulator import sign_state


def parse_ints(value, flag):
  """Parses a comma separated list of integers, None if empty."""
  if not value:
    return None
  try:
    return tuple(int(v) for v in value.split(','))
  except ValueError:
    raise ValueError('--%s expects comma separated integers, got "%s"' %
                     (flag, value))


def update_flags(flags):
  """Update flags with derived settings.

  Loads the input document, builds the lattice and parses cuts and fiducial
  cells. Resource guards run here, before any heavy work starts.

  Args:
    flags: parsed command line flags

  Returns:
    Updated flags

  Raises:
    ValueError: on invalid flag values or combinations
    ResourceGuardError: if the requested state or census is above the
      desk-scale limits and --allow-large is not set
  """
  if flags.threads < 1:
    raise ValueError('--threads must be positive, got %d' % flags.threads)
  if flags.seed < 0:
    raise ValueError('--seed must be non-negative, got %d' % flags.seed)

  upd_flags = flags
  upd_flags.document = None
  upd_flags.lat = None
  upd_flags.cut_sites = None
  upd_flags.fiducial_cell = None

  if flags.command in (commands.CHECK, commands.NORMAL_FORM):
    upd_flags.document = commands.load_input(flags.input)
  if flags.command == commands.NORMAL_FORM:
    if flags.mode:
      modes.check_mode(flags.mode, modes.NormalForms.ALL, 'normal form')
    upd_flags.fiducial_cell = parse_ints(flags.fiducial, 'fiducial')
  elif flags.command == commands.CLASSIFY:
    modes.check_mode(flags.convention, modes.CensusConventions.ALL,
                     'census convention')
    if flags.m > orbit_census.MAX_CENSUS_M:
      raise tensor_codes.ResourceGuardError(
          'orbit census supports m <= %d, got %d' %
          (orbit_census.MAX_CENSUS_M, flags.m))
  elif flags.command == commands.SIMULATE:
    modes.check_mode(flags.task, modes.Tasks.ALL, 'task')
    if flags.trials < 0:
      raise ValueError('--trials must be non-negative, got %d' % flags.trials)
    upd_flags.lat = lattice.lattice_from_name(flags.lattice)
    upd_flags.cut_sites = parse_ints(flags.cut, 'cut')
    upd_flags.fiducial_cell = parse_ints(flags.fiducial, 'fiducial')
    if flags.task != modes.Tasks.SWEEP:
      doc = commands.load_input(flags.input)
      upd_flags.document = doc
      sign_state.check_qubit_count(
          upd_flags.lat.n_sites * max(doc.dims), flags.allow_large)
    elif flags.input:
      raise ValueError('task sweep enumerates cocycles and reads no --input')
  return upd_flags
