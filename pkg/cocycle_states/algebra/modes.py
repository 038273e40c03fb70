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

"""Named modes used across the package and their validation."""

# default seed of every randomized check
RANDOM_SEED = 59185


class Forms(object):
  """Storage form of a cochain exponent table."""

  # table[g_1, ..., g_d] holds x(g_1, ..., g_d)
  INHOMOGENEOUS = 'inhomogeneous'

  # table[a_1, ..., a_d] holds x(e, a_1, ..., a_d); other arguments follow
  # from invariance under left translation
  HOMOGENEOUS = 'homogeneous'

  ALL = (INHOMOGENEOUS, HOMOGENEOUS)


class Conventions(object):
  """How a multilinear form is turned into gates on a lattice."""

  # exact diagonal gate with eigenvalues nu(e, a, b, ...) per simplex
  HOMOGENEOUS = 'homogeneous'

  # one CZ / CCZ per nonzero component per simplex
  PLAIN = 'plain'

  ALL = (HOMOGENEOUS, PLAIN)


class CensusConventions(object):
  """Generator set used by the orbit census."""

  # GL(m,2) on every tensor index
  GAUGE = 'gauge'

  # GL(m,2) on every tensor index and permutations of the three colors
  GAUGE_AND_COLORS = 'gauge_and_colors'

  # pick whichever of the two reproduces four irreducible classes at m=2
  AUTO = 'auto'

  ALL = (GAUGE, GAUGE_AND_COLORS, AUTO)


class Colors(object):
  """Lattice site colors; simplices list their sites in this order."""

  A = 0
  B = 1
  C = 2

  ALL = (A, B, C)
  NAMES = ('A', 'B', 'C')


class NormalForms(object):
  DIAGONAL = 'diagonal'
  DISJOINT = 'disjoint'
  EDGE_DISJOINT = 'edge_disjoint'

  ALL = (DIAGONAL, DISJOINT, EDGE_DISJOINT)


class Tasks(object):
  """Simulation tasks of the command line front end."""

  SYMMETRY = 'symmetry'
  REDUCE = 'reduce'
  EMBED = 'embed'
  SCHMIDT = 'schmidt'
  SWEEP = 'sweep'

  ALL = (SYMMETRY, REDUCE, EMBED, SCHMIDT, SWEEP)


def check_mode(value, options, kind):
  """Validates a mode string.

  Args:
    value: mode to check
    options: allowed values
    kind: what the mode is called in the error message

  Returns:
    value

  Raises:
    ValueError: if value is not one of options
  """
  if value not in options:
    raise ValueError('Unknown %s "%s", expected one of %s' %
                     (kind, value, ', '.join(str(o) for o in options)))
  return value
