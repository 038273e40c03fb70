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

"""Tests for cocycle_states.algebra.orbit_census."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np
from cocycle_states.algebra import modes
from cocycle_states.algebra import orbit_census
from cocycle_states.algebra import tensor_codes
from cocycle_states.algebra import tensor_forms
from cocycle_states.algebra import test_utils

GAUGE = modes.CensusConventions.GAUGE
GAUGE_AND_COLORS = modes.CensusConventions.GAUGE_AND_COLORS


class OrbitCensusTest(parameterized.TestCase):

  def setUp(self):
    super(OrbitCensusTest, self).setUp()
    self.rng = test_utils.rng()

  @parameterized.named_parameters(
      ('m1_gauge', 1, GAUGE, 2, 1),
      ('m1_colors', 1, GAUGE_AND_COLORS, 2, 1),
      ('m2_gauge', 2, GAUGE, 8, 6),
      ('m2_colors', 2, GAUGE_AND_COLORS, 6, 4))
  def test_census(self, m, convention, orbits, irreducible):
    census = orbit_census.classify_orbits(m, convention)
    self.assertEqual(census.m, m)
    self.assertEqual(census.convention, convention)
    self.assertEqual(census.orbit_count, orbits)
    self.assertEqual(census.irreducible_class_count, irreducible)
    self.assertEqual(sum(census.orbit_sizes), 2**(m**3))
    self.assertLen(census.orbit_sizes, orbits)
    self.assertEqual(census.orbit_sizes[0], 1)

  def test_select_convention(self):
    self.assertEqual(orbit_census.select_convention(), GAUGE_AND_COLORS)

  def test_auto_convention(self):
    census = orbit_census.classify_orbits(2)
    self.assertEqual(census.convention, GAUGE_AND_COLORS)
    self.assertEqual(census.irreducible_class_count,
                     orbit_census.REFERENCE_IRREDUCIBLE_COUNTS[2])

  def test_threads_do_not_change_result(self):
    single = orbit_census.classify_orbits(2, GAUGE)
    pooled = orbit_census.classify_orbits(2, GAUGE, threads=3)
    self.assertEqual(single.orbit_sizes, pooled.orbit_sizes)
    np.testing.assert_array_equal(single.labels, pooled.labels)
    np.testing.assert_array_equal(single.irreducible, pooled.irreducible)

  def test_irreducible_representatives(self):
    census = orbit_census.classify_orbits(2, GAUGE_AND_COLORS)
    representatives = census.irreducible_representatives()
    self.assertLen(representatives, 4)
    for code in representatives:
      t = tensor_codes.code_to_tensor(code, (2, 2, 2))
      self.assertTrue(tensor_forms.is_irreducible(t))
      self.assertEqual(census.label_of(t), code)

  def test_label_is_gauge_invariant(self):
    census = orbit_census.classify_orbits(2, GAUGE)
    for _ in range(20):
      t = test_utils.random_bits(self.rng, (2, 2, 2))
      g = tensor_forms.GaugeTriple(
          *[test_utils.random_invertible(self.rng, 2) for _ in range(3)])
      label = census.label_of(t)
      self.assertIn(label, census.labels)
      self.assertEqual(census.label_of(tensor_forms.gauge3(t, g)), label)

  @parameterized.parameters(GAUGE, GAUGE_AND_COLORS)
  def test_census_without_generators(self, convention):
    self.assertEmpty(orbit_census.census_maps(1, convention))
    census = orbit_census.classify_orbits(1, convention)
    self.assertEqual(census.orbit_sizes, (1, 1))
    self.assertEqual(census.irreducible_representatives(), [1])
    self.assertEqual(census.label_of(np.ones((1, 1, 1))), 1)

  def test_label_of_wrong_size(self):
    census = orbit_census.classify_orbits(1, GAUGE)
    with self.assertRaises(ValueError):
      census.label_of(np.zeros((2, 2, 2)))

  def test_guards(self):
    with self.assertRaises(tensor_codes.ResourceGuardError):
      orbit_census.classify_orbits(4)
    with self.assertRaises(ValueError):
      orbit_census.classify_orbits(0)
    with self.assertRaises(ValueError):
      orbit_census.classify_orbits(2, 'unknown')

  def test_census_m3(self):
    if not test_utils.large_tests_enabled():
      self.skipTest('set %s to run the m=3 census' % test_utils.LARGE_TESTS_ENV)
    census = orbit_census.classify_orbits(3, GAUGE_AND_COLORS, threads=4)
    self.assertEqual(sum(census.orbit_sizes), 2**27)
    self.assertEqual(census.irreducible_class_count,
                     orbit_census.REFERENCE_IRREDUCIBLE_COUNTS[3])


if __name__ == '__main__':
  absltest.main()
