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

"""Tests for cocycle_states.algebra.cohomology."""

import itertools
from absl.testing import absltest
from absl.testing import parameterized
import numpy as np
from cocycle_states.algebra import cohomology
from cocycle_states.algebra import modes
from cocycle_states.algebra import test_utils

INHOM = modes.Forms.INHOMOGENEOUS
HOM = modes.Forms.HOMOGENEOUS


def all_cochains(m, degree, form):
  size = 1 << (m * degree)
  for bits in itertools.product((0, 1), repeat=size):
    yield cohomology.Cochain(m, degree, np.array(bits), form)


class CohomologyTest(parameterized.TestCase):

  def setUp(self):
    super(CohomologyTest, self).setUp()
    self.rng = test_utils.rng()

  def random_cochain(self, m, degree, form=INHOM):
    table = test_utils.random_bits(self.rng, (1 << m,) * degree)
    return cohomology.Cochain(m, degree, table, form)

  def test_group(self):
    group = cohomology.GroupZ2m(3)
    self.assertEqual(group.order, 8)
    self.assertEqual(group.identity, 0)
    self.assertEqual(group.element([1, 0, 1]), 5)
    np.testing.assert_array_equal(group.coordinates(6), [0, 1, 1])
    for g in group.elements():
      self.assertEqual(group.multiply(g, group.inverse(g)), group.identity)

  def test_cochain_size(self):
    with self.assertRaises(ValueError):
      cohomology.Cochain(1, 2, [0, 1, 0])
    with self.assertRaises(ValueError):
      cohomology.Cochain(1, 1, [0, 1], form='bad')

  @parameterized.parameters(INHOM, HOM)
  def test_coboundary_of_trivial(self, form):
    for degree in range(4):
      x = cohomology.Cochain.trivial(2, degree, form)
      self.assertTrue(cohomology.coboundary(x).is_trivial())
      self.assertEqual(cohomology.coboundary(x).degree, degree + 1)

  def test_coboundary_of_character(self):
    x = cohomology.Cochain(1, 1, [0, 1])
    self.assertTrue(cohomology.coboundary(x).is_trivial())

  def test_coboundary_of_constant(self):
    x = cohomology.Cochain(1, 1, [1, 1])
    np.testing.assert_array_equal(
        cohomology.coboundary(x).table, np.ones((2, 2)))

  @parameterized.parameters(INHOM, HOM)
  def test_coboundary_squares_to_zero_exhaustive(self, form):
    for degree in range(3):
      for x in all_cochains(1, degree, form):
        twice = cohomology.coboundary(cohomology.coboundary(x))
        self.assertTrue(twice.is_trivial(), msg=repr(x))

  @parameterized.parameters(INHOM, HOM)
  def test_coboundary_squares_to_zero_random(self, form):
    for i in range(1000):
      x = self.random_cochain(2, i % 3, form)
      twice = cohomology.coboundary(cohomology.coboundary(x))
      self.assertTrue(twice.is_trivial())

  def test_coboundary_commutes_with_convert_form(self):
    for degree in range(3):
      for _ in range(20):
        x = self.random_cochain(2, degree)
        homogeneous_first = cohomology.coboundary(
            cohomology.convert_form(x, HOM))
        inhomogeneous_first = cohomology.convert_form(
            cohomology.coboundary(x), HOM)
        self.assertEqual(homogeneous_first, inhomogeneous_first)

  def test_is_cocycle(self):
    self.assertTrue(cohomology.is_cocycle(cohomology.cluster_cocycle()))
    self.assertTrue(cohomology.is_cocycle(cohomology.union_jack_cocycle()))
    x = cohomology.Cochain.from_function(1, 2, lambda g, h: g)
    self.assertFalse(cohomology.is_cocycle(x))
    self.assertEqual(cohomology.coboundary(x)(1, 0, 0), 1)

  def test_is_coboundary(self):
    self.assertTrue(cohomology.is_coboundary(cohomology.Cochain.trivial(1, 2)))
    for _ in range(10):
      xi = self.random_cochain(2, 1)
      self.assertTrue(cohomology.is_coboundary(cohomology.coboundary(xi)))
    self.assertFalse(cohomology.is_coboundary(cohomology.cluster_cocycle()))
    with self.assertRaises(ValueError):
      cohomology.is_coboundary(cohomology.Cochain.trivial(1, 0))

  def test_cluster_is_not_a_coboundary_by_exhaustion(self):
    cluster = cohomology.cluster_cocycle()
    for xi in all_cochains(1, 1, INHOM):
      self.assertNotEqual(cohomology.coboundary(xi), cluster)

  def test_cocycle_count_by_filter_and_rank(self):
    filtered = sum(
        1 for x in all_cochains(1, 2, INHOM) if cohomology.is_cocycle(x))
    by_rank = 1 << len(cohomology.cocycle_basis(1, 2))
    self.assertEqual(filtered, by_rank)
    self.assertEqual(filtered, 4)
    self.assertLen(list(cohomology.enumerate_cocycles(1, 2)), 4)

  def test_enumerated_cocycles_are_cocycles(self):
    for degree in (2, 3):
      cocycles = list(cohomology.enumerate_cocycles(1, degree))
      self.assertLen(set(cocycles), len(cocycles))
      for x in cocycles:
        self.assertTrue(cohomology.is_cocycle(x))

  def test_convert_cluster(self):
    nu = cohomology.convert_form(cohomology.cluster_cocycle(), HOM)
    self.assertEqual(nu.form, HOM)
    for a in range(2):
      for b in range(2):
        self.assertEqual(nu(a, b), cohomology.cluster_cocycle()(a, a ^ b))
    np.testing.assert_array_equal(nu.table, [[0, 0], [1, 0]])

  def test_convert_trivial(self):
    x = cohomology.Cochain.trivial(2, 3)
    self.assertTrue(cohomology.convert_form(x, HOM).is_trivial())
    self.assertTrue(
        cohomology.convert_form(cohomology.convert_form(x, HOM),
                                INHOM).is_trivial())

  def test_convert_round_trip(self):
    for m in (1, 2):
      for degree in range(4):
        for _ in range(10):
          x = self.random_cochain(m, degree)
          there = cohomology.convert_form(x, HOM)
          self.assertEqual(cohomology.convert_form(there, INHOM), x)

  def test_eval_multilinear(self):
    single = cohomology.MultilinearForm(np.ones((1, 1, 1)))
    self.assertEqual(cohomology.eval_multilinear(single, (1, 1, 1)), 1)
    self.assertEqual(cohomology.eval_multilinear(single, (1, 1, 0)), 0)
    pair = cohomology.MultilinearForm(
        test_utils.tensor_from_cells(2, [(0, 0, 0), (1, 1, 1)]))
    self.assertEqual(
        cohomology.eval_multilinear(pair, ([1, 1], [1, 1], [1, 1])), 0)
    self.assertEqual(cohomology.eval_multilinear(pair, (1, 1, 1)), 1)
    with self.assertRaises(ValueError):
      cohomology.eval_multilinear(pair, (1, 1))

  def test_extract_multilinear(self):
    form = cohomology.extract_multilinear(cohomology.union_jack_cocycle())
    np.testing.assert_array_equal(form.components, [[[1]]])
    zero = cohomology.extract_multilinear(cohomology.Cochain.trivial(2, 3))
    self.assertFalse(zero.components.any())
    x = cohomology.Cochain.from_function(1, 2, lambda g, h: g)
    self.assertIsNone(cohomology.extract_multilinear(x))

  def test_multilinear_forms_are_cocycles(self):
    for matrix in test_utils.all_matrices(2, 2):
      form = cohomology.MultilinearForm(matrix)
      cochain = form.to_cochain()
      self.assertTrue(cohomology.is_cocycle(cochain))
      self.assertEqual(cohomology.extract_multilinear(cochain), form)
    for _ in range(30):
      form = cohomology.MultilinearForm(
          test_utils.random_bits(self.rng, (2, 2, 2)))
      cochain = form.to_cochain()
      self.assertTrue(cohomology.is_cocycle(cochain))
      self.assertEqual(cohomology.extract_multilinear(cochain), form)

  def test_to_cochain_agrees_with_eval(self):
    form = cohomology.MultilinearForm(
        test_utils.random_bits(self.rng, (2, 2, 2)))
    cochain = form.to_cochain()
    for args in itertools.product(range(4), repeat=3):
      self.assertEqual(cochain(*args),
                       cohomology.eval_multilinear(form, args))

  @parameterized.parameters((1, 2), (2, 8), (3, 128))
  def test_cohomology_order(self, m, order):
    self.assertEqual(cohomology.cohomology_order(m), order)

  def test_cohomology_factor_ranks(self):
    self.assertEqual(cohomology.cohomology_factor_ranks(3), (3, 3, 1))
    with self.assertRaises(ValueError):
      cohomology.cohomology_order(0)


if __name__ == '__main__':
  absltest.main()
