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

"""Tests for cocycle_states.algebra.tensor_forms."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np
from cocycle_states.algebra import gf2_core
from cocycle_states.algebra import tensor_codes
from cocycle_states.algebra import tensor_forms
from cocycle_states.algebra import test_utils

TWO_COPY = [(0, 0, 0), (1, 1, 1)]
W_CELLS = [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def cells(m, cell_list):
  return test_utils.tensor_from_cells(m, cell_list)


class TensorFormsTest(parameterized.TestCase):

  def setUp(self):
    super(TensorFormsTest, self).setUp()
    self.rng = test_utils.rng()

  def random_triple(self, m):
    return tensor_forms.GaugeTriple(
        *[test_utils.random_invertible(self.rng, m) for _ in range(3)])

  def random_pair(self, m):
    return tensor_forms.GaugePair(
        test_utils.random_invertible(self.rng, m),
        test_utils.random_invertible(self.rng, m))

  def test_gauge2_identity(self):
    t = test_utils.random_bits(self.rng, (3, 3))
    np.testing.assert_array_equal(
        tensor_forms.gauge2(t, tensor_forms.GaugePair.identity(3, 3)), t)

  def test_gauge2_shear(self):
    g = tensor_forms.GaugePair(gf2_core.shear(2, 0, 1), gf2_core.identity(2))
    np.testing.assert_array_equal(
        tensor_forms.gauge2([[1, 0], [0, 0]], g), [[1, 0], [1, 0]])

  def test_gauge2_preserves_rank(self):
    for _ in range(100):
      t = test_utils.random_bits(self.rng, (3, 3))
      out = tensor_forms.gauge2(t, self.random_pair(3))
      self.assertEqual(gf2_core.rank(out), gf2_core.rank(t))

  def test_gauge2_composes(self):
    t = test_utils.random_bits(self.rng, (3, 3))
    g, h = self.random_pair(3), self.random_pair(3)
    np.testing.assert_array_equal(
        tensor_forms.gauge2(tensor_forms.gauge2(t, g), h),
        tensor_forms.gauge2(t, g.compose(h)))

  def test_gauge_dimension_mismatch(self):
    with self.assertRaises(ValueError):
      tensor_forms.gauge2(np.zeros((2, 3)), tensor_forms.GaugePair.identity(2, 2))
    with self.assertRaises(ValueError):
      tensor_forms.gauge3(np.zeros((2, 2, 2)),
                          tensor_forms.GaugeTriple.identity((3, 3, 3)))

  def test_gauge3_identity(self):
    t = test_utils.random_bits(self.rng, (3, 3, 3))
    np.testing.assert_array_equal(
        tensor_forms.gauge3(t, tensor_forms.GaugeTriple.identity((3, 3, 3))),
        t)

  def test_gauge3_shear_update_rule(self):
    g = tensor_forms.GaugeTriple(
        gf2_core.identity(2), gf2_core.identity(2), gf2_core.shear(2, 0, 1))
    out = tensor_forms.gauge3(cells(2, [(0, 0, 0), (0, 0, 1)]), g)
    self.assertEqual(test_utils.cells_of(out), [(0, 0, 0)])

  def test_gauge3_inverse(self):
    for _ in range(20):
      t = test_utils.random_bits(self.rng, (3, 3, 3))
      g = self.random_triple(3)
      np.testing.assert_array_equal(
          tensor_forms.gauge3(tensor_forms.gauge3(t, g), g.inverse()), t)

  def test_gauge3_composes(self):
    for _ in range(20):
      t = test_utils.random_bits(self.rng, (3, 3, 3))
      g, h = self.random_triple(3), self.random_triple(3)
      np.testing.assert_array_equal(
          tensor_forms.gauge3(tensor_forms.gauge3(t, g), h),
          tensor_forms.gauge3(t, g.compose(h)))

  def test_check_gauge(self):
    singular = tensor_forms.GaugeTriple(
        np.zeros((2, 2), dtype=np.uint8), gf2_core.identity(2),
        gf2_core.identity(2))
    with self.assertRaises(gf2_core.SingularMatrixError):
      tensor_forms.check_gauge(singular)

  def test_diagonal_normal_form_zero(self):
    form = tensor_forms.diagonal_normal_form(np.zeros((3, 3)))
    self.assertEqual(form.r, 0)
    self.assertFalse(form.output.any())
    np.testing.assert_array_equal(form.gauge.chi_a, gf2_core.identity(3))
    np.testing.assert_array_equal(form.gauge.chi_b, gf2_core.identity(3))

  def test_diagonal_normal_form_identity(self):
    form = tensor_forms.diagonal_normal_form(gf2_core.identity(3))
    self.assertEqual(form.r, 3)
    np.testing.assert_array_equal(form.output, gf2_core.identity(3))

  def test_diagonal_normal_form_rank_two(self):
    t = np.array([[1, 1, 0], [0, 1, 0], [1, 0, 0]])
    form = tensor_forms.diagonal_normal_form(t)
    self.assertEqual(form.r, 2)
    np.testing.assert_array_equal(form.output, np.diag([1, 1, 0]))
    np.testing.assert_array_equal(tensor_forms.gauge2(t, form.gauge),
                                  form.output)

  def test_diagonal_normal_form_random(self):
    for _ in range(50):
      t = test_utils.random_bits(self.rng, (3, 4))
      form = tensor_forms.diagonal_normal_form(t)
      self.assertEqual(form.r, gf2_core.rank(t))
      tensor_forms.check_gauge(form.gauge)
      np.testing.assert_array_equal(tensor_forms.gauge2(t, form.gauge),
                                    form.output)
      expected = np.zeros((3, 4), dtype=np.uint8)
      expected[range(form.r), range(form.r)] = 1
      np.testing.assert_array_equal(form.output, expected)

  @parameterized.parameters(1, 2, 3)
  def test_diagonal_normal_form_every_matrix(self, m):
    for t in test_utils.all_matrices(m, m):
      form = tensor_forms.diagonal_normal_form(t)
      self.assertEqual(form.r, gf2_core.rank(t))
      tensor_forms.check_gauge(form.gauge)
      np.testing.assert_array_equal(tensor_forms.gauge2(t, form.gauge),
                                    form.output)
      self.assertEqual(int(form.output.sum()), form.r)

  def test_supports_zero(self):
    self.assertEqual(
        tensor_forms.supports(np.zeros((2, 2, 2))).dims, (0, 0, 0))

  def test_supports_single_cell(self):
    sets = tensor_forms.supports(cells(2, [(0, 0, 0)]))
    self.assertEqual(sets.dims, (1, 1, 1))
    for basis in sets:
      np.testing.assert_array_equal(basis, [[1, 0]])

  def test_supports_two_copy(self):
    self.assertEqual(tensor_forms.supports(cells(2, TWO_COPY)).dims, (2, 2, 2))

  def test_supports_gauge_covariant(self):
    for _ in range(30):
      t = test_utils.random_bits(self.rng, (3, 3, 3))
      g = self.random_triple(3)
      self.assertEqual(
          tensor_forms.supports(t).dims,
          tensor_forms.supports(tensor_forms.gauge3(t, g)).dims)

  def test_split_components(self):
    t = cells(3, [(0, 0, 0), (0, 1, 1), (2, 2, 2)])
    blocks = tensor_forms.split_components(t)
    self.assertLen(blocks, 2)
    self.assertEqual(test_utils.cells_of(blocks[0]), [(0, 0, 0), (0, 1, 1)])
    self.assertEqual(test_utils.cells_of(blocks[1]), [(2, 2, 2)])
    np.testing.assert_array_equal(blocks[0] ^ blocks[1], t)

  @parameterized.named_parameters(
      ('two_copy', TWO_COPY, True),
      ('single', [(0, 0, 0)], False),
      ('shared_a_index', [(0, 0, 0), (0, 1, 1)], False),
      ('zero', [], False))
  def test_is_decomposable(self, cell_list, expected):
    self.assertEqual(tensor_forms.is_decomposable(cells(2, cell_list)),
                     expected)

  @parameterized.named_parameters(
      ('single_m1', 1, [(0, 0, 0)], True),
      ('zero', 2, [], False),
      ('two_copy', 2, TWO_COPY, False),
      ('w', 2, W_CELLS, True),
      ('biseparable', 2, [(0, 0, 0), (0, 1, 1)], True))
  def test_is_irreducible(self, m, cell_list, expected):
    self.assertEqual(tensor_forms.is_irreducible(cells(m, cell_list)),
                     expected)

  def test_hidden_decomposition_is_found(self):
    for _ in range(5):
      t = tensor_forms.gauge3(cells(2, TWO_COPY), self.random_triple(2))
      self.assertFalse(tensor_forms.is_irreducible(t))

  def test_exhaustive_guard(self):
    with self.assertRaises(tensor_codes.ResourceGuardError):
      tensor_forms.is_irreducible(np.ones((4, 4, 4)))

  def test_orbit_codes(self):
    codes = tensor_forms.orbit_codes(cells(2, [(0, 0, 0)]))
    self.assertLen(codes, 27)
    self.assertEqual(codes[0], 1)

  def lexicographic_first_gauge(self, t):
    decomposable = set(tensor_codes.decomposable_codes(t.shape).tolist())
    groups = [gf2_core.enumerate_gl(n) for n in t.shape]
    for chi_a in groups[0]:
      for chi_b in groups[1]:
        for chi_c in groups[2]:
          g = tensor_forms.GaugeTriple(chi_a, chi_b, chi_c)
          code = tensor_codes.tensor_to_code(tensor_forms.gauge3(t, g))
          if code in decomposable:
            return g
    return None

  def test_first_decomposing_gauge_is_lexicographic(self):
    checked = 0
    for _ in range(10):
      t = tensor_forms.gauge3(cells(2, TWO_COPY), self.random_triple(2))
      if tensor_forms.is_decomposable(t):
        continue
      g = tensor_forms.first_decomposing_gauge(t)
      expected = self.lexicographic_first_gauge(t)
      for chi, chi_expected in zip(g, expected):
        np.testing.assert_array_equal(chi, chi_expected)
      self.assertTrue(tensor_forms.is_decomposable(tensor_forms.gauge3(t, g)))
      checked += 1
    self.assertGreater(checked, 0)

  def test_first_decomposing_gauge_edge_cases(self):
    t = cells(2, TWO_COPY)
    g = tensor_forms.first_decomposing_gauge(t)
    for chi in g:
      np.testing.assert_array_equal(chi, gf2_core.identity(2))
    self.assertIsNone(tensor_forms.first_decomposing_gauge(cells(2, W_CELLS)))
    self.assertIsNone(
        tensor_forms.first_decomposing_gauge(np.zeros((2, 2, 2))))
    self.assertIsNone(tensor_forms.first_decomposing_gauge(np.ones((1, 1, 1))))

  def test_first_decomposing_gauge_m3(self):
    t = cells(3, [(0, 0, 0), (1, 1, 2), (1, 2, 1), (2, 1, 1)])
    t = tensor_forms.gauge3(t, self.random_triple(3))
    g = tensor_forms.first_decomposing_gauge(t, shuffle_seed=3)
    self.assertTrue(tensor_forms.is_decomposable(tensor_forms.gauge3(t, g)))

  def test_disjoint_normal_form_zero(self):
    result = tensor_forms.disjoint_normal_form(np.zeros((2, 2, 2)))
    self.assertEqual(result.r, 0)
    self.assertEmpty(result.blocks)

  def test_disjoint_normal_form_two_copy(self):
    result = tensor_forms.disjoint_normal_form(cells(2, TWO_COPY))
    self.assertEqual(result.r, 2)
    self.assertEqual([test_utils.cells_of(b) for b in result.blocks],
                     [[(0, 0, 0)], [(1, 1, 1)]])

  def test_disjoint_normal_form_m1(self):
    result = tensor_forms.disjoint_normal_form(np.ones((1, 1, 1)))
    self.assertEqual(result.r, 1)

  def check_decomposition(self, t, result):
    image = tensor_forms.gauge3(t, result.gauge)
    total = np.zeros_like(image)
    for block in result.blocks:
      total ^= block
      self.assertTrue(tensor_forms.is_irreducible(block))
    np.testing.assert_array_equal(total, image)
    for a in range(len(result.blocks)):
      for b in range(a + 1, len(result.blocks)):
        for axes in ((1, 2), (0, 2), (0, 1)):
          overlap = (result.blocks[a].any(axis=axes) &
                     result.blocks[b].any(axis=axes))
          self.assertFalse(overlap.any())

  def test_disjoint_normal_form_hidden_blocks(self):
    for _ in range(5):
      t = tensor_forms.gauge3(cells(2, TWO_COPY), self.random_triple(2))
      result = tensor_forms.disjoint_normal_form(t)
      self.assertEqual(result.r, 2)
      self.check_decomposition(t, result)

  def test_disjoint_normal_form_m3(self):
    t = cells(3, [(0, 0, 0), (1, 1, 2), (1, 2, 1), (2, 1, 1)])
    t = tensor_forms.gauge3(t, self.random_triple(3))
    result = tensor_forms.disjoint_normal_form(t)
    self.assertEqual(result.r, 2)
    self.check_decomposition(t, result)

  def test_disjoint_normal_form_unique_r(self):
    for _ in range(3):
      t = test_utils.random_bits(self.rng, (2, 2, 2))
      rs = {tensor_forms.disjoint_normal_form(t, shuffle_seed=seed).r
            for seed in range(10)}
      self.assertLen(rs, 1)
      self.check_decomposition(t, tensor_forms.disjoint_normal_form(t))

  def test_edge_disjoint_form_example(self):
    out, g = tensor_forms.edge_disjoint_form(cells(2, [(0, 0, 0), (0, 0, 1)]))
    self.assertEqual(test_utils.cells_of(out), [(0, 0, 0)])
    np.testing.assert_array_equal(g.chi_c, gf2_core.shear(2, 0, 1))

  @parameterized.named_parameters(
      ('single', [(0, 0, 0)]),
      ('vertex_incident', [(0, 0, 0), (0, 1, 1)]))
  def test_edge_disjoint_form_unchanged(self, cell_list):
    t = cells(2, cell_list)
    out, _ = tensor_forms.edge_disjoint_form(t)
    np.testing.assert_array_equal(out, t)

  def test_edge_disjoint_form_random(self):
    for _ in range(50):
      t = test_utils.random_bits(self.rng, (3, 3, 3))
      if not t.any():
        continue
      fiducial = tensor_forms.first_cell(t)
      out, g = tensor_forms.edge_disjoint_form(t)
      np.testing.assert_array_equal(tensor_forms.gauge3(t, g), out)
      self.assertEqual(out[fiducial], 1)
      for cell in np.argwhere(out):
        if tuple(cell) != fiducial:
          self.assertLessEqual(
              tensor_forms.index_agreements(cell, fiducial), 1)

  def test_edge_disjoint_form_explicit_fiducial(self):
    t = cells(3, [(0, 0, 0), (1, 1, 1), (1, 1, 2), (1, 2, 1)])
    out, _ = tensor_forms.edge_disjoint_form(t, fiducial=(1, 1, 1))
    self.assertEqual(out[1, 1, 1], 1)
    for cell in np.argwhere(out):
      if tuple(cell) != (1, 1, 1):
        self.assertLessEqual(
            tensor_forms.index_agreements(cell, (1, 1, 1)), 1)
    with self.assertRaises(ValueError):
      tensor_forms.edge_disjoint_form(t, fiducial=(2, 2, 2))
    with self.assertRaises(ValueError):
      tensor_forms.edge_disjoint_form(np.zeros((2, 2, 2)))

  def test_spto_labels(self):
    self.assertEqual(tensor_forms.spto_labels(np.zeros((2, 2, 2))),
                     frozenset())
    self.assertEqual(tensor_forms.spto_labels(np.ones((1, 1, 1))),
                     {(0, 1, 2)})
    self.assertEqual(
        tensor_forms.spto_labels(cells(2, [(0, 1, 1), (1, 0, 0)])),
        {(0, 3, 5), (1, 2, 4)})

  def test_spto_labels_distinguish_tensors(self):
    labels = {tensor_forms.spto_labels(t) for t in test_utils.all_tensors(2)}
    self.assertLen(labels, 256)


if __name__ == '__main__':
  absltest.main()
