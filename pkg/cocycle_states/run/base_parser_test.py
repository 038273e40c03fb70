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

"""Tests for base_parser default values."""

import argparse

from absl import logging
from absl.testing import absltest
from cocycle_states.run import base_parser
from cocycle_states.run import commands
from cocycle_states.run import run_params


def parse(*argv):
  flags, unparsed = base_parser.command_parser().parse_known_args(list(argv))
  assert not unparsed, unparsed
  return flags


class BaseParserTest(absltest.TestCase):

  def setUp(self):
    super(BaseParserTest, self).setUp()
    self.params = run_params.Params()

  def test_default_global_values(self):
    # validate default parameters to avoid regression
    flags = parse(commands.CHECK)
    self.assertEqual(flags.command, commands.CHECK)
    self.assertEqual(flags.input, self.params.input)
    self.assertEqual(flags.output, self.params.output)
    self.assertEqual(flags.seed, self.params.seed)
    self.assertEqual(flags.threads, self.params.threads)
    self.assertEqual(flags.allow_large, self.params.allow_large)
    self.assertEqual(flags.format, self.params.format)
    self.assertEqual(flags.timings, self.params.timings)
    self.assertEqual(flags.verbosity, self.params.verbosity)
    self.assertEqual(flags.degree, self.params.degree)

  def test_default_normal_form_values(self):
    flags = parse(commands.NORMAL_FORM)
    self.assertEqual(flags.mode, self.params.mode)
    self.assertEqual(flags.fiducial, self.params.fiducial)

  def test_default_classify_values(self):
    flags = parse(commands.CLASSIFY)
    self.assertEqual(flags.m, self.params.m)
    self.assertEqual(flags.convention, self.params.convention)

  def test_default_simulate_values(self):
    flags = parse(commands.SIMULATE)
    self.assertEqual(flags.lattice, self.params.lattice)
    self.assertEqual(flags.task, self.params.task)
    self.assertEqual(flags.m, self.params.m)
    self.assertEqual(flags.cut, self.params.cut)
    self.assertEqual(flags.trials, self.params.trials)
    self.assertEqual(flags.fiducial, self.params.fiducial)

  def test_global_flags(self):
    flags = parse('--input', 'a.json', '--seed', '3', '--threads', '2',
                  '--allow-large', '--format', 'structured', '--timings',
                  '--verbosity', 'DEBUG', commands.SIMULATE, '--task', 'embed')
    self.assertEqual(flags.input, 'a.json')
    self.assertEqual(flags.seed, 3)
    self.assertEqual(flags.threads, 2)
    self.assertTrue(flags.allow_large)
    self.assertEqual(flags.format, 'structured')
    self.assertTrue(flags.timings)
    self.assertEqual(flags.verbosity, logging.DEBUG)
    self.assertEqual(flags.task, 'embed')

  def test_verbosity_arg(self):
    self.assertEqual(base_parser.verbosity_arg('WARN'), logging.WARN)
    self.assertEqual(base_parser.verbosity_arg('error'), logging.ERROR)
    with self.assertRaises(argparse.ArgumentTypeError):
      base_parser.verbosity_arg('LOUD')


if __name__ == '__main__':
  absltest.main()
