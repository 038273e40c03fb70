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

"""Base parser with the flags shared by every command."""

import argparse
from absl import logging
from cocycle_states.algebra import modes
from cocycle_states.run import commands
from cocycle_states.run import reports


def verbosity_arg(value):
  """Checks that the verbosity flag is one of the absl levels."""
  value = value.upper()
  if value == 'INFO':
    return logging.INFO
  elif value == 'DEBUG':
    return logging.DEBUG
  elif value == 'ERROR':
    return logging.ERROR
  elif value == 'FATAL':
    return logging.FATAL
  elif value == 'WARN':
    return logging.WARN
  else:
    raise argparse.ArgumentTypeError('Not an expected value')


def base_parser():
  """Base parser.

  Flags parsing is split into two parts:
  1) global flags for inputs, seeds, guards and report format, defined here.
  2) command flags - defined next to every command in commands.py.

  Returns:
    parser
  """
  parser = argparse.ArgumentParser(prog='cocycle_states')
  parser.add_argument(
      '--input',
      type=str,
      default='',
      help="""\
      Tensor or cochain document to read. "sample:NAME" reads one of the
      documents shipped with the package.
      """)
  parser.add_argument(
      '--output',
      type=str,
      default='',
      help='Write the report to this file instead of standard output.')
  parser.add_argument(
      '--seed',
      type=int,
      default=modes.RANDOM_SEED,
      help='Seed of every randomized step.')
  parser.add_argument(
      '--threads',
      type=int,
      default=1,
      help="""\
      Worker threads of the orbit census. The report does not depend on it.
      """)
  parser.add_argument(
      '--allow-large',
      action='store_true',
      help="""\
      Run searches, censuses and states above the desk-scale limits instead
      of failing.
      """)
  parser.add_argument(
      '--format',
      type=str,
      default=reports.TEXT,
      choices=reports.FORMATS,
      help='Report format: text or structured (canonical JSON).')
  parser.add_argument(
      '--timings',
      action='store_true',
      help="""\
      Add wall clock timings to the report. Reports with timings are not
      reproducible byte for byte.
      """)
  parser.add_argument(
      '--verbosity',
      type=verbosity_arg,
      default=logging.INFO,
      help='Log verbosity. Can be "INFO", "DEBUG", "ERROR", "FATAL", or "WARN"')
  return parser


def command_parser():
  """Base parser with one sub parser per command."""
  parser = base_parser()
  subparsers = parser.add_subparsers(dest='command', help='command to run')
  subparsers.required = True

  # cocycle and multilinearity check
  parser_check = subparsers.add_parser(commands.CHECK)
  commands.check_parameters(parser_check)

  # gauge normal forms
  parser_normal_form = subparsers.add_parser(commands.NORMAL_FORM)
  commands.normal_form_parameters(parser_normal_form)

  # irreducible orbit census
  parser_classify = subparsers.add_parser(commands.CLASSIFY)
  commands.classify_parameters(parser_classify)

  # lattice state simulation
  parser_simulate = subparsers.add_parser(commands.SIMULATE)
  commands.simulate_parameters(parser_simulate)
  return parser
