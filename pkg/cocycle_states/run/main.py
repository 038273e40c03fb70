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

"""Command line front end: check, normal-form, classify and simulate.

Sample usage:
  python -m cocycle_states.run.main --input sample:two_copy normal-form
  python -m cocycle_states.run.main --format structured classify --m 2
  python -m cocycle_states.run.main --input sample:union_jack \
    simulate --lattice 2x2 --task reduce --trials 4

The report goes to standard output (or --output). Exit status is 0 when
every verdict passes, 1 when a verdict fails and 2 when the command could
not run: bad flags, unreadable documents or resource guards.
"""

import sys
import time

from absl import app
from absl import logging
from cocycle_states.run import base_parser
from cocycle_states.run import commands
from cocycle_states.run import run_flags

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

FLAGS = None


def execute(flags):
  """Runs the command of updated flags and returns its RunReport."""
  if flags.command == commands.CHECK:
    return commands.cmd_check(flags.document, flags.degree)
  if flags.command == commands.NORMAL_FORM:
    return commands.cmd_normal_form(flags.document, flags.mode,
                                    flags.fiducial_cell)
  if flags.command == commands.CLASSIFY:
    return commands.cmd_classify(flags.m, flags.convention, flags.threads)
  if flags.command == commands.SIMULATE:
    return commands.cmd_simulate(
        flags.document, flags.lat, flags.task, m=flags.m,
        cut=flags.cut_sites, trials=flags.trials,
        fiducial=flags.fiducial_cell, seed=flags.seed,
        allow_large=flags.allow_large)
  raise ValueError('Unknown command "%s"' % flags.command)


def run_command(flags):
  """Runs parsed flags and writes the report.

  Args:
    flags: flags parsed by base_parser.command_parser()

  Returns:
    exit status
  """
  logging.set_verbosity(flags.verbosity)
  try:
    flags = run_flags.update_flags(flags)
    start = time.time()
    report = execute(flags)
    elapsed = time.time() - start
  except ValueError as e:
    # document errors and resource guards are ValueErrors too
    logging.error('%s: %s', flags.command, e)
    return EXIT_ERROR
  if flags.timings:
    report = report.with_timings({flags.command: elapsed})

  text = report.render(flags.format)
  if flags.output:
    with open(flags.output, 'wt') as f:
      f.write(text)
  else:
    sys.stdout.write(text)
  logging.info('%s finished, ok=%s', flags.command, report.ok)
  return EXIT_OK if report.ok else EXIT_FAILED


def run(argv):
  """Parses argv (without the program name) and runs it; returns the status."""
  parser = base_parser.command_parser()
  try:
    flags = parser.parse_args(argv)
  except SystemExit as e:
    # argparse already printed usage or help
    return EXIT_ERROR if e.code else EXIT_OK
  return run_command(flags)


def main(_):
  sys.exit(run_command(FLAGS))


def entry_point():
  global FLAGS
  parser = base_parser.command_parser()
  FLAGS, unparsed = parser.parse_known_args()
  if unparsed and tuple(unparsed) != ('--alsologtostderr',):
    raise ValueError('Unknown argument: {}'.format(unparsed))
  app.run(main=main, argv=[sys.argv[0]] + unparsed)


if __name__ == '__main__':
  entry_point()
