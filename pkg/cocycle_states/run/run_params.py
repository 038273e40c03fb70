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

"""Default run parameters."""

from absl import logging
from cocycle_states.algebra import modes


class Params(object):
  """Default parameters of every command.

     These parameters are compatible with command line flags
     and described in run/base_parser.py and run/commands.py
  """

  def __init__(self):
    # global flags
    self.input = ''
    self.output = ''
    self.seed = modes.RANDOM_SEED
    self.threads = 1
    self.allow_large = False
    self.format = 'text'
    self.timings = False
    self.verbosity = logging.INFO

    # check
    self.degree = 0

    # normal-form
    self.mode = ''
    self.fiducial = ''

    # classify
    self.m = 1
    self.convention = modes.CensusConventions.AUTO

    # simulate
    self.lattice = '2x2'
    self.task = modes.Tasks.SYMMETRY
    self.cut = ''
    self.trials = 4
