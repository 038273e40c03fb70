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

"""Deterministic command reports."""

import hashlib
import json
import typing

import numpy as np
import cocycle_states

TEXT = 'text'
STRUCTURED = 'structured'
FORMATS = (TEXT, STRUCTURED)


def plain(value):
  """Converts numpy values and tuples into JSON types."""
  if isinstance(value, dict):
    return {str(k): plain(v) for k, v in value.items()}
  if isinstance(value, np.ndarray):
    return value.tolist()
  if isinstance(value, (list, tuple, frozenset, set)):
    items = [plain(v) for v in value]
    return sorted(items) if isinstance(value, (set, frozenset)) else items
  if isinstance(value, (bool, np.bool_)):
    return bool(value)
  if isinstance(value, np.integer):
    return int(value)
  return value


def _canonical(value):
  return json.dumps(plain(value), sort_keys=True, separators=(',', ':'))


def input_digest(inputs):
  """sha256 of the canonical JSON form of the command inputs."""
  return hashlib.sha256(_canonical(inputs).encode('utf-8')).hexdigest()


class RunReport(typing.NamedTuple):
  """Outcome of one command.

  Attributes:
    command: command name
    inputs: digest of the document text and the options used
    results: counts, gauges and tensors, JSON types only
    verdicts: named checks, each True or False
    version: package version
    timings: wall clock seconds per step, or None
  """
  command: str
  inputs: str
  results: typing.Dict[str, typing.Any]
  verdicts: typing.Dict[str, bool]
  version: str = cocycle_states.__version__
  timings: typing.Optional[typing.Dict[str, float]] = None

  @classmethod
  def create(cls, command, inputs, results, verdicts):
    return cls(command, input_digest(dict(inputs, command=command)),
               plain(results), {k: bool(v) for k, v in verdicts.items()})

  @property
  def ok(self):
    return all(self.verdicts.values())

  def with_timings(self, timings):
    return self._replace(
        timings={k: round(float(v), 3) for k, v in timings.items()})

  def to_dict(self):
    fields = {
        'command': self.command,
        'inputs': self.inputs,
        'ok': self.ok,
        'results': self.results,
        'verdicts': self.verdicts,
        'version': self.version,
    }
    if self.timings is not None:
      fields['timings'] = self.timings
    return fields

  def to_structured(self):
    return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

  def to_text(self):
    lines = [
        'command: %s' % self.command,
        'version: %s' % self.version,
        'inputs: sha256:%s' % self.inputs,
        'results:',
    ]
    for key in sorted(self.results):
      lines.append('  %s: %s' % (key, _canonical(self.results[key])))
    lines.append('verdicts:')
    for key in sorted(self.verdicts):
      lines.append('  %s: %s' % (key, 'pass' if self.verdicts[key] else 'FAIL'))
    if self.timings is not None:
      lines.append('timings:')
      for key in sorted(self.timings):
        lines.append('  %s: %.3fs' % (key, self.timings[key]))
    lines.append('status: %s' % ('pass' if self.ok else 'FAIL'))
    return '\n'.join(lines) + '\n'

  def render(self, fmt):
    if fmt == TEXT:
      return self.to_text()
    if fmt == STRUCTURED:
      return self.to_structured()
    raise ValueError('Unknown report format "%s"' % fmt)
