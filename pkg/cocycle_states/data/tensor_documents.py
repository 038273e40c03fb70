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

"""Reading and writing component tensors and cochain tables.

A document is a JSON object. Tensor documents list the nonzero cells:
  {
    "degree": 3,
    "entries": [
      [0, 0, 0],
      [1, 1, 1]
    ],
    "m": 2,
    "name": "two_copy"
  }
Non-cubic tensors give "m" as a list of sizes, one per index. Cochain
documents carry the flat exponent "table" (and optionally its "form") instead
of "entries".
Serialization is canonical: sorted keys, sorted entries, one entry per line.
"""

import json
import os
import typing

import numpy as np
from cocycle_states.algebra import cohomology
from cocycle_states.algebra import modes

SAMPLES_DIR = os.path.join(os.path.dirname(__file__), 'samples')

_FIELDS = ('degree', 'entries', 'form', 'm', 'name', 'seed', 'table')


class DocumentError(ValueError):
  """Raised for malformed or invalid documents."""


class TensorDocument(typing.NamedTuple):
  """Parsed document.

  Attributes:
    degree: number of tensor indices (cochain degree for table documents)
    dims: index sizes, the "m" field
    entries: sorted nonzero cells, empty for table documents
    name: optional name
    seed: optional seed
    table: flat exponent table of a cochain document, else None
    form: storage form of the table
  """
  degree: int
  dims: typing.Tuple[int, ...]
  entries: typing.Tuple[typing.Tuple[int, ...], ...] = ()
  name: typing.Optional[str] = None
  seed: typing.Optional[int] = None
  table: typing.Optional[typing.Tuple[int, ...]] = None
  form: str = modes.Forms.INHOMOGENEOUS

  @property
  def is_cochain(self):
    return self.table is not None

  @property
  def m(self):
    if len(set(self.dims)) != 1:
      raise DocumentError('document of dims %s has no single m' %
                          (self.dims,))
    return self.dims[0]

  def components(self):
    """Component matrix or tensor as a uint8 array."""
    if self.is_cochain:
      raise DocumentError('cochain table document has no components')
    t = np.zeros(self.dims, dtype=np.uint8)
    for cell in self.entries:
      t[cell] = 1
    return t

  def cochain(self):
    """The cochain of a table document, or of the multilinear form."""
    if self.is_cochain:
      return cohomology.Cochain(self.m, self.degree, np.array(self.table),
                                self.form)
    return cohomology.MultilinearForm(self.components()).to_cochain()


def from_components(t, name=None, seed=None):
  t = np.asarray(t)
  entries = tuple(tuple(int(i) for i in cell) for cell in np.argwhere(t))
  return TensorDocument(t.ndim, tuple(t.shape), entries, name, seed)


def from_cochain(x, name=None):
  return TensorDocument(x.degree, (x.m,) * max(x.degree, 1), (), name, None,
                        tuple(int(v) for v in x.table.reshape(-1)), x.form)


def _is_int(value):
  return isinstance(value, int) and not isinstance(value, bool)


def _check_int(value, field, low):
  if not _is_int(value) or value < low:
    raise DocumentError('field "%s": expected an integer >= %d, got %r' %
                        (field, low, value))
  return value


def _validate(raw):
  if not isinstance(raw, dict):
    raise DocumentError('line 1: a document must be a JSON object')
  unknown = sorted(set(raw) - set(_FIELDS))
  if unknown:
    raise DocumentError('field "%s": unknown field' % unknown[0])
  if 'degree' not in raw:
    raise DocumentError('field "degree": missing')
  degree = _check_int(raw['degree'], 'degree', 0)

  if 'm' not in raw:
    raise DocumentError('field "m": missing')
  if isinstance(raw['m'], list):
    if len(raw['m']) != degree:
      raise DocumentError('field "m": expected a list of %d sizes' % degree)
    dims = tuple(_check_int(d, 'm', 1) for d in raw['m'])
  else:
    dims = (_check_int(raw['m'], 'm', 1),) * max(degree, 1)

  name = raw.get('name')
  if name is not None and not isinstance(name, str):
    raise DocumentError('field "name": expected a string')
  seed = raw.get('seed')
  if seed is not None:
    _check_int(seed, 'seed', 0)

  if 'table' in raw:
    return _validate_table(raw, degree, dims, name)
  if degree not in (2, 3):
    raise DocumentError('field "degree": tensor documents have degree 2 or 3,'
                        ' got %d' % degree)
  if 'form' in raw:
    raise DocumentError('field "form": only allowed with "table"')
  entries = raw.get('entries')
  if not isinstance(entries, list):
    raise DocumentError('field "entries": expected a list of cells')
  seen = {}
  for n, entry in enumerate(entries):
    if (not isinstance(entry, list) or len(entry) != degree or
        not all(_is_int(i) for i in entry)):
      raise DocumentError('entry %d: expected %d integer indices, got %r' %
                          (n, degree, entry))
    for i, size in zip(entry, dims):
      if not 0 <= i < size:
        raise DocumentError('entry %d: index %d out of range for dims %s' %
                            (n, i, dims))
    cell = tuple(entry)
    if cell in seen:
      raise DocumentError('entry %d: duplicates entry %d' % (n, seen[cell]))
    seen[cell] = n
  return TensorDocument(degree, dims, tuple(sorted(seen)), name, seed)


def _validate_table(raw, degree, dims, name):
  if 'entries' in raw:
    raise DocumentError('field "entries": not allowed with "table"')
  if len(set(dims)) != 1:
    raise DocumentError('field "m": cochain tables need a single m')
  if degree > cohomology.MAX_DEGREE:
    raise DocumentError('field "degree": cochains have degree <= %d' %
                        cohomology.MAX_DEGREE)
  form = raw.get('form', modes.Forms.INHOMOGENEOUS)
  if form not in modes.Forms.ALL:
    raise DocumentError('field "form": unknown form %r' % (form,))
  table = raw['table']
  size = 1 << (dims[0] * degree)
  if not isinstance(table, list) or len(table) != size:
    raise DocumentError('field "table": expected a list of %d bits' % size)
  for n, bit in enumerate(table):
    if bit not in (0, 1) or not _is_int(bit):
      raise DocumentError('field "table": entry %d is not 0 or 1' % n)
  return TensorDocument(degree, dims, (), name, raw.get('seed'), tuple(table),
                        form)


def parse_document(text):
  """Parses and validates a document.

  Args:
    text: document text

  Returns:
    TensorDocument

  Raises:
    DocumentError: with the line number of a syntax error, or the field or
      entry index of a validation error
  """
  try:
    raw = json.loads(text)
  except json.JSONDecodeError as e:
    raise DocumentError('line %d: %s' % (e.lineno, e.msg))
  return _validate(raw)


def _dump(value):
  return json.dumps(value, separators=(', ', ': '))


def serialize_document(doc):
  """Canonical text of a document, ending with a newline."""
  fields = {'degree': doc.degree}
  if len(set(doc.dims)) == 1:
    fields['m'] = doc.dims[0]
  else:
    fields['m'] = list(doc.dims)
  if doc.is_cochain:
    fields['table'] = list(doc.table)
    if doc.form != modes.Forms.INHOMOGENEOUS:
      fields['form'] = doc.form
  else:
    fields['entries'] = sorted(doc.entries)
  if doc.name is not None:
    fields['name'] = doc.name
  if doc.seed is not None:
    fields['seed'] = doc.seed

  lines = []
  for key in sorted(fields):
    value = fields[key]
    if key == 'entries' and value:
      cells = ',\n'.join('    %s' % _dump(list(cell)) for cell in value)
      lines.append('  "entries": [\n%s\n  ]' % cells)
    else:
      lines.append('  %s: %s' % (_dump(key), _dump(value)))
  return '{\n%s\n}\n' % ',\n'.join(lines)


def load_document(path):
  with open(path, 'rt') as f:
    return parse_document(f.read())


def write_document(doc, path):
  with open(path, 'wt') as f:
    f.write(serialize_document(doc))


def sample_path(name):
  return os.path.join(SAMPLES_DIR, name + '.json')


def sample_names():
  return sorted(
      os.path.splitext(f)[0]
      for f in os.listdir(SAMPLES_DIR)
      if f.endswith('.json'))


def load_sample(name):
  return load_document(sample_path(name))
