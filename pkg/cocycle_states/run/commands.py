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

"""Commands of the command line front end and their flags."""

from absl import logging
import numpy as np
from cocycle_states.algebra import cohomology
from cocycle_states.algebra import gf2_core
from cocycle_states.algebra import modes
from cocycle_states.algebra import orbit_census
from cocycle_states.algebra import tensor_codes
from cocycle_states.algebra import tensor_forms
from cocycle_states.data import tensor_documents
from cocycle_states.simulator import cocycle_state
from cocycle_states.simulator import embedding
from cocycle_states.simulator import lattice
from cocycle_states.simulator import sign_state
from cocycle_states.simulator import sweeps
from cocycle_states.run import reports

CHECK = 'check'
NORMAL_FORM = 'normal-form'
CLASSIFY = 'classify'
SIMULATE = 'simulate'
COMMANDS = (CHECK, NORMAL_FORM, CLASSIFY, SIMULATE)

SAMPLE_PREFIX = 'sample:'


def check_parameters(parser_cmd):
  """check command parameters."""
  parser_cmd.add_argument(
      '--degree', type=int, default=0,
      help='Expected degree of the document, 0 to accept any',)


def normal_form_parameters(parser_cmd):
  """normal-form command parameters."""
  parser_cmd.add_argument(
      '--mode', type=str, default='',
      help='diagonal, disjoint or edge_disjoint; empty picks diagonal for '
      'matrices and disjoint for tensors',)
  parser_cmd.add_argument(
      '--fiducial', type=str, default='',
      help='Fiducial cell "i,j,k" of edge_disjoint, empty for the first one',)


def classify_parameters(parser_cmd):
  """classify command parameters."""
  parser_cmd.add_argument(
      '--m', type=int, default=1,
      help='Index size of the tensors to classify, at most 3',)
  parser_cmd.add_argument(
      '--convention', type=str, default=modes.CensusConventions.AUTO,
      help='Census generators: gauge, gauge_and_colors or auto',)


def simulate_parameters(parser_cmd):
  """simulate command parameters."""
  parser_cmd.add_argument(
      '--lattice', type=str, default='2x2',
      help='Union Jack torus WxH or periodic chain chain-N',)
  parser_cmd.add_argument(
      '--task', type=str, default=modes.Tasks.SYMMETRY,
      help='symmetry, reduce, embed, schmidt or sweep',)
  parser_cmd.add_argument(
      '--m', type=int, default=1,
      help='Group rank of the sweep task',)
  parser_cmd.add_argument(
      '--cut', type=str, default='',
      help='Comma separated sites on one side of the schmidt cut, empty for '
      'the first half of the sites',)
  parser_cmd.add_argument(
      '--trials', type=int, default=4,
      help='Random measurement outcome patterns checked by the reduce task',)
  parser_cmd.add_argument(
      '--fiducial', type=str, default='',
      help='Fiducial cell "i,j,k" kept by the reduce task',)


def load_input(path):
  """Reads a document from a path or from "sample:NAME"."""
  if not path:
    raise ValueError('--input is required')
  if path.startswith(SAMPLE_PREFIX):
    name = path[len(SAMPLE_PREFIX):]
    if name not in tensor_documents.sample_names():
      raise ValueError('Unknown sample "%s", expected one of %s' %
                       (name, ', '.join(tensor_documents.sample_names())))
    return tensor_documents.load_sample(name)
  return tensor_documents.load_document(path)


def _document_text(doc):
  if doc is None:
    return None
  return tensor_documents.serialize_document(doc)


def cells_of(t):
  return [[int(i) for i in cell] for cell in np.argwhere(t)]


def _gauge_results(gauge):
  return {name: chi for name, chi in zip(gauge._fields, gauge)}


def _inhomogeneous(x):
  return cohomology.convert_form(x, modes.Forms.INHOMOGENEOUS)


def cmd_check(doc, degree=0):
  """Cocycle and multilinearity verdicts of a document.

  Args:
    doc: TensorDocument
    degree: expected degree, 0 to accept any

  Returns:
    RunReport

  Raises:
    ValueError: if the document degree differs from `degree`
  """
  if degree and degree != doc.degree:
    raise ValueError('expected a degree %d document, got degree %d' %
                     (degree, doc.degree))
  x = doc.cochain()
  cocycle = cohomology.is_cocycle(x)
  results = {
      'degree': x.degree,
      'm': x.m,
      'form': x.form,
      'trivial': x.is_trivial(),
      'cocycle': cocycle,
  }
  verdicts = {'cocycle': cocycle}
  if 1 <= x.degree <= cohomology.MAX_DEGREE:
    results['coboundary'] = cohomology.is_coboundary(x)
    form = cohomology.extract_multilinear(_inhomogeneous(x))
    verdicts['multilinear'] = form is not None
    results['multilinear'] = form is not None
    if form is not None:
      results['components'] = cells_of(form.components)
  logging.info('check of degree %d cochain: cocycle=%s', x.degree, cocycle)
  return reports.RunReport.create(
      CHECK, {'document': _document_text(doc), 'degree': degree}, results,
      verdicts)


def _diagonal(t):
  form = tensor_forms.diagonal_normal_form(t)
  results = {
      'r': form.r,
      'output': cells_of(form.output),
      'gauge': _gauge_results(form.gauge),
  }
  certified = np.array_equal(tensor_forms.gauge2(t, form.gauge), form.output)
  return results, certified


def _disjoint(t, seed):
  decomposition = tensor_forms.disjoint_normal_form(t, shuffle_seed=seed)
  output = tensor_forms.gauge3(t, decomposition.gauge)
  total = np.zeros(t.shape, dtype=np.int64)
  for block in decomposition.blocks:
    total += block
  results = {
      'r': decomposition.r,
      'output': cells_of(output),
      'blocks': [cells_of(block) for block in decomposition.blocks],
      'gauge': _gauge_results(decomposition.gauge),
  }
  return results, np.array_equal(total, output)


def _edge_disjoint(t, fiducial):
  output, gauge = tensor_forms.edge_disjoint_form(t, fiducial)
  if fiducial is None:
    fiducial = tensor_forms.first_cell(t)
  identity = tensor_forms.GaugeTriple.identity(t.shape)
  results = {
      'fiducial': list(fiducial),
      'output': cells_of(output),
      'gauge': _gauge_results(gauge),
      'identity_gauge': all(
          np.array_equal(x, y) for x, y in zip(gauge, identity)),
  }
  incident = [
      cell for cell in np.argwhere(output)
      if tensor_forms.index_agreements(cell, fiducial) == 2
  ]
  certified = (np.array_equal(tensor_forms.gauge3(t, gauge), output) and
               not incident)
  return results, certified


def cmd_normal_form(doc, mode='', fiducial=None, seed=None):
  """Gauge normal form of a component matrix or tensor.

  Args:
    doc: TensorDocument with entries
    mode: NormalForms value, or empty to pick by degree
    fiducial: fiducial cell of the edge disjoint form
    seed: if set, shuffles the gauge enumeration order of the disjoint form;
      None scans GL(m,2) lexicographically

  Returns:
    RunReport

  Raises:
    ValueError: if the mode does not match the document degree
  """
  if not mode:
    mode = (modes.NormalForms.DIAGONAL
            if doc.degree == 2 else modes.NormalForms.DISJOINT)
  modes.check_mode(mode, modes.NormalForms.ALL, 'normal form')
  needed = 2 if mode == modes.NormalForms.DIAGONAL else 3
  if doc.degree != needed or doc.is_cochain:
    raise ValueError('normal form %s needs a degree %d tensor document, got '
                     'degree %d' % (mode, needed, doc.degree))
  t = doc.components()
  if mode == modes.NormalForms.DIAGONAL:
    results, certified = _diagonal(t)
  elif mode == modes.NormalForms.DISJOINT:
    results, certified = _disjoint(t, seed)
  else:
    results, certified = _edge_disjoint(t, fiducial)
  results['mode'] = mode
  logging.info('normal form %s of %d cells', mode, len(doc.entries))
  inputs = {'document': _document_text(doc), 'mode': mode,
            'fiducial': fiducial, 'seed': seed}
  return reports.RunReport.create(NORMAL_FORM, inputs, results,
                                  {'certified': certified})


def cmd_classify(m, convention=modes.CensusConventions.AUTO, threads=1):
  """Irreducible orbit census of the m x m x m tensors.

  Args:
    m: index size
    convention: CensusConventions value
    threads: census worker threads, the report does not depend on them

  Returns:
    RunReport
  """
  census = orbit_census.classify_orbits(m, convention, threads)
  dims = (m,) * 3
  results = {
      'm': m,
      'convention': census.convention,
      'orbit_count': census.orbit_count,
      'irreducible_class_count': census.irreducible_class_count,
      'orbit_sizes': census.orbit_sizes,
      'irreducible_representatives': [
          cells_of(tensor_codes.code_to_tensor(code, dims))
          for code in census.irreducible_representatives()
      ],
  }
  verdicts = {}
  if m in orbit_census.REFERENCE_IRREDUCIBLE_COUNTS:
    verdicts['reference_count'] = (
        census.irreducible_class_count ==
        orbit_census.REFERENCE_IRREDUCIBLE_COUNTS[m])
  return reports.RunReport.create(
      CLASSIFY, {'m': m, 'convention': convention}, results, verdicts)


def _state_of(doc, lat, allow_large):
  if doc.is_cochain:
    return cocycle_state.build_cochain_state(
        lat, _inhomogeneous(doc.cochain()), allow_large)
  return cocycle_state.build_state(lat, doc.components(),
                                   modes.Conventions.PLAIN, allow_large)


def _symmetry(doc, lat, allow_large):
  s = _state_of(doc, lat, allow_large)
  invariant = {}
  for color in range(lat.degree):
    invariant[modes.Colors.NAMES[color]] = all(
        sign_state.is_same_state(
            s, sign_state.apply_fractional_symmetry(s, lat, color, g))
        for g in range(1, 1 << doc.m))
  results = {'qubits': s.n_qubits, 'invariant': invariant}
  return results, {'all_invariant': all(invariant.values())}


def _reduce(doc, lat, fiducial, trials, seed, allow_large):
  reduction = cocycle_state.reduce_to_union_jack(
      doc.components(), lat, fiducial=fiducial, byproduct_trials=trials,
      seed=seed, allow_large=allow_large)
  record = reduction.record
  results = {
      'measured': len(record.measured),
      'residual_qubits': reduction.residual.n_qubits,
      'byproduct_affine': record.byproduct is not None,
      'trials': record.trials,
      'trials_passed': record.trials_passed,
  }
  return results, {'reduced': reduction.ok}


def _embed(doc, lat, allow_large):
  e = embedding.embed_g3(doc.components(), lat, allow_large=allow_large)
  results = {
      'qubits': e.qubit_count,
      'original_qubits': e.base.n_qubits,
      'pads': len(e.pads),
  }
  return results, {'global_symmetric': embedding.check_global_symmetry(e)}


def _is_arc(sites, n):
  inside = [i in sites for i in range(n)]
  return sum(inside[i] != inside[(i + 1) % n] for i in range(n)) == 2


def _schmidt(doc, lat, cut, allow_large):
  if lat.kind != lattice.CHAIN or doc.degree != 2 or doc.is_cochain:
    raise ValueError('the schmidt task needs a chain and a degree 2 tensor '
                     'document')
  if cut is None:
    cut = tuple(range(lat.n_sites // 2))
  s = _state_of(doc, lat, allow_large)
  log_rank = sign_state.schmidt_rank_log2(s, sign_state.site_cut(s, cut))
  component_rank = gf2_core.rank(doc.components())
  results = {
      'cut': sorted(cut),
      'schmidt_rank_log2': log_rank,
      'component_rank': component_rank,
  }
  verdicts = {}
  # an arc with two sites on each side crosses two separate edges
  sides = len(set(cut)), lat.n_sites - len(set(cut))
  if _is_arc(set(cut), lat.n_sites) and min(sides) >= 2:
    verdicts['matches_component_rank'] = log_rank == 2 * component_rank
  return results, verdicts


def _sweep(lat, m, allow_large):
  report = sweeps.lemma1_sweep(lat.degree, m, lat, allow_large)
  results = report._asdict()
  agrees = results.pop('agrees')
  return results, {'agrees': agrees}


def cmd_simulate(doc, lat, task, m=1, cut=None, trials=4, fiducial=None,
                 seed=modes.RANDOM_SEED, allow_large=False):
  """Runs one simulation task on a lattice.

  Args:
    doc: TensorDocument, or None for the sweep task
    lat: Lattice
    task: Tasks value
    m: group rank of the sweep task
    cut: sites on one side of the schmidt cut, None for the first half
    trials: random outcome patterns of the reduce task
    fiducial: fiducial cell of the reduce task
    seed: seed of the outcome patterns
    allow_large: skip the desk-scale guards

  Returns:
    RunReport

  Raises:
    ValueError: if the task needs a document and none is given
    ResourceGuardError: if the state is too large
  """
  modes.check_mode(task, modes.Tasks.ALL, 'task')
  if doc is None and task != modes.Tasks.SWEEP:
    raise ValueError('task %s needs --input' % task)
  logging.info('simulate %s on %s', task, lat.name)
  if task == modes.Tasks.SYMMETRY:
    results, verdicts = _symmetry(doc, lat, allow_large)
  elif task == modes.Tasks.REDUCE:
    results, verdicts = _reduce(doc, lat, fiducial, trials, seed, allow_large)
  elif task == modes.Tasks.EMBED:
    results, verdicts = _embed(doc, lat, allow_large)
  elif task == modes.Tasks.SCHMIDT:
    results, verdicts = _schmidt(doc, lat, cut, allow_large)
  else:
    results, verdicts = _sweep(lat, m, allow_large)
  results['task'] = task
  results['lattice'] = lat.name
  inputs = {
      'document': _document_text(doc),
      'lattice': lat.name,
      'task': task,
      'm': m,
      'cut': cut,
      'trials': trials,
      'fiducial': fiducial,
      'seed': seed,
  }
  return reports.RunReport.create(SIMULATE, inputs, results, verdicts)
