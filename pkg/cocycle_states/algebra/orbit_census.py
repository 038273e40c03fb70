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

"""Census of the gauge orbits of all m x m x m component tensors."""

from concurrent import futures
import typing

from absl import logging
import numpy as np
from cocycle_states.algebra import modes
from cocycle_states.algebra import tensor_codes
from cocycle_states.algebra import tensor_forms

# number of irreducible classes for m = 1, 2, 3
REFERENCE_IRREDUCIBLE_COUNTS = {1: 1, 2: 4, 3: 50}

# largest m for which a census is run
MAX_CENSUS_M = 3

# color orders generating all permutations of the three tensor indices
COLOR_PERMUTATIONS = ((1, 0, 2), (1, 2, 0))


class OrbitCensus(typing.NamedTuple):
  """Partition of all tensor codes into orbits.

  Attributes:
    m: index size
    convention: CensusConventions value the generators were built with
    orbit_count: number of orbits
    irreducible_class_count: number of nonzero orbits with no decomposable
      member
    orbit_sizes: size of every orbit, in order of their labels
    labels: smallest code of every orbit, ascending
    irreducible: per orbit, whether it is an irreducible class
  """
  m: int
  convention: str
  orbit_count: int
  irreducible_class_count: int
  orbit_sizes: typing.Tuple[int, ...]
  labels: np.ndarray
  irreducible: np.ndarray

  def irreducible_representatives(self):
    """Smallest code of every irreducible class."""
    return [int(x) for x in self.labels[self.irreducible]]

  def label_of(self, t):
    """Smallest code in the orbit of t under this census' generators."""
    t = tensor_forms.as_tensor(t)
    if t.shape != (self.m,) * 3:
      raise ValueError('census of m=%d cannot label a %s tensor' %
                       (self.m, t.shape))
    search = tensor_codes.orbit_search(
        tensor_codes.tensor_to_code(t), census_maps(self.m, self.convention),
        self.m**3)
    return int(search.codes.min())


def census_maps(m, convention):
  """Linear code maps generating the census group.

  Args:
    m: index size
    convention: CensusConventions.GAUGE or GAUGE_AND_COLORS

  Returns:
    list of LinearCodeMap
  """
  modes.check_mode(convention, (modes.CensusConventions.GAUGE,
                                modes.CensusConventions.GAUGE_AND_COLORS),
                   'census convention')
  dims = (m,) * 3
  maps = [
      tensor_codes.LinearCodeMap.from_tensor_map(
          dims, lambda x, g=g: tensor_forms.gauge3(x, g))
      for g in tensor_forms.gauge_generators(dims)
  ]
  if convention == modes.CensusConventions.GAUGE_AND_COLORS and m > 1:
    for order in COLOR_PERMUTATIONS:
      maps.append(
          tensor_codes.LinearCodeMap.from_tensor_map(
              dims, lambda x, order=order: np.transpose(x, order)))
  return maps


def _sweep_orbit(start, maps, visited, decomposable, pool):
  """Marks the orbit of `start` as visited.

  Returns:
    (orbit size, whether a member is decomposable)
  """
  frontier = np.array([start], dtype=np.int64)
  visited.add(frontier)
  size = 1
  reducible = bool(np.isin(start, decomposable))
  # no generators at m=1: every orbit is a single code
  while frontier.size and maps:
    if pool is None:
      images = [code_map(frontier) for code_map in maps]
    else:
      images = list(pool.map(lambda code_map: code_map(frontier), maps))
    image = np.unique(np.concatenate(images))
    frontier = image[~visited.contains(image)]
    visited.add(frontier)
    size += frontier.size
    if not reducible and frontier.size:
      reducible = bool(np.isin(frontier, decomposable).any())
  return size, reducible


def _census(m, convention, threads):
  nbits = m**3
  maps = census_maps(m, convention)
  decomposable = tensor_codes.decomposable_codes((m,) * 3)
  visited = tensor_codes.VisitedBitmap(1 << nbits)
  labels, sizes, irreducible = [], [], []
  pool = futures.ThreadPoolExecutor(threads) if threads > 1 else None
  try:
    start = 0
    while start < visited.size:
      size, reducible = _sweep_orbit(start, maps, visited, decomposable, pool)
      labels.append(start)
      sizes.append(size)
      irreducible.append(start != 0 and not reducible)
      logging.debug('orbit of %d: size %d, irreducible %s', start, size,
                    irreducible[-1])
      start = visited.next_clear(start)
  finally:
    if pool is not None:
      pool.shutdown()
  return OrbitCensus(
      m=m,
      convention=convention,
      orbit_count=len(labels),
      irreducible_class_count=int(sum(irreducible)),
      orbit_sizes=tuple(sizes),
      labels=np.array(labels, dtype=np.int64),
      irreducible=np.array(irreducible, dtype=bool))


def select_convention(threads=1):
  """Convention whose m=2 census has the reference irreducible count.

  Args:
    threads: worker threads per census

  Returns:
    CensusConventions.GAUGE or GAUGE_AND_COLORS

  Raises:
    ValueError: if no convention reproduces the reference count
  """
  for convention in (modes.CensusConventions.GAUGE_AND_COLORS,
                     modes.CensusConventions.GAUGE):
    count = _census(2, convention, threads).irreducible_class_count
    logging.info('convention %s: %d irreducible classes at m=2', convention,
                 count)
    if count == REFERENCE_IRREDUCIBLE_COUNTS[2]:
      return convention
  raise ValueError('no census convention yields %d irreducible classes at m=2'
                   % REFERENCE_IRREDUCIBLE_COUNTS[2])


def classify_orbits(m, convention=modes.CensusConventions.AUTO, threads=1):
  """Partitions all 2^(m^3) tensor codes into orbits.

  Every orbit is swept breadth first from its smallest code; all sweeps share
  one packed visited bitmap, so the next orbit starts at the first unvisited code.
  With threads > 1 the generator images of a frontier are computed by a
  thread pool, which does not change the result.

  Args:
    m: index size, 1 <= m <= 3
    convention: CensusConventions value; AUTO runs select_convention first
    threads: worker threads

  Returns:
    OrbitCensus

  Raises:
    ResourceGuardError: if m > 3
  """
  if m < 1:
    raise ValueError('m must be positive, got %d' % m)
  if m > MAX_CENSUS_M:
    raise tensor_codes.ResourceGuardError(
        'orbit census supports m <= %d, got %d' % (MAX_CENSUS_M, m))
  modes.check_mode(convention, modes.CensusConventions.ALL,
                   'census convention')
  if convention == modes.CensusConventions.AUTO:
    convention = select_convention(threads)
  logging.info('census m=%d convention=%s threads=%d', m, convention, threads)
  census = _census(m, convention, threads)
  logging.info('census m=%d: %d orbits, %d irreducible classes', m,
               census.orbit_count, census.irreducible_class_count)
  return census
