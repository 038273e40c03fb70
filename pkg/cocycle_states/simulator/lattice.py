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

"""Closed d-colorable lattices: the periodic chain and the Union Jack torus."""

import collections
import re
import typing

from cocycle_states.algebra import modes

CHAIN = 'chain'
UNION_JACK = 'union_jack'

A, B, C = modes.Colors.A, modes.Colors.B, modes.Colors.C


class Lattice(typing.NamedTuple):
  """Sites, simplices and their alternation signs.

  Attributes:
    kind: CHAIN or UNION_JACK
    shape: (n,) for a chain, (w, h) for a torus
    colors: color of every site
    simplices: site tuples ordered by color (A, B[, C])
    alternation: sign s of every simplex, +1 or -1
    faces: per simplex, the keys of its (d-1)-faces
    closed: every face is shared by exactly two simplices
  """
  kind: str
  shape: typing.Tuple[int, ...]
  colors: typing.Tuple[int, ...]
  simplices: typing.Tuple[typing.Tuple[int, ...], ...]
  alternation: typing.Tuple[int, ...]
  faces: typing.Tuple[typing.Tuple[typing.Hashable, ...], ...]
  closed: bool

  @property
  def n_sites(self):
    return len(self.colors)

  @property
  def degree(self):
    return len(self.simplices[0])

  @property
  def name(self):
    if self.kind == CHAIN:
      return 'chain-%d' % self.shape[0]
    return '%dx%d' % self.shape

  def sites_of_color(self, color):
    return [s for s, c in enumerate(self.colors) if c == color]


def check_closed(lat):
  """Checks coloring and that faces pair up with opposite signs.

  Args:
    lat: Lattice

  Raises:
    ValueError: if a simplex repeats a color or a face is not shared by
      exactly two simplices of opposite sign
  """
  incidences = collections.defaultdict(list)
  for simplex, sign, faces in zip(lat.simplices, lat.alternation, lat.faces):
    colors = [lat.colors[s] for s in simplex]
    if colors != list(range(len(simplex))):
      raise ValueError('simplex %s is not ordered by color: %s' %
                       (simplex, colors))
    for face in faces:
      incidences[face].append(sign)
  for face, signs in incidences.items():
    if sorted(signs) != [-1, 1]:
      raise ValueError('face %s has simplex signs %s' % (face, signs))


def build_chain(n):
  """Periodic chain of n sites colored A, B, A, B, ...

  Edge i joins sites i and i+1 and has sign (-1)^i; its faces are its two
  sites.

  Args:
    n: even number of sites, n >= 4

  Returns:
    Lattice

  Raises:
    ValueError: for odd or too small n
  """
  if n < 4 or n % 2:
    raise ValueError('chain needs an even number of sites >= 4, got %d' % n)
  colors = tuple(A if i % 2 == 0 else B for i in range(n))
  simplices, alternation, faces = [], [], []
  for i in range(n):
    j = (i + 1) % n
    edge = (i, j) if colors[i] == A else (j, i)
    simplices.append(edge)
    alternation.append(1 if i % 2 == 0 else -1)
    faces.append((('site', i), ('site', j)))
  lat = Lattice(CHAIN, (n,), colors, tuple(simplices), tuple(alternation),
                tuple(faces), True)
  check_closed(lat)
  return lat


def build_union_jack(w, h):
  """Union Jack torus of w x h unit squares.

  Corner (x, y) is site y*w + x, colored A when x + y is even and B
  otherwise; the center of square (x, y) is site w*h + y*w + x, colored C.
  Every square holds the bottom, right, top and left triangles spanned by
  one of its sides and its center, with signs sigma * (+1, -1, +1, -1) for
  sigma = (-1)^(x+y).

  Args:
    w: even width
    h: even height

  Returns:
    Lattice

  Raises:
    ValueError: for odd or non-positive sizes
  """
  if w < 2 or h < 2 or w % 2 or h % 2:
    raise ValueError('Union Jack torus needs even sizes >= 2, got %dx%d' %
                     (w, h))

  def corner(x, y):
    return (y % h) * w + (x % w)

  colors = [A if (x + y) % 2 == 0 else B for y in range(h) for x in range(w)]
  colors += [C] * (w * h)
  simplices, alternation, faces = [], [], []
  for y in range(h):
    for x in range(w):
      center = w * h + y * w + x
      sigma = 1 if (x + y) % 2 == 0 else -1
      sides = (
          ((0, 0), (1, 0), ('row', x, y)),
          ((1, 0), (1, 1), ('column', (x + 1) % w, y)),
          ((1, 1), (0, 1), ('row', x, (y + 1) % h)),
          ((0, 1), (0, 0), ('column', x, y)),
      )
      for n, (first, second, side) in enumerate(sides):
        ends = sorted((corner(x + first[0], y + first[1]),
                       corner(x + second[0], y + second[1])),
                      key=lambda s: colors[s])
        simplices.append((ends[0], ends[1], center))
        alternation.append(sigma if n % 2 == 0 else -sigma)
        faces.append((side, ('spoke', x, y) + first, ('spoke', x, y) + second))
  lat = Lattice(UNION_JACK, (w, h), tuple(colors), tuple(simplices),
                tuple(alternation), tuple(faces), True)
  check_closed(lat)
  return lat


def lattice_from_name(name):
  """Parses 'chain-N' or 'WxH'."""
  match = re.fullmatch(r'chain-(\d+)', name)
  if match:
    return build_chain(int(match.group(1)))
  match = re.fullmatch(r'(\d+)x(\d+)', name)
  if match:
    return build_union_jack(int(match.group(1)), int(match.group(2)))
  raise ValueError('Unknown lattice "%s", expected chain-N or WxH' % name)
