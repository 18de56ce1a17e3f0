# -*- coding: utf-8 -*-

'''Named matroid corpora used by the verification suites.

The "full" corpus holds every uniform matroid U_{m,d} with m + d <= 9, the
graphic matroids of all connected graphs on at most 5 vertices, braid
matroids up to rank 6, type B up to rank 4 and the F_2 vector matroids up to
rank 3. The "small" corpus is a quick subset for everyday runs.

The equivariant corpus pairs a matroid with a permutation group of order at
most 5040 acting on its ground set by lattice automorphisms.'''

# This file is part of zpoly
#
# zpoly is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# zpoly is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with zpoly.  If not, see <http://www.gnu.org/licenses/>.

from collections import namedtuple

import networkx
from networkx.algorithms.isomorphism import GraphMatcher

from zpoly.equivariant import PermGroup, symmetric_group
from zpoly.families import NiceFamily, realize
from zpoly.argparser_groups import UsageError
from zpoly.lib import logger
from zpoly.matroid import Graph, Uniform

__all__ = ["CORPORA", "CorpusEntry", "EquivariantEntry", "corpus",
    "family_corpus", "equivariant_corpus", "MAX_CORPUS_GROUP_ORDER"]

CORPORA = ("small", "full")

MAX_CORPUS_GROUP_ORDER = 5040

CorpusEntry = namedtuple("CorpusEntry", "name spec")
EquivariantEntry = namedtuple("EquivariantEntry", "name spec group")

_BOUNDS = {
    # uniform m + d, graph vertices, braid d, typeb d, qvec(2) d
    "small": (5, 4, 4, 3, 2),
    "full": (9, 5, 6, 4, 3),
}


def _check(name):
    if name not in _BOUNDS:
        raise UsageError("unknown corpus %r, expected one of %s" % (name, ", ".join(CORPORA)))
    return _BOUNDS[name]


def connected_graphs(max_vertices):
    """Connected graphs with at least one edge and at most max_vertices
    vertices, one per isomorphism class, from the networkx atlas."""
    out = []
    for graph in networkx.graph_atlas_g():
        if graph.number_of_nodes() > max_vertices:
            break
        if graph.number_of_edges() and networkx.is_connected(graph):
            out.append(graph)
    return out


def family_corpus(name="full"):
    """Realized members of the nice families within the corpus bounds."""
    _, _, braid_max, typeb_max, qvec_max = _check(name)
    bounds = ((NiceFamily.braid(), braid_max), (NiceFamily.type_b(), typeb_max),
        (NiceFamily.qvec(2), qvec_max))
    return [CorpusEntry("%s:d=%d" % (family, d), realize(family, d))
        for family, d_max in bounds for d in range(1, d_max + 1)]


def corpus(name="full"):
    """The named corpus as a list of CorpusEntry(name, spec).

    :raises UsageError: on an unknown corpus name
    """
    uniform_max, graph_max, _, _, _ = _check(name)
    entries = []
    for n in range(1, uniform_max + 1):
        for d in range(1, n + 1):
            entries.append(CorpusEntry("U(%d,%d)" % (n - d, d), Uniform(n - d, d)))
    for index, graph in enumerate(connected_graphs(graph_max)):
        entries.append(CorpusEntry("graph:%s" % (graph.name or index), Graph.from_networkx(graph)))
    entries.extend(family_corpus(name))
    logger.debug("corpus %s: %d matroids", name, len(entries))
    return entries


def _automorphisms(graph):
    nodes = sorted(graph.nodes())
    position = dict((v, i) for i, v in enumerate(nodes))
    return [tuple(position[mapping[v]] for v in nodes)
        for mapping in GraphMatcher(graph, graph).isomorphisms_iter()]


def equivariant_corpus(name="full"):
    """Matroids with a group of lattice automorphisms: U_{m,d} under the full
    symmetric group and connected graphs under their automorphism groups
    acting on edges."""
    uniform_max, graph_max, _, _, _ = _check(name)
    entries = []
    for n in range(1, min(uniform_max, 7) + 1):
        group = symmetric_group(n)
        for d in range(1, n + 1):
            entries.append(EquivariantEntry("U(%d,%d)" % (n - d, d), Uniform(n - d, d), group))
    for index, graph in enumerate(connected_graphs(graph_max)):
        spec = Graph.from_networkx(graph)
        group = PermGroup.on_edges(spec, _automorphisms(graph))
        if group.order <= MAX_CORPUS_GROUP_ORDER:
            entries.append(EquivariantEntry("graph:%s" % (graph.name or index), spec, group))
    return entries
