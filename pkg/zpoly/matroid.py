# -*- coding: utf-8 -*-
"""
Matroids and their lattices of flats.

A matroid enters zpoly as a :class:`MatroidSpec` -- one of

    * :class:`ExplicitBases` -- ground size and the list of bases
    * :class:`Graph` -- vertex count and edge list, ground element i = edge i
    * :class:`Uniform` -- U_{m,d}, rank d on m + d elements
    * :class:`LinearVectors` -- integer vectors, rank by fraction-free elimination
    * :class:`ExplicitFlats` -- the flats themselves

and :func:`enumerate_flats` turns it into a :class:`FlatLattice` by the closure
algorithm: the flats of rank r + 1 are the closures cl(F + e) of the flats F
of rank r. Loops and parallel elements are absorbed by the closure, so the
result is the geometric lattice of the simplification.

Flats are stored as ground-set bitsets (python ints, bit i = element i) and
ordered by inclusion. Flat ids are assigned in (rank, bitset) order, so the
bottom flat has id 0 and the top flat has the last id.

The JSON form of a spec is documented in docs/source/matroid_json.rst::

    {"type": "uniform", "m": 1, "d": 2}
    {"type": "graph", "vertices": 4, "edges": [[0, 1], [0, 2], ...]}
    {"type": "bases", "n": 3, "bases": [[0, 1], [0, 2], [1, 2]]}
    {"type": "vectors", "vectors": [[1, 0], [0, 1], [1, 1]]}
    {"type": "flats", "n": 2, "flats": [[], [0], [1], [0, 1]]}
"""

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

import json
import os.path

from dataclasses import dataclass, field
from itertools import combinations
from typing import Tuple

import networkx
from networkx.utils import UnionFind

from zpoly.lib import ZPolyError, logger
from zpoly.polyarith import IntPolynomial


__all__ = ["MatroidError", "MatroidSpecError", "LatticeTooLarge",
    "MatroidSpec", "ExplicitBases", "Graph", "Uniform", "LinearVectors",
    "ExplicitFlats", "FlatLattice", "enumerate_flats", "bareiss_rank",
    "spec_from_json", "load_spec", "complete_graph_spec", "boolean_spec",
    "mask_of", "elements_of", "DEFAULT_MAX_FLATS"]

DEFAULT_MAX_FLATS = 2000000

# exchange axiom is checked exhaustively up to this many bases
_EXCHANGE_CHECK_LIMIT = 2000


class MatroidError(ZPolyError):
    """Base class for matroid and lattice errors
    """
    pass


class MatroidSpecError(MatroidError):
    """An inconsistent matroid description. `witness` holds the offending data.
    """

    def __init__(self, message, witness=None):
        super(MatroidSpecError, self).__init__(message)
        self.witness = witness


class LatticeTooLarge(MatroidError):
    """The flat count cap was exceeded
    """
    pass


def mask_of(elements):
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements_of(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _popcount(mask):
    return bin(mask).count("1")


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so each division by the
    previous pivot is exact and no rationals appear.

    :param rows: the matrix rows
    :type rows: sequence of sequences of int
    :rtype: int
    """
    m = [list(row) for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        pivot_row = m[rank]
        for r in range(rank + 1, nrows):
            row = m[r]
            lead = row[col]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * p - pivot_row[c] * lead) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


class MatroidSpec(object):
    """Interface of the matroid descriptions."""

    kind = None

    @property
    def ground_size(self):
        raise NotImplementedError()

    def validate(self):
        """Raises MatroidSpecError with a witness on inconsistent input."""
        raise NotImplementedError()

    def closure_operator(self):
        """Returns a function mapping a ground-set bitset to its closure."""
        raise NotImplementedError()

    def to_json(self):
        raise NotImplementedError()


@dataclass(frozen=True)
class ExplicitBases(MatroidSpec):
    n: int
    bases: Tuple[Tuple[int, ...], ...]

    kind = "bases"

    @property
    def ground_size(self):
        return self.n

    def _masks(self):
        return frozenset(mask_of(b) for b in self.bases)

    def validate(self):
        if not self.bases:
            raise MatroidSpecError("a matroid has at least one basis", witness=[])
        for basis in self.bases:
            for e in basis:
                if not 0 <= e < self.n:
                    raise MatroidSpecError("element %r outside ground set of size %d" % (e, self.n), witness=list(basis))
            if len(set(basis)) != len(basis):
                raise MatroidSpecError("basis %r repeats an element" % (list(basis),), witness=list(basis))
        sizes = set(len(b) for b in self.bases)
        if len(sizes) != 1:
            first = self.bases[0]
            other = next(b for b in self.bases if len(b) != len(first))
            raise MatroidSpecError("bases of different cardinality", witness=[list(first), list(other)])
        masks = self._masks()
        if len(masks) > _EXCHANGE_CHECK_LIMIT:
            logger.debug("skipping exchange check for %d bases", len(masks))
            return
        for b1 in masks:
            for b2 in masks:
                for x in elements_of(b1 & ~b2):
                    if not any(((b1 & ~(1 << x)) | (1 << y)) in masks for y in elements_of(b2 & ~b1)):
                        raise MatroidSpecError("basis exchange fails",
                            witness={"B1": elements_of(b1), "B2": elements_of(b2), "x": x})

    def closure_operator(self):
        masks = self._masks()

        def rank(x):
            return max(_popcount(x & b) for b in masks)

        def closure(x):
            r = rank(x)
            out = x
            for e in range(self.n):
                bit = 1 << e
                if not x & bit and rank(x | bit) == r:
                    out |= bit
            return out

        return closure

    def to_json(self):
        return {"type": "bases", "n": self.n, "bases": [list(b) for b in self.bases]}


@dataclass(frozen=True)
class Graph(MatroidSpec):
    vertices: int
    edges: Tuple[Tuple[int, int], ...]

    kind = "graph"

    @classmethod
    def from_networkx(cls, graph):
        nodes = sorted(graph.nodes())
        position = dict((v, i) for i, v in enumerate(nodes))
        edges = tuple(sorted((position[u], position[v]) if position[u] <= position[v]
            else (position[v], position[u]) for u, v in graph.edges()))
        return cls(len(nodes), edges)

    @property
    def ground_size(self):
        return len(self.edges)

    def validate(self):
        for edge in self.edges:
            if len(edge) != 2 or not all(0 <= v < self.vertices for v in edge):
                raise MatroidSpecError("edge %r outside vertex range %d" % (edge, self.vertices), witness=list(edge))

    def closure_operator(self):
        edges = self.edges
        vertices = self.vertices

        def closure(x):
            components = UnionFind(range(vertices))
            for e in elements_of(x):
                u, v = edges[e]
                components.union(u, v)
            out = 0
            for e, (u, v) in enumerate(edges):
                if components[u] == components[v]:
                    out |= 1 << e
            return out

        return closure

    def to_json(self):
        return {"type": "graph", "vertices": self.vertices, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Uniform(MatroidSpec):
    m: int
    d: int

    kind = "uniform"

    @property
    def ground_size(self):
        return self.m + self.d

    def validate(self):
        if self.m < 0 or self.d < 0:
            raise MatroidSpecError("uniform matroid needs m, d >= 0", witness=[self.m, self.d])

    def closure_operator(self):
        full = (1 << (self.m + self.d)) - 1
        d = self.d

        def closure(x):
            return x if _popcount(x) < d else full

        return closure

    def to_json(self):
        return {"type": "uniform", "m": self.m, "d": self.d}


@dataclass(frozen=True)
class LinearVectors(MatroidSpec):
    vectors: Tuple[Tuple[int, ...], ...]
    _ranks: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    kind = "vectors"

    @property
    def ground_size(self):
        return len(self.vectors)

    def validate(self):
        lengths = set(len(v) for v in self.vectors)
        if len(lengths) > 1:
            raise MatroidSpecError("vectors of different lengths", witness=sorted(lengths))
        for v in self.vectors:
            for c in v:
                if not isinstance(c, int):
                    raise MatroidSpecError("vector entries must be integers", witness=list(v))

    def rank(self, x):
        cached = self._ranks.get(x)
        if cached is None:
            cached = self._ranks[x] = bareiss_rank([self.vectors[e] for e in elements_of(x)])
        return cached

    def closure_operator(self):
        n = len(self.vectors)

        def closure(x):
            r = self.rank(x)
            out = x
            for e in range(n):
                bit = 1 << e
                if not x & bit and self.rank(x | bit) == r:
                    out |= bit
            return out

        return closure

    def to_json(self):
        return {"type": "vectors", "vectors": [list(v) for v in self.vectors]}


@dataclass(frozen=True)
class ExplicitFlats(MatroidSpec):
    n: int
    flats: Tuple[Tuple[int, ...], ...]

    kind = "flats"

    @property
    def ground_size(self):
        return self.n

    def _masks(self):
        return frozenset(mask_of(f) for f in self.flats)

    def validate(self):
        full = (1 << self.n) - 1
        masks = self._masks()
        for flat in self.flats:
            for e in flat:
                if not 0 <= e < self.n:
                    raise MatroidSpecError("element %r outside ground set of size %d" % (e, self.n), witness=list(flat))
        if full not in masks:
            raise MatroidSpecError("the ground set must be a flat", witness=elements_of(full))
        for a, b in combinations(masks, 2):
            if a & b not in masks:
                raise MatroidSpecError("flats not closed under intersection",
                    witness=[elements_of(a), elements_of(b)])

    def closure_operator(self):
        masks = sorted(self._masks(), key=_popcount)
        full = (1 << self.n) - 1

        def closure(x):
            out = full
            for f in masks:
                if f & x == x:
                    out &= f
            return out

        return closure

    def to_json(self):
        return {"type": "flats", "n": self.n, "flats": [list(f) for f in self.flats]}


def complete_graph_spec(n):
    """Graph of K_n; its lattice of flats is the partition lattice of n."""
    return Graph.from_networkx(networkx.complete_graph(n))


def boolean_spec(n):
    return Uniform(0, n)


def spec_from_json(obj):
    """Builds a MatroidSpec from its decoded JSON form.

    :raises MatroidSpecError: on a malformed description
    """
    if not isinstance(obj, dict) or "type" not in obj:
        raise MatroidSpecError("matroid JSON needs an object with a 'type' key", witness=obj)
    kind = obj["type"]
    try:
        if kind == "bases":
            spec = ExplicitBases(int(obj["n"]), tuple(tuple(int(e) for e in b) for b in obj["bases"]))
        elif kind == "graph":
            spec = Graph(int(obj["vertices"]), tuple(tuple(int(v) for v in e) for e in obj["edges"]))
        elif kind == "uniform":
            spec = Uniform(int(obj["m"]), int(obj["d"]))
        elif kind == "vectors":
            spec = LinearVectors(tuple(tuple(int(c) for c in v) for v in obj["vectors"]))
        elif kind == "flats":
            spec = ExplicitFlats(int(obj["n"]), tuple(tuple(int(e) for e in f) for f in obj["flats"]))
        else:
            raise MatroidSpecError("unknown matroid type %r" % (kind,), witness=kind)
    except (KeyError, TypeError, ValueError) as error:
        raise MatroidSpecError("malformed %r matroid: %s" % (kind, error), witness=obj)
    spec.validate()
    return spec


def load_spec(source):
    """Loads a spec from a file path or an inline JSON document.

    :raises MatroidSpecError: with line and column on JSON syntax errors
    """
    path = os.path.expanduser(source)
    if os.path.isfile(path):
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
        origin = path
    else:
        text = source
        origin = "<inline>"
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as error:
        raise MatroidSpecError("%s: line %d column %d: %s" % (origin, error.lineno, error.colno, error.msg),
            witness={"line": error.lineno, "column": error.colno})
    return spec_from_json(obj)


def enumerate_flats(spec, max_flats=DEFAULT_MAX_FLATS):
    """Enumerates the lattice of flats of a matroid spec.

    :param spec: the matroid
    :type spec: MatroidSpec

    :param max_flats: abort once more flats than this have been found
    :type max_flats: int

    :rtype: FlatLattice
    :raises MatroidSpecError: on inconsistent specs, or flat systems that are
        not graded
    :raises LatticeTooLarge: when the cap is exceeded
    """
    spec.validate()
    n = spec.ground_size
    full = (1 << n) - 1
    closure = spec.closure_operator()
    bottom = closure(0)
    rank_of = {bottom: 0}
    covers = []
    frontier = [bottom]
    level = 0
    while frontier:
        following = []
        for flat in frontier:
            remaining = full & ~flat
            while remaining:
                low = remaining & -remaining
                upper = closure(flat | low)
                remaining &= ~upper
                covers.append((flat, upper))
                seen = rank_of.get(upper)
                if seen is None:
                    rank_of[upper] = level + 1
                    following.append(upper)
                    if len(rank_of) > max_flats:
                        raise LatticeTooLarge("more than %d flats" % max_flats)
                elif seen != level + 1:
                    raise MatroidSpecError("flat reached at ranks %d and %d: not graded" % (seen, level + 1),
                        witness=elements_of(upper))
        frontier = following
        level += 1
    if isinstance(spec, ExplicitFlats):
        missing = spec._masks() - set(rank_of)
        if missing:
            raise MatroidSpecError("flat not reachable by covers: not a geometric lattice",
                witness=elements_of(min(missing)))
    lattice = FlatLattice.from_covers(n, rank_of, covers)
    logger.debug("enumerated %d flats of rank %d from %s spec", len(lattice), lattice.rk_total, spec.kind)
    return lattice


class FlatLattice(object):
    """The lattice of flats L of a matroid.

    Attributes: `n` (ground size), `flats` (bitsets by id), `rank` (rank by
    id), `rk_total`, `bottom_id`, `top_id`, `upper` (upper covers by id).
    Query results are cached on the instance; the lattice itself never
    changes after construction.
    """

    def __init__(self, n, flats, ranks, upper):
        self.n = n
        self.flats = tuple(flats)
        self.rank = tuple(ranks)
        self.upper = tuple(tuple(u) for u in upper)
        self.rk_total = self.rank[-1] if self.rank else 0
        self.bottom_id = 0
        self.top_id = len(self.flats) - 1
        self.corank = tuple(self.rk_total - r for r in self.rank)
        self.index = dict((f, i) for i, f in enumerate(self.flats))
        lower = [[] for _ in self.flats]
        for i, ups in enumerate(self.upper):
            for j in ups:
                lower[j].append(i)
        self.lower = tuple(tuple(l) for l in lower)
        self._up = None
        self._down = None
        self._mobius = None
        self._up_by_corank = {}
        self._whitney_memo = {}
        self.memo = {}

    @classmethod
    def from_covers(cls, n, rank_of, covers):
        order = sorted(rank_of, key=lambda f: (rank_of[f], f))
        position = dict((f, i) for i, f in enumerate(order))
        upper = [set() for _ in order]
        for lo, hi in covers:
            upper[position[lo]].add(position[hi])
        return cls(n, order, [rank_of[f] for f in order], [sorted(u) for u in upper])

    def __len__(self):
        return len(self.flats)

    def __repr__(self):
        return "<FlatLattice rank %d, %d flats>" % (self.rk_total, len(self.flats))

    def flat_id(self, flat):
        """Id of a flat given as bitset or as element iterable."""
        if not isinstance(flat, int):
            flat = mask_of(flat)
        try:
            return self.index[flat]
        except KeyError:
            raise MatroidError("%r is not a flat" % (elements_of(flat),))

    def _check_id(self, fid):
        if not isinstance(fid, int) or not 0 <= fid < len(self.flats):
            raise MatroidError("invalid flat id %r" % (fid,))

    def _build_intervals(self):
        down = [None] * len(self.flats)
        for g in range(len(self.flats)):
            acc = {g}
            for h in self.lower[g]:
                acc.update(down[h])
            down[g] = frozenset(acc)
        up = [None] * len(self.flats)
        for f in range(len(self.flats) - 1, -1, -1):
            acc = {f}
            for h in self.upper[f]:
                acc.update(up[h])
            up[f] = frozenset(acc)
        self._down, self._up = tuple(down), tuple(up)

    def up_set(self, fid):
        """Ids of the flats G >= F."""
        if self._up is None:
            self._build_intervals()
        return self._up[fid]

    def down_set(self, fid):
        """Ids of the flats G <= F."""
        if self._down is None:
            self._build_intervals()
        return self._down[fid]

    def upper_of_corank(self, fid, k):
        """Ids of the flats G >= F with crk G = k."""
        grouped = self._up_by_corank.get(fid)
        if grouped is None:
            grouped = {}
            for g in self.up_set(fid):
                grouped.setdefault(self.corank[g], []).append(g)
            grouped = self._up_by_corank[fid] = dict((c, tuple(sorted(v))) for c, v in grouped.items())
        return grouped.get(k, ())

    def flats_of_corank(self, k):
        return self.upper_of_corank(self.bottom_id, k)

    def whitney_numbers(self):
        """Number of flats of each corank 0..rk."""
        counts = [0] * (self.rk_total + 1)
        for c in self.corank:
            counts[c] += 1
        return counts

    def _sub_lattice(self, ids, mask_map, rank_shift):
        ids = sorted(ids, key=lambda i: (self.rank[i] - rank_shift, mask_map(self.flats[i])))
        position = dict((old, new) for new, old in enumerate(ids))
        upper = [[position[j] for j in self.upper[i] if j in position] for i in ids]
        return FlatLattice(self.n, [mask_map(self.flats[i]) for i in ids],
            [self.rank[i] - rank_shift for i in ids], [sorted(u) for u in upper])

    def contraction(self, fid):
        """Lattice of the contraction M^F: the flats G >= F with rank
        rk G - rk F (bitsets G minus F)."""
        self._check_id(fid)
        f = self.flats[fid]
        return self._sub_lattice(self.up_set(fid), lambda g: g & ~f, self.rank[fid])

    def localization(self, fid):
        """Lattice of the localization M_F: the flats G <= F, ranks kept."""
        self._check_id(fid)
        return self._sub_lattice(self.down_set(fid), lambda g: g, 0)

    def is_graded_lattice(self, check_meets=True):
        """Checks that covers raise rank by one, bottom and top are unique and,
        optionally, that the intersection of any two flats is a flat."""
        if not self.flats or self.rank[0] != 0:
            return False
        for i, ups in enumerate(self.upper):
            for j in ups:
                if self.rank[j] != self.rank[i] + 1 or self.flats[i] & ~self.flats[j]:
                    return False
            if not ups and i != self.top_id:
                return False
        if any(self.rank[i] == self.rk_total for i in range(self.top_id)):
            return False
        if check_meets:
            for a, b in combinations(self.flats, 2):
                if a & b not in self.index:
                    return False
        return True

    def mobius_from_bottom(self):
        """Möbius values mu(bottom, F) by flat id, from
        mu(bottom, bottom) = 1 and sum_{G <= F} mu(bottom, G) = 0 for F > bottom."""
        if self._mobius is None:
            mu = [0] * len(self.flats)
            mu[self.bottom_id] = 1
            for f in range(1, len(self.flats)):
                mu[f] = -sum(mu[g] for g in self.down_set(f) if g != f)
            self._mobius = tuple(mu)
        return self._mobius

    def mobius_pairs(self, fid):
        """Möbius values mu(F, G) for all G >= F, as a dict keyed by id.

        Uses Weisner's identity for geometric lattices: with e in G - F,
        mu(F, G) = -sum of mu(F, H) over lower covers H of G with
        F <= H and e not in H.
        """
        f = self.flats[fid]
        mu = {fid: 1}
        for g in sorted(self.up_set(fid), key=lambda i: self.rank[i]):
            if g == fid:
                continue
            rest = self.flats[g] & ~f
            e_bit = rest & -rest
            total = 0
            for h in self.lower[g]:
                value = mu.get(h)
                if value is not None and not self.flats[h] & e_bit:
                    total += value
            mu[g] = -total
        return mu

    def characteristic_polynomial(self):
        """chi(t) = sum_F mu(bottom, F) t^{crk F}."""
        coeffs = [0] * (self.rk_total + 1)
        for f, value in enumerate(self.mobius_from_bottom()):
            coeffs[self.corank[f]] += value
        return IntPolynomial(coeffs)

    def whitney_multi(self, profile, within=None, memo=None):
        """Number of multichains F_r <= ... <= F_1 of flats with crk F_j = i_j.

        :param profile: the coranks [i_r, ..., i_1]
        :param within: optional set of flat ids the chain must stay in
        :param memo: dict shared by calls with the same `within`
        :rtype: int
        """
        profile = tuple(profile)
        if not profile:
            return 1
        if within is None:
            memo = self._whitney_memo
        elif memo is None:
            memo = {}
        return self._chains(self.bottom_id, profile, memo, within)

    def _chains(self, fid, suffix, memo, allowed):
        if not suffix:
            return 1
        key = (fid, suffix)
        cached = memo.get(key)
        if cached is not None:
            return cached
        head, tail = suffix[0], suffix[1:]
        total = 0
        for g in self.upper_of_corank(fid, head):
            if allowed is None or g in allowed:
                total += self._chains(g, tail, memo, allowed)
        memo[key] = total
        return total
