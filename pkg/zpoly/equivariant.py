# -*- coding: utf-8 -*-
"""
Equivariant Whitney numbers and Kazhdan-Lusztig coefficients.

For a finite permutation group acting on the ground set and preserving the
flats, the multichains of a given corank profile form a permutation
representation; its character at g is the number of multichains fixed by g,
i.e. the multichains inside the flats fixed by g. The equivariant
coefficient c^G(i) is the signed sum of these characters over the index
tuples of the closed formula, kept as a virtual character (an integer
class function).

For U_{m,d} under the full symmetric group the same objects are written as
symmetric functions in the complete homogeneous basis and expanded in the
Schur basis via Kostka numbers.

Errors raised here are :class:`EquivariantError`.
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

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Dict, Tuple

from zpoly.klz import enumerate_index_tuples, t_index
from zpoly.lib import ZPolyError, logger
from zpoly.matroid import elements_of


__all__ = ["EquivariantError", "PermGroup", "symmetric_group",
    "trivial_group", "permute_mask", "ClassFunctionTable", "SymFunction",
    "as_partition", "partitions", "kostka", "hook_length_dimension",
    "equivariant_whitney_character", "equivariant_c_character", "h_product",
    "equivariant_whitney_uniform", "equivariant_c_uniform", "h_to_schur",
    "dimension", "is_schur_positive", "MAX_GROUP_ORDER", "MAX_SCHUR_DEGREE"]

MAX_GROUP_ORDER = 10 ** 6
MAX_SCHUR_DEGREE = 12


class EquivariantError(ZPolyError):
    """Bad group, partition or degree
    """
    pass


def permute_mask(mask, perm):
    """Image of a ground-set bitset under perm (perm[i] = image of i)."""
    out = 0
    for e in elements_of(mask):
        out |= 1 << perm[e]
    return out


def _compose(a, b):
    """a after b."""
    return tuple(a[x] for x in b)


def _inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class PermGroup(object):
    """Finite permutation group on 0..n-1, closed from generators by
    breadth-first multiplication.

    :param n: degree
    :param generators: permutations as image tuples
    :param max_order: closure cap
    """

    def __init__(self, n, generators, max_order=MAX_GROUP_ORDER):
        self.n = n
        identity = tuple(range(n))
        gens = []
        for g in generators:
            g = tuple(g)
            if sorted(g) != list(identity):
                raise EquivariantError("%r is not a permutation of %d points" % (g, n))
            gens.append(g)
        self.generators = tuple(gens)
        self.identity = identity
        elements = {identity}
        frontier = [identity]
        while frontier:
            following = []
            for a in self.generators:
                for b in frontier:
                    c = _compose(a, b)
                    if c not in elements:
                        elements.add(c)
                        following.append(c)
                        if len(elements) > max_order:
                            raise EquivariantError("group closure exceeds %d elements" % max_order)
            frontier = following
        self.elements = tuple(sorted(elements))
        self._classes = None

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def conjugate(self, g, by):
        return _compose(_compose(by, g), _inverse(by))

    def conjugacy_classes(self):
        """Classes as tuples of elements, each sorted, listed by smallest member."""
        if self._classes is None:
            seen = set()
            classes = []
            for g in self.elements:
                if g in seen:
                    continue
                orbit = {g}
                frontier = [g]
                while frontier:
                    following = []
                    for x in frontier:
                        for s in self.generators:
                            y = self.conjugate(x, s)
                            if y not in orbit:
                                orbit.add(y)
                                following.append(y)
                    frontier = following
                seen |= orbit
                classes.append(tuple(sorted(orbit)))
            self._classes = tuple(classes)
        return self._classes

    @classmethod
    def on_edges(cls, graph, vertex_generators):
        """The action induced on the edges of a Graph spec by vertex permutations.

        :raises EquivariantError: if a permutation does not preserve the edge set
        """
        position = dict((tuple(sorted(e)), i) for i, e in enumerate(graph.edges))
        gens = []
        for perm in vertex_generators:
            image = []
            for u, v in graph.edges:
                key = tuple(sorted((perm[u], perm[v])))
                if key not in position:
                    raise EquivariantError("vertex permutation %r does not preserve the edges" % (tuple(perm),))
                image.append(position[key])
            gens.append(tuple(image))
        return cls(len(graph.edges), gens)


def symmetric_group(n):
    """S_n generated by a transposition and an n-cycle."""
    gens = []
    if n > 1:
        gens.append((1, 0) + tuple(range(2, n)))
        gens.append(tuple(range(1, n)) + (0,))
    return PermGroup(n, gens)


def trivial_group(n):
    return PermGroup(n, [])


@dataclass
class ClassFunctionTable:
    """Integer class function on a PermGroup, by element."""
    group: PermGroup
    values: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, g):
        return self.values[tuple(g)]

    @property
    def identity_value(self):
        return self.values[self.group.identity]

    def is_class_function(self, full=False):
        """Checks invariance under conjugation, by the generators or, with
        `full`, by every element."""
        conjugators = self.group.elements if full else self.group.generators
        for g, value in self.values.items():
            for s in conjugators:
                if self.values[self.group.conjugate(g, s)] != value:
                    return False
        return True

    def __add__(self, other):
        return ClassFunctionTable(self.group, dict((g, v + other.values[g]) for g, v in self.values.items()))

    def __mul__(self, k):
        return ClassFunctionTable(self.group, dict((g, k * v) for g, v in self.values.items()))

    __rmul__ = __mul__

    def to_json(self):
        return [{"representative": list(cls[0]), "size": len(cls), "value": self.values[cls[0]]}
            for cls in self.group.conjugacy_classes()]


def _check_action(lat, group):
    for s in group.generators:
        if len(s) != lat.n:
            raise EquivariantError("group of degree %d on a ground set of size %d" % (len(s), lat.n))
        for flat in lat.flats:
            if permute_mask(flat, s) not in lat.index:
                raise _not_flat_preserving(s, flat)


def _not_flat_preserving(generator, flat):
    error = EquivariantError("generator %r maps flat %r to a non-flat" % (generator, elements_of(flat)))
    error.witness = {"generator": list(generator), "flat": elements_of(flat)}
    return error


def _fixed_flats(lat, g):
    return frozenset(i for i, flat in enumerate(lat.flats) if permute_mask(flat, g) == flat)


def _fixed_value(lat, g, weighted_profiles):
    fixed = _fixed_flats(lat, g)
    memo = {}
    return sum(weight * lat.whitney_multi(profile, within=fixed, memo=memo)
        for weight, profile in weighted_profiles)


def _character(lat, group, weighted_profiles, per_element=False):
    """sum of weight * #fixed multichains of profile, per element.

    By default the count runs once per conjugacy class and is copied to the
    class; with `per_element` every element is counted on its own, which
    makes conjugation invariance a property to check rather than a given.
    """
    _check_action(lat, group)
    values = {}
    if per_element:
        for g in group.elements:
            values[g] = _fixed_value(lat, g, weighted_profiles)
        return ClassFunctionTable(group, values)
    for cls in group.conjugacy_classes():
        value = _fixed_value(lat, cls[0], weighted_profiles)
        for g in cls:
            values[g] = value
    return ClassFunctionTable(group, values)


def equivariant_whitney_character(lat, group, profile, per_element=False):
    """Permutation character of the multichains with corank profile `profile`.

    :raises EquivariantError: when a generator does not permute the flats
    """
    return _character(lat, group, [(1, tuple(profile))], per_element)


def equivariant_c_character(lat, group, i, per_element=False):
    """Virtual character of the equivariant coefficient c^G(i): the signed sum
    of Whitney permutation characters over the closed-formula index tuples."""
    if i < 1:
        raise EquivariantError("equivariant coefficient needs i >= 1, got %d" % i)
    terms = [(t.sign, t.profile()) for t in enumerate_index_tuples(i, lat.rk_total)]
    return _character(lat, group, terms, per_element)


def as_partition(parts):
    """Sorted positive parts; zeros are dropped.

    :raises EquivariantError: on a negative part
    """
    parts = list(parts)
    for p in parts:
        if p < 0:
            raise EquivariantError("negative part %d in %r" % (p, parts))
    return tuple(sorted((p for p in parts if p), reverse=True))


def partitions(n, largest=None):
    """All partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _horizontal_strips(shape, k):
    """Shapes nu inside `shape` with shape/nu a horizontal strip of size k."""
    shape = list(shape)
    out = []

    def walk(row, remaining, nu):
        if row == len(shape):
            if remaining == 0:
                out.append(tuple(x for x in nu if x))
            return
        below = shape[row + 1] if row + 1 < len(shape) else 0
        for take in range(min(remaining, shape[row] - below) + 1):
            walk(row + 1, remaining - take, nu + [shape[row] - take])

    walk(0, k, [])
    return out


@lru_cache(maxsize=None)
def kostka(shape, content):
    """Number of semistandard tableaux of `shape` with content `content`,
    peeling off the largest entry as a horizontal strip."""
    shape, content = as_partition(shape), tuple(p for p in content if p)
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1
    last = content[-1]
    return sum(kostka(nu, content[:-1]) for nu in _horizontal_strips(shape, last))


def hook_length_dimension(shape):
    """Number of standard Young tableaux of the shape."""
    shape = as_partition(shape)
    conjugate = [sum(1 for row in shape if row > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conjugate[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def _multinomial(parts):
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


class SymFunction(object):
    """Homogeneous symmetric function with integer coefficients in the
    complete homogeneous ('h') or Schur ('s') basis.

    :param basis: 'h' or 's'
    :param terms: partition -> coefficient
    :param degree: common size of the partitions; required for zero
    """

    __slots__ = ("basis", "terms", "degree")

    def __init__(self, basis, terms=None, degree=None):
        if basis not in ("h", "s"):
            raise EquivariantError("unknown basis %r" % (basis,))
        clean = {}
        for part, coeff in (terms or {}).items():
            part = as_partition(part)
            if coeff:
                clean[part] = clean.get(part, 0) + coeff
        clean = dict((p, c) for p, c in clean.items() if c)
        sizes = set(sum(p) for p in clean)
        if len(sizes) > 1:
            raise EquivariantError("inhomogeneous terms of degrees %s" % sorted(sizes))
        if sizes:
            size = sizes.pop()
            if degree is not None and degree != size:
                raise EquivariantError("terms of degree %d, declared %d" % (size, degree))
            degree = size
        self.basis = basis
        self.terms = clean
        self.degree = degree

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SymFunction):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, tuple(sorted(self.terms.items()))))

    def _merge(self, other, sign):
        if self.is_zero() and self.basis != other.basis:
            return other * sign
        if other.is_zero():
            return self
        if self.basis != other.basis:
            raise EquivariantError("cannot add %s-basis and %s-basis functions" % (self.basis, other.basis))
        terms = dict(self.terms)
        for part, coeff in other.terms.items():
            terms[part] = terms.get(part, 0) + sign * coeff
        return SymFunction(self.basis, terms, self.degree if self.degree is not None else other.degree)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, k):
        return SymFunction(self.basis, dict((p, k * c) for p, c in self.terms.items()), self.degree)

    __rmul__ = __mul__

    def items(self):
        """Terms sorted by partition, largest first."""
        return sorted(self.terms.items(), reverse=True)

    def render(self):
        if self.is_zero():
            return "0"
        out = []
        for n, (part, coeff) in enumerate(self.items()):
            body = "%s[%s]" % (self.basis, ",".join(str(p) for p in part))
            magnitude = abs(coeff)
            term = body if magnitude == 1 else "%d·%s" % (magnitude, body)
            if n == 0:
                out.append(term if coeff > 0 else "-" + term)
            else:
                out.append(("+ " if coeff > 0 else "- ") + term)
        return " ".join(out)

    def to_json(self):
        return {"basis": self.basis, "degree": self.degree,
            "terms": [{"partition": list(p), "coeff": c} for p, c in self.items()]}

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "SymFunction(%r, %r)" % (self.basis, self.terms)


def h_product(parts):
    """h_{parts} as a single H-basis term; zero parts are the unit."""
    part = as_partition(parts)
    return SymFunction("h", {part: 1}, sum(part))


def equivariant_whitney_uniform(m, d, profile):
    """The S_{m+d} permutation module of the multichains of U_{m,d} with
    corank profile [i_r, ..., i_1], as a product of complete homogeneous
    functions h[d - i_r] h[i_r - i_{r-1}] ... h[i_2 - i_1] h[m + i_1].

    Corank 0 entries force the top flat and contribute no factor; the empty
    profile is the trivial module h[m + d]. A profile that is not weakly
    decreasing inside [0, d] gives the zero function.
    """
    profile = list(profile)
    n = m + d
    bounded = [d] + profile
    if any(b > a for a, b in zip(bounded, bounded[1:])) or any(i < 0 for i in profile):
        return SymFunction("h", {}, n)
    inner = [i for i in profile if i > 0]
    if not inner:
        return h_product([n])
    factors = [d - inner[0]]
    factors += [inner[j] - inner[j + 1] for j in range(len(inner) - 1)]
    factors.append(m + inner[-1])
    return h_product(factors)


def equivariant_c_uniform(m, d, i):
    """c^{S_{m+d}}_{U_{m,d}}(i) in the H basis: the signed sum over index tuples
    of h[m + a_{t_1(S)}] * prod_{j in S} h[a_j - a_{j-1}]
    * prod_{j not in S} h[a_{t_{j+1}(S)} - a_{j-1}]."""
    if i < 1:
        raise EquivariantError("equivariant coefficient needs i >= 1, got %d" % i)
    total = SymFunction("h", {}, m + d)
    for tup in enumerate_index_tuples(i, d):
        a, S, r = tup.a, tup.S, tup.r
        factors = [m + a[t_index(1, S, r)]]
        for j in range(1, r + 1):
            if j in S:
                factors.append(a[j] - a[j - 1])
            else:
                factors.append(a[t_index(j + 1, S, r)] - a[j - 1])
        total = total + h_product(factors) * tup.sign
    return total


def h_to_schur(f):
    """Schur expansion h_lambda = sum_mu K_{mu lambda} s_mu.

    :raises EquivariantError: above MAX_SCHUR_DEGREE
    """
    if f.basis == "s":
        return f
    if f.degree is not None and f.degree > MAX_SCHUR_DEGREE:
        raise EquivariantError("degree %d above the Schur expansion bound %d" % (f.degree, MAX_SCHUR_DEGREE))
    terms = {}
    for part, coeff in f.terms.items():
        for shape in partitions(sum(part)):
            k = kostka(shape, part)
            if k:
                terms[shape] = terms.get(shape, 0) + coeff * k
    return SymFunction("s", terms, f.degree)


def dimension(f, n):
    """Dimension of the (virtual) S_n representation with Frobenius characteristic f.

    :raises EquivariantError: if f is not of degree n
    """
    if f.is_zero():
        return 0
    if f.degree != n:
        raise EquivariantError("function of degree %d, expected %d" % (f.degree, n))
    basis_dim = _multinomial if f.basis == "h" else hook_length_dimension
    return sum(coeff * basis_dim(part) for part, coeff in f.terms.items())


def is_schur_positive(f):
    positive = all(c >= 0 for c in h_to_schur(f).terms.values())
    if not positive:
        logger.info("not Schur positive: %s", h_to_schur(f))
    return positive
