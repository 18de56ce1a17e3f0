# -*- coding: utf-8 -*-
"""
Nice families of matroids: sequences M_0, M_1, ... with rk M_d = d whose
contractions by flats of corank k are (up to simplification) M_k.

For such a family everything is determined by two triangular tables,
W_d(k) (number of flats of corank k in M_d) and w_d(k) (coefficient of t^k
in the characteristic polynomial of M_d), so the Kazhdan-Lusztig and
Z-polynomials follow from big-integer recursions instead of lattice
enumeration.

Supported families, by descriptor:

    braid        M_d = matroid of K_{d+1} (flats = set partitions of d+1)
    typeb        M_d = vectors e_i, e_i + e_j, e_i - e_j of the type B_d arrangement
    uniform:<m>  M_d = U_{m,d}
    qvec:<q>     M_d = all vectors of F_q^d

Errors raised here are :class:`FamilyError`.
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

import csv
import io

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

import numpy

from zpoly.lib import ZPolyError, logger
from zpoly.matroid import (DEFAULT_MAX_FLATS, ExplicitFlats, LatticeTooLarge,
    LinearVectors, Uniform, complete_graph_spec, enumerate_flats)
from zpoly.klz import enumerate_index_tuples, t_index
from zpoly.polyarith import (IntPolynomial, RatPolynomial, TruncatedSeries,
    is_palindromic, series_exp, series_inv, series_log, series_sqrt_inv,
    series_variable)


__all__ = ["FamilyError", "NiceFamily", "WhitneyTables", "stirling2",
    "stirling1_signed", "gaussian_binomial", "binomial", "build_tables",
    "kl_family", "z_family", "whitney_multi_family", "kl_closed_family",
    "narayana", "q_shift_check", "gaussian_identity_holds",
    "narayana_identity_holds", "w_inversion_holds", "palindromic_up_to",
    "series_identity_check", "generating_series_check", "tables_csv",
    "realize", "family_lattice", "type_b_vectors", "qvec_flats_spec"]

FAMILY_KINDS = ("braid", "typeb", "uniform", "qvec")


class FamilyError(ZPolyError):
    """Unknown family, rank outside the tables, or an unrealizable instance
    """
    pass


def _is_prime_power(q):
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


def _is_prime(q):
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


@dataclass(frozen=True)
class NiceFamily:
    """A nice family. `param` is m for uniform and q for qvec, else 0."""
    kind: str
    param: int = 0

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise FamilyError("unknown family %r, expected one of %s" % (self.kind, ", ".join(FAMILY_KINDS)))
        if self.kind == "uniform" and self.param < 1:
            raise FamilyError("uniform family needs m >= 1, got %d" % self.param)
        if self.kind == "qvec" and not _is_prime_power(self.param):
            raise FamilyError("qvec family needs a prime power q, got %d" % self.param)

    @classmethod
    def braid(cls):
        return cls("braid")

    @classmethod
    def type_b(cls):
        return cls("typeb")

    @classmethod
    def uniform(cls, m):
        return cls("uniform", m)

    @classmethod
    def qvec(cls, q):
        return cls("qvec", q)

    @classmethod
    def parse(cls, descriptor):
        """Parses 'braid', 'typeb', 'uniform:<m>' or 'qvec:<q>'."""
        kind, _, param = descriptor.strip().lower().partition(":")
        if kind in ("braid", "typeb"):
            if param:
                raise FamilyError("family %r takes no parameter" % kind)
            return cls(kind)
        if kind in ("uniform", "qvec"):
            try:
                return cls(kind, int(param))
            except ValueError:
                raise FamilyError("family %r needs an integer parameter, got %r" % (kind, param))
        raise FamilyError("unknown family %r, expected one of braid, typeb, uniform:<m>, qvec:<q>" % descriptor)

    def __str__(self):
        if self.kind in ("uniform", "qvec"):
            return "%s:%d" % (self.kind, self.param)
        return self.kind


@lru_cache(maxsize=None)
def _stirling2_row(n):
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1) + (0,)
    return tuple((k * prev[k] if k else 0) + (prev[k - 1] if k else 0) for k in range(n + 1))


@lru_cache(maxsize=None)
def _stirling1_row(n):
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1) + (0,)
    return tuple((prev[k - 1] if k else 0) - (n - 1) * prev[k] for k in range(n + 1))


def stirling2(n, k):
    """Number of partitions of an n-set into k blocks; 0 out of range."""
    if n < 0 or not 0 <= k <= n:
        return 0
    return _stirling2_row(n)[k]


def stirling1_signed(n, k):
    """Signed Stirling number of the first kind: t(t-1)...(t-n+1) = sum_k s(n,k) t^k."""
    if n < 0 or not 0 <= k <= n:
        return 0
    return _stirling1_row(n)[k]


def binomial(n, k):
    if n < 0 or not 0 <= k <= n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of F_q^n; 0 out of range."""
    if n < 0 or not 0 <= k <= n:
        return 0
    if k == 0 or k == n:
        return 1
    return gaussian_binomial(n - 1, k - 1, q) + q ** k * gaussian_binomial(n - 1, k, q)


@dataclass
class WhitneyTables:
    """W[d, k] and w[d, k] for 0 <= k <= d <= d_max, as numpy object arrays of
    python ints (zero above the diagonal)."""
    family: NiceFamily
    d_max: int
    W: numpy.ndarray
    w: numpy.ndarray
    _kl: list = field(default_factory=list, repr=False, compare=False)

    def check(self, d):
        if not 0 <= d <= self.d_max:
            raise FamilyError("rank %d outside tables of %s (d_max %d)" % (d, self.family, self.d_max))

    def flat_count(self, d):
        self.check(d)
        return sum(self.W[d, k] for k in range(d + 1))


def _family_entries(family, d, k):
    """(W_d(k), w_d(k)) for one table cell."""
    if family.kind == "braid":
        return stirling2(d + 1, k + 1), stirling1_signed(d + 1, k + 1)
    if family.kind == "typeb":
        big = sum(2 ** (j - k) * binomial(d, j) * stirling2(j, k) for j in range(k, d + 1))
        small = (-1) ** (d - k) * sum((-2) ** (d - j) * binomial(j, k) * stirling1_signed(d, j)
            for j in range(k, d + 1))
        return big, small
    if family.kind == "uniform":
        m = family.param
        if k == 0:
            if d == 0:
                return 1, 1
            return 1, sum((-1) ** (d + j) * binomial(d + m, d + j) for j in range(m + 1))
        return binomial(d + m, k + m), (-1) ** (d - k) * binomial(d + m, k + m)
    q = family.param
    gauss = gaussian_binomial(d, k, q)
    return gauss, (-1) ** (d - k) * q ** ((d - k) * (d - k - 1) // 2) * gauss


@lru_cache(maxsize=64)
def build_tables(family, d_max):
    """Fills the W and w tables of a family up to rank d_max.

    :type family: NiceFamily
    :type d_max: int
    :rtype: WhitneyTables
    """
    if d_max < 0:
        raise FamilyError("d_max must be >= 0, got %d" % d_max)
    W = numpy.zeros((d_max + 1, d_max + 1), dtype=object)
    w = numpy.zeros((d_max + 1, d_max + 1), dtype=object)
    for d in range(d_max + 1):
        for k in range(d + 1):
            W[d, k], w[d, k] = _family_entries(family, d, k)
    W.flags.writeable = False
    w.flags.writeable = False
    logger.debug("built %s tables to d=%d", family, d_max)
    return WhitneyTables(family, d_max, W, w)


def _tables(family, d, tables):
    if tables is None:
        tables = build_tables(family, max(d, 0))
    tables.check(d)
    return tables


def _kl_upto(tables, d):
    polys = tables._kl
    while len(polys) <= d:
        n = len(polys)
        coeffs = [1]
        for i in range(1, (n + 1) // 2):
            total = 0
            for k in range(n):
                weight = tables.W[n, k]
                total += weight * (polys[k][k - i] - polys[k][i - n + k])
            coeffs.append(total)
        polys.append(IntPolynomial(coeffs))
    return polys


def kl_family(family, d, tables=None):
    """P_d(t) by c_d(i) = sum_{k<d} W_d(k) c_k(k - i) - sum_{k<d} W_d(k) c_k(i - d + k).

    :raises FamilyError: when d is outside the supplied tables
    """
    tables = _tables(family, d, tables)
    return _kl_upto(tables, d)[d]


def z_family(family, d, tables=None):
    """Z_d(t) = sum_k W_d(k) t^{d-k} P_k(t)."""
    tables = _tables(family, d, tables)
    polys = _kl_upto(tables, d)
    coeffs = [0] * (d + 1)
    for k in range(d + 1):
        weight = tables.W[d, k]
        for j, c in enumerate(polys[k]):
            coeffs[d - k + j] += weight * c
    return IntPolynomial(coeffs)


def whitney_multi_family(family, d, profile, tables=None):
    """W(i_r, ..., i_1) of M_d as the product W_d(i_r) W_{i_r}(i_{r-1}) ... W_{i_2}(i_1)."""
    tables = _tables(family, d, tables)
    total = 1
    upper = d
    for i in profile:
        if not 0 <= i <= upper:
            return 0
        total *= tables.W[upper, i]
        upper = i
    return total


def kl_closed_family(family, d, i, tables=None):
    """c_d(i) as the signed sum over index tuples of
    prod_j W_{a_{t_{j+1}(S)} + a_j}(a_{t_j(S)} + a_{j-1})."""
    tables = _tables(family, d, tables)
    total = 0
    for tup in enumerate_index_tuples(i, d):
        a, S, r = tup.a, tup.S, tup.r
        term = 1
        for j in range(1, r + 1):
            upper = a[t_index(j + 1, S, r)] + a[j]
            lower = a[t_index(j, S, r)] + a[j - 1]
            term *= tables.W[upper, lower] if 0 <= lower <= upper else 0
        total += tup.sign * term
    return total


def narayana(n, k):
    """N(n, k) = binom(n, k) binom(n, k-1) / n; 0 out of range."""
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def narayana_identity_holds(d_max):
    family = NiceFamily.uniform(1)
    tables = build_tables(family, d_max)
    for d in range(d_max + 1):
        z = z_family(family, d, tables)
        if any(z[i] != narayana(d + 1, i + 1) for i in range(d + 1)):
            logger.info("narayana identity fails at d=%d: %s", d, z)
            return False
    return True


def gaussian_identity_holds(q, d_max):
    family = NiceFamily.qvec(q)
    tables = build_tables(family, d_max)
    for d in range(d_max + 1):
        z = z_family(family, d, tables)
        if any(z[i] != gaussian_binomial(d, i, q) for i in range(d + 1)):
            logger.info("gaussian identity fails at q=%d d=%d: %s", q, d, z)
            return False
    return True


def q_shift_check(q, d_max):
    """True iff Z_d(t) = Z_{d-1}(qt) + t Z_{d-1}(t) for 1 <= d <= d_max."""
    family = NiceFamily.qvec(q)
    tables = build_tables(family, d_max)
    for d in range(1, d_max + 1):
        prev = z_family(family, d - 1, tables)
        if z_family(family, d, tables) != prev.substitute_scale(q) + prev.shift(1):
            logger.info("shift identity fails at q=%d d=%d", q, d)
            return False
    return True


def w_inversion_holds(family, d_max):
    """Checks P_d(t) = sum_k w_d(k) t^{d-k} Z_k(t) on the family outputs."""
    tables = build_tables(family, d_max)
    zs = [z_family(family, d, tables) for d in range(d_max + 1)]
    for d in range(d_max + 1):
        total = IntPolynomial()
        for k in range(d + 1):
            total = total + zs[k].shift(d - k) * tables.w[d, k]
        if total != kl_family(family, d, tables):
            logger.info("w-table inversion fails for %s at d=%d", family, d)
            return False
    return True


def palindromic_up_to(family, d_max):
    tables = build_tables(family, d_max)
    return all(is_palindromic(z_family(family, d, tables), d) for d in range(d_max + 1))


def _t():
    return RatPolynomial([0, 1])


def _table_series(tables, column, k, order, exponential):
    """t^{-k} sum_{d >= k} column[d, k] (tu)^d [/ d!] as a series in u."""
    coeffs = [0] * (order + 1)
    for d in range(k, min(order, tables.d_max) + 1):
        scale = Fraction(1, factorial(d)) if exponential else 1
        coeffs[d] = RatPolynomial.coerce(IntPolynomial.monomial(d - k, getattr(tables, column)[d, k])) * scale
    return TruncatedSeries(coeffs, order)


def _closed_g(family, k, order):
    """t^{-k} g~_k(tu) from its closed form."""
    if family.kind == "braid":
        one_plus = 1 + series_variable(order, _t())
        series = series_inv(one_plus) * series_log(one_plus) ** k * Fraction(1, factorial(k))
    else:
        one_plus = 1 + series_variable(order, _t() * 2)
        series = series_sqrt_inv(one_plus) * series_log(one_plus) ** k * Fraction(1, 2 ** k * factorial(k))
    return series.div_t_power(k)


def _closed_G(family, k, order):
    """t^{-k} G~_k(tu) from its closed form."""
    ex = series_exp(series_variable(order, _t()))
    if family.kind == "braid":
        series = ex * (ex - 1) ** k * Fraction(1, factorial(k))
    else:
        ex2 = series_exp(series_variable(order, _t() * 2))
        series = ex * (ex2 - 1) ** k * Fraction(1, 2 ** k * factorial(k))
    return series.div_t_power(k)


def _generating(polys, order, exponential):
    return TruncatedSeries([RatPolynomial.coerce(p) * (Fraction(1, factorial(d)) if exponential else 1)
        for d, p in enumerate(polys[:order + 1])], order)


def generating_series_check(family, order):
    """Checks P(t,u) = sum_k t^{-k} Z_k(t) g_k(tu) and Z(t,u) = sum_k t^{-k} P_k(t) G_k(tu)
    to order `order` in u, for the ordinary and the exponential generating
    functions of the family, with g_k and G_k read from the tables."""
    tables = build_tables(family, order)
    ps = [kl_family(family, d, tables) for d in range(order + 1)]
    zs = [z_family(family, d, tables) for d in range(order + 1)]
    for exponential in (False, True):
        p_total = TruncatedSeries([], order)
        z_total = TruncatedSeries([], order)
        for k in range(order + 1):
            p_total = p_total + _table_series(tables, "w", k, order, exponential) * zs[k]
            z_total = z_total + _table_series(tables, "W", k, order, exponential) * ps[k]
        if p_total != _generating(ps, order, exponential) or z_total != _generating(zs, order, exponential):
            logger.info("generating series identity fails for %s (exponential=%s)", family, exponential)
            return False
    return True


def series_identity_check(family, order):
    """Checks the exponential closed forms of g~_k and G~_k for braid and type B
    against the tables, and the identities for P~(t,u) and Z~(t,u) built from
    them, to order `order` in u.

    :raises FamilyError: for families other than braid and typeb
    """
    if family.kind not in ("braid", "typeb"):
        raise FamilyError("closed generating series are known for braid and typeb only, not %s" % family)
    if order > 16:
        raise FamilyError("series order %d above 16" % order)
    tables = build_tables(family, order)
    ps = [kl_family(family, d, tables) for d in range(order + 1)]
    zs = [z_family(family, d, tables) for d in range(order + 1)]
    p_total = TruncatedSeries([], order)
    z_total = TruncatedSeries([], order)
    for k in range(order + 1):
        g = _closed_g(family, k, order)
        G = _closed_G(family, k, order)
        if g != _table_series(tables, "w", k, order, True) or G != _table_series(tables, "W", k, order, True):
            logger.info("closed form of g_%d / G_%d disagrees with %s tables", k, k, family)
            return False
        p_total = p_total + g * zs[k]
        z_total = z_total + G * ps[k]
    return p_total == _generating(ps, order, True) and z_total == _generating(zs, order, True)


def tables_csv(tables):
    """CSV text with columns family,d,k,W,w."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["family", "d", "k", "W", "w"])
    for d in range(tables.d_max + 1):
        for k in range(d + 1):
            writer.writerow([str(tables.family), d, k, tables.W[d, k], tables.w[d, k]])
    return out.getvalue()


def type_b_vectors(d):
    """The vectors e_i, e_i + e_j, e_i - e_j (i < j) of the B_d arrangement."""
    vectors = []
    for i in range(d):
        vectors.append(tuple(1 if x == i else 0 for x in range(d)))
    for i in range(d):
        for j in range(i + 1, d):
            for sign in (1, -1):
                vectors.append(tuple(1 if x == i else sign if x == j else 0 for x in range(d)))
    return LinearVectors(tuple(vectors))


def qvec_flats_spec(q, d):
    """Subspace lattice of F_q^d as explicit flats over the projective points.

    :raises FamilyError: unless q is prime
    """
    if not _is_prime(q):
        raise FamilyError("qvec realization needs a prime q, got %d" % q)
    points = []
    for vec in product(range(q), repeat=d):
        nonzero = [c for c in vec if c]
        if nonzero and nonzero[0] == 1:
            points.append(vec)
    position = dict((p, i) for i, p in enumerate(points))

    def normalize(vec):
        lead = next(c for c in vec if c)
        inv = pow(lead, q - 2, q)
        return tuple(c * inv % q for c in vec)

    def span_with(space, vec):
        return frozenset(tuple((a + c * b) % q for a, b in zip(s, vec)) for s in space for c in range(q))

    zero = tuple([0] * d)
    seen = {frozenset([zero])}
    frontier = list(seen)
    while frontier:
        following = []
        for space in frontier:
            for p in points:
                if p in space:
                    continue
                bigger = span_with(space, p)
                if bigger not in seen:
                    seen.add(bigger)
                    following.append(bigger)
        frontier = following
    flats = sorted(set(tuple(sorted(position[normalize(v)] for v in space if any(v))) for space in seen))
    return ExplicitFlats(len(points), tuple(flats))


def realize(family, d):
    """A MatroidSpec whose lattice of flats is that of M_d."""
    if d < 0:
        raise FamilyError("rank must be >= 0, got %d" % d)
    if family.kind == "braid":
        return complete_graph_spec(d + 1)
    if family.kind == "typeb":
        return type_b_vectors(d)
    if family.kind == "uniform":
        return Uniform(family.param, d)
    return qvec_flats_spec(family.param, d)


def family_lattice(family, d, max_flats=DEFAULT_MAX_FLATS):
    """Enumerates the lattice of M_d, refusing up front when the table flat
    count exceeds the cap."""
    count = build_tables(family, d).flat_count(d)
    if count > max_flats:
        raise LatticeTooLarge("%s at d=%d has %d flats, cap %d" % (family, d, count, max_flats))
    return enumerate_flats(realize(family, d), max_flats=max_flats)
