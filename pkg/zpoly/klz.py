# -*- coding: utf-8 -*-
"""
Kazhdan-Lusztig and Z-polynomials of matroids.

P_M(t) is computed from the lattice of flats by four independent methods
which are cross-checked against each other:

    * :attr:`KlMethod.DEFINING` -- the defining functional equation
      t^rk P(1/t) = sum_F chi_{M_F}(t) P_{M^F}(t), read off coefficientwise
    * :attr:`KlMethod.MOBIUS_INVERSION` -- P_M = sum_F mu(0, F) t^{rk F} Z_{M^F}
      together with the palindromicity of Z
    * :attr:`KlMethod.NEW_RECURSION` -- c(i) = sum_F c_{M^F}(crk F - i)
      - sum_F c_{M^F}(i - rk F) over the nonempty flats
    * :attr:`KlMethod.CLOSED_FORMULA` -- the signed sum of multi-indexed Whitney
      numbers over the index tuples (r, S, a)

All methods work on the contractions M^F through the upper intervals of one
lattice; per-flat results are memoized in `FlatLattice.memo`.

Errors raised here are :class:`KLError`.
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

import enum

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Tuple

from zpoly.lib import ZPolyError, logger
from zpoly.polyarith import IntPolynomial, is_palindromic


__all__ = ["KLError", "KlMethod", "IndexTuple", "t_index", "kl_defining",
    "z_polynomial", "kl_via_mobius", "kl_coeff_new_recursion",
    "kl_new_recursion", "enumerate_index_tuples", "kl_coeff_closed",
    "kl_closed_formula", "closed_formula_terms", "kl_polynomial",
    "kl_all_methods", "defining_identity_holds", "mobius_inversion_holds",
    "empty_flat_term_vanishes"]


class KLError(ZPolyError):
    """Invalid coefficient request
    """
    pass


class KlMethod(enum.Enum):
    DEFINING = "defining"
    MOBIUS_INVERSION = "mobius"
    NEW_RECURSION = "recursion"
    CLOSED_FORMULA = "closed"


@dataclass(frozen=True)
class IndexTuple:
    """One summation index (r, S, a_0..a_{r+1}) of the closed formula."""
    r: int
    S: FrozenSet[int]
    a: Tuple[int, ...]

    @property
    def sign(self):
        return -1 if len(self.S) % 2 else 1

    def profile(self):
        """The corank profile [i_r, ..., i_1] with i_j = a_{t_j(S)} + a_{j-1}."""
        return tuple(self.a[t_index(j, self.S, self.r)] + self.a[j - 1]
            for j in range(self.r, 0, -1))

    def to_json(self):
        return {"r": self.r, "S": sorted(self.S), "a": list(self.a)}


def t_index(j, S, r):
    """min{k >= j : k not in S}; lies in 1..r+1 whenever S is a subset of 1..r."""
    k = j
    while k in S:
        k += 1
    return k


def _coeff(table, fid, i):
    """c_{M^F}(i) from a per-flat coefficient table, 0 out of range."""
    coeffs = table[fid]
    if 0 <= i < len(coeffs):
        return coeffs[i]
    return 0


def _by_rank_desc(lat):
    return sorted(range(len(lat)), key=lambda f: -lat.rank[f])


def _defining_table(lat):
    cached = lat.memo.get(KlMethod.DEFINING)
    if cached is not None:
        return cached
    table = [None] * len(lat)
    level = None
    for f in _by_rank_desc(lat):
        crk = lat.corank[f]
        if level != crk:
            level = crk
            logger.debug("defining recursion: corank %d", crk)
        if crk == 0:
            table[f] = (1,)
            continue
        mu = lat.mobius_pairs(f)
        up = lat.up_set(f)
        rest = [0] * (crk + 1)
        for g in up:
            if g == f:
                continue
            # chi of the interval [F, G], as coefficients of t^k
            span = lat.rank[g] - lat.rank[f]
            chi = [0] * (span + 1)
            for h in up & lat.down_set(g):
                chi[lat.rank[g] - lat.rank[h]] += mu[h]
            for a, x in enumerate(chi):
                if x:
                    for b, y in enumerate(table[g]):
                        rest[a + b] += x * y
        coeffs = [1] + [rest[crk - i] for i in range(1, (crk + 1) // 2)]
        table[f] = tuple(coeffs)
    lat.memo[KlMethod.DEFINING] = table
    return table


def kl_defining(lat):
    """P_M(t) from the defining equation t^rk P(1/t) = sum_F chi_{M_F} P_{M^F}.

    With R(t) the sum over the nonempty flats, c(i) = [t^{rk - i}] R(t) for
    0 < i < rk/2.

    :param lat: lattice of flats
    :type lat: FlatLattice
    :rtype: IntPolynomial
    """
    return IntPolynomial(_defining_table(lat)[lat.bottom_id])


def _z_from_table(lat, table, fid):
    coeffs = [0] * (lat.corank[fid] + 1)
    for g in lat.up_set(fid):
        shift = lat.rank[g] - lat.rank[fid]
        for k, c in enumerate(table[g]):
            coeffs[shift + k] += c
    return IntPolynomial(coeffs)


def z_polynomial(lat, method=KlMethod.DEFINING):
    """Z_M(t) = sum_F t^{rk F} P_{M^F}(t).

    :param method: how the P_{M^F} are obtained
    :rtype: IntPolynomial
    """
    return _z_from_table(lat, _TABLES[method](lat), lat.bottom_id)


def _mobius_table(lat):
    cached = lat.memo.get(KlMethod.MOBIUS_INVERSION)
    if cached is not None:
        return cached
    table = [None] * len(lat)
    zetas = [None] * len(lat)
    for f in _by_rank_desc(lat):
        crk = lat.corank[f]
        # A = sum_{H > F} mu(F, H) t^{rk H - rk F} Z_H, so P_F = Z_F + A
        known = [0] * (crk + 1)
        for h, value in lat.mobius_pairs(f).items():
            if h == f or not value:
                continue
            shift = lat.rank[h] - lat.rank[f]
            for k, z in enumerate(zetas[h]):
                known[shift + k] += value * z
        # Z_F palindromic of degree crk and deg P_F < crk / 2
        coeffs = [1] + [known[i] - known[crk - i] for i in range(1, (crk + 1) // 2)]
        table[f] = tuple(coeffs) if crk else (1,)
        zetas[f] = [c - a for c, a in zip(list(coeffs) + [0] * (crk + 1 - len(coeffs)), known)]
    lat.memo[KlMethod.MOBIUS_INVERSION] = table
    return table


def kl_via_mobius(lat):
    """P_M(t) = sum_F mu(0, F) t^{rk F} Z_{M^F}(t).

    Processed from the top flat down: the terms with F > bottom are known,
    and the palindromicity of Z_M determines the remaining unknown P_M.
    """
    return IntPolynomial(_mobius_table(lat)[lat.bottom_id])


def _recursion_table(lat):
    cached = lat.memo.get(KlMethod.NEW_RECURSION)
    if cached is not None:
        return cached
    table = [None] * len(lat)
    for f in _by_rank_desc(lat):
        crk = lat.corank[f]
        coeffs = [1]
        for i in range(1, (crk + 1) // 2):
            total = 0
            for g in lat.up_set(f):
                if g == f:
                    continue
                total += _coeff(table, g, lat.corank[g] - i)
                total -= _coeff(table, g, i - (lat.rank[g] - lat.rank[f]))
            coeffs.append(total)
        table[f] = tuple(coeffs)
    lat.memo[KlMethod.NEW_RECURSION] = table
    return table


def kl_coeff_new_recursion(lat, i):
    """c_M(i) by the recursion over nonempty flats.

    :param i: coefficient index
    :type i: int
    :rtype: int
    :raises KLError: when i is negative
    """
    if i < 0:
        raise KLError("coefficient index must be >= 0, got %d" % i)
    if i == 0:
        return 1
    if 2 * i >= lat.rk_total:
        return 0
    return _coeff(_recursion_table(lat), lat.bottom_id, i)


def kl_new_recursion(lat):
    return IntPolynomial(_recursion_table(lat)[lat.bottom_id])


def enumerate_index_tuples(i, rk):
    """All (r, S, a) with 0 = a_0 < a_1 < ... < a_r = i < a_{r+1} = rk - i.

    There are 2 * 3^(i - 1) of them when rk > 2i and none otherwise.

    :raises KLError: when i < 1
    """
    if i < 1:
        raise KLError("closed formula needs i >= 1, got %d" % i)
    if rk - i <= i:
        return []
    out = []
    for r in range(1, i + 1):
        for middle in combinations(range(1, i), r - 1):
            a = (0,) + middle + (i, rk - i)
            for size in range(r + 1):
                for S in combinations(range(1, r + 1), size):
                    out.append(IndexTuple(r, frozenset(S), a))
    return out


def closed_formula_terms(lat, i):
    """The signed terms (sign, profile, W(profile)) of the closed formula."""
    return [(t.sign, t.profile(), lat.whitney_multi(t.profile()))
        for t in enumerate_index_tuples(i, lat.rk_total)]


def kl_coeff_closed(lat, i):
    """c_M(i) as a signed sum of multi-indexed Whitney numbers.

    :raises KLError: when i < 1
    """
    return sum(sign * value for sign, _, value in closed_formula_terms(lat, i))


def kl_closed_formula(lat):
    rk = lat.rk_total
    return IntPolynomial([1] + [kl_coeff_closed(lat, i) for i in range(1, (rk + 1) // 2)])


def _closed_table(lat):
    cached = lat.memo.get(KlMethod.CLOSED_FORMULA)
    if cached is not None:
        return cached
    table = [None] * len(lat)
    for f in range(len(lat)):
        table[f] = tuple(kl_closed_formula(lat.contraction(f)).coeffs)
    lat.memo[KlMethod.CLOSED_FORMULA] = table
    return table


_TABLES = {
    KlMethod.DEFINING: _defining_table,
    KlMethod.MOBIUS_INVERSION: _mobius_table,
    KlMethod.NEW_RECURSION: _recursion_table,
    KlMethod.CLOSED_FORMULA: _closed_table,
}


def kl_polynomial(lat, method=KlMethod.DEFINING):
    """Dispatches to one of the four methods.

    :type method: KlMethod or its string value
    """
    method = KlMethod(method)
    if method is KlMethod.CLOSED_FORMULA:
        return kl_closed_formula(lat)
    return IntPolynomial(_TABLES[method](lat)[lat.bottom_id])


def kl_all_methods(lat):
    """Returns ({KlMethod: P}, agree)."""
    results = dict((method, kl_polynomial(lat, method)) for method in KlMethod)
    agree = len(set(results.values())) == 1
    if not agree:
        logger.warning("methods disagree: %s", dict((m.value, str(p)) for m, p in results.items()))
    return results, agree


def _chi_interval(lat, mu, f, g):
    span = lat.rank[g] - lat.rank[f]
    chi = [0] * (span + 1)
    for h in lat.up_set(f) & lat.down_set(g):
        chi[lat.rank[g] - lat.rank[h]] += mu[h]
    return IntPolynomial(chi)


def defining_identity_holds(lat, method=KlMethod.NEW_RECURSION):
    """Checks t^rk P(1/t) = sum_F chi_{M_F}(t) P_{M^F}(t) with the P of `method`,
    including the degree bound deg P < rk/2 at positive rank."""
    table = _TABLES[method](lat)
    bottom = lat.bottom_id
    mu = lat.mobius_pairs(bottom)
    p = IntPolynomial(table[bottom])
    rk = lat.rk_total
    if rk > 0 and 2 * p.degree >= rk:
        return False
    rhs = IntPolynomial()
    for f in lat.up_set(bottom):
        rhs = rhs + _chi_interval(lat, mu, bottom, f) * IntPolynomial(table[f])
    return p.reverse(rk) == rhs


def mobius_inversion_holds(lat):
    """Substitutes the Z_{M^F} of the defining method into
    sum_F mu(0, F) t^{rk F} Z_{M^F} and compares with P_M."""
    table = _defining_table(lat)
    total = IntPolynomial()
    for f, value in lat.mobius_pairs(lat.bottom_id).items():
        if value:
            total = total + _z_from_table(lat, table, f).shift(lat.rank[f]) * value
    return total == IntPolynomial(table[lat.bottom_id])


def empty_flat_term_vanishes(lat):
    """For 0 < 2i < rk the F = bottom summand c_M(rk - i) of the recursion is 0."""
    rk = lat.rk_total
    coeffs = _recursion_table(lat)[lat.bottom_id]
    return all(_coeff([coeffs], 0, rk - i) == 0 for i in range(1, (rk + 1) // 2))


def z_is_palindromic(lat, method=KlMethod.DEFINING):
    return is_palindromic(z_polynomial(lat, method), lat.rk_total)
