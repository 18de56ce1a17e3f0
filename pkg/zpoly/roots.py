# -*- coding: utf-8 -*-
"""
Exact real-root questions about integer polynomials, decided with Sturm
chains over the rationals: negative-real-rootedness, isolating intervals,
interlacing and log-concavity, plus the sweep over the ranks of a nice family.

Isolating intervals are half-open (lo, hi] with dyadic rational endpoints.
Endpoints are never roots of the square-free part, so the polynomial changes
sign across every returned interval.

Errors raised here are :class:`RootError` and its subclasses.
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
import time

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from typing import List, Optional, Tuple

from zpoly.families import NiceFamily, kl_family, z_family
from zpoly.lib import ZPolyError, fraction_to_json, logger, parallel_map
from zpoly.polyarith import IntPolynomial, RatPolynomial


__all__ = ["RootError", "NonRealRootsError", "RefinementLimit",
    "SturmCertificate", "Interlacing", "InterlaceVerdict", "squarefree_part",
    "sturm_chain", "sturm_certificate", "count_roots_between",
    "count_negative_real_roots", "is_negative_real_rooted", "isolate_roots",
    "refine_interval", "interlaces", "is_log_concave", "qvec_gap_property",
    "conjecture_sweep", "MAX_HALVINGS"]

MAX_HALVINGS = 512


class RootError(ZPolyError):
    """Invalid input for a root question
    """
    pass


class NonRealRootsError(RootError):
    """Not every root is negative real. `real_count` holds the number of
    distinct negative real roots found.
    """

    def __init__(self, message, real_count):
        super(NonRealRootsError, self).__init__(message)
        self.real_count = real_count


class RefinementLimit(RootError):
    """Bisection reached MAX_HALVINGS without separating roots
    """
    pass


def _as_rat(p):
    if isinstance(p, IntPolynomial):
        return RatPolynomial(p.coeffs)
    return RatPolynomial.coerce(p)


def _as_int(p):
    """Positive rescaling of a rational polynomial to integer coefficients."""
    return p.primitive().to_int()


def squarefree_part(p):
    """p / gcd(p, p'), primitive.

    :type p: IntPolynomial
    :rtype: RatPolynomial
    :raises RootError: for the zero polynomial
    """
    rat = _as_rat(p)
    if rat.is_zero():
        raise RootError("the zero polynomial has no square-free part")
    if rat.degree == 0:
        return RatPolynomial([1])
    common = rat.gcd(rat.derivative())
    return (rat // common).primitive()


def sturm_chain(sf):
    """[p, p', -rem(p, p'), ...], each entry scaled positively to a primitive
    integer polynomial."""
    chain = [sf.primitive()]
    if sf.degree <= 0:
        return chain
    chain.append(sf.derivative().primitive())
    while chain[-1].degree > 0:
        rem = -(chain[-2] % chain[-1])
        if rem.is_zero():
            break
        chain.append(rem.primitive())
    return chain


def _sign_at_infinity(p, positive):
    lead = p.leading()
    sign = (lead > 0) - (lead < 0)
    if not positive and p.degree % 2:
        sign = -sign
    return sign


def _variations(signs):
    last = 0
    changes = 0
    for s in signs:
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


class _Sturm(object):
    """Sturm chain with integer copies for fast exact sign evaluation."""

    def __init__(self, sf):
        self.squarefree = sf
        self.chain = sturm_chain(sf)
        self._ints = [_as_int(p) for p in self.chain]

    def variations_at(self, x):
        if x is None:
            raise RootError("use variations_at_infinity")
        return _variations(p.sign_at(x) for p in self._ints)

    def variations_at_infinity(self, positive):
        return _variations(_sign_at_infinity(p, positive) for p in self.chain)

    def count(self, lo, hi):
        """Distinct roots in (lo, hi]; None stands for -infinity / +infinity."""
        v_lo = self.variations_at_infinity(False) if lo is None else self.variations_at(lo)
        v_hi = self.variations_at_infinity(True) if hi is None else self.variations_at(hi)
        return v_lo - v_hi

    def sign(self, x):
        return self._ints[0].sign_at(x)


@dataclass
class SturmCertificate:
    """Square-free part, its Sturm chain and the isolating intervals of its
    negative roots, sorted ascending."""
    squarefree: RatPolynomial
    chain: List[RatPolynomial]
    isolating: List[Tuple[Fraction, Fraction]] = field(default_factory=list)

    def to_json(self):
        return {
            "squarefree": self.squarefree.to_json(),
            "chain": [p.to_json() for p in self.chain],
            "isolating": [[fraction_to_json(lo), fraction_to_json(hi)] for lo, hi in self.isolating],
        }


def count_roots_between(p, lo, hi):
    """Distinct real roots of p in (lo, hi]; None is an infinite endpoint."""
    return _Sturm(squarefree_part(p)).count(lo, hi)


def _require_nonzero_at_origin(p):
    if p.is_zero() or p[0] == 0:
        raise RootError("%s vanishes at 0" % p)


def count_negative_real_roots(p):
    """(distinct, with multiplicity) number of roots of p in (-inf, 0).

    Multiplicities come from the gcd tower p, gcd(p, p'), ...: a root of
    multiplicity m is a root of its first m members.

    :type p: IntPolynomial
    :raises RootError: when p(0) = 0
    """
    _require_nonzero_at_origin(p)
    distinct = None
    total = 0
    level = _as_rat(p)
    while level.degree > 0:
        found = _Sturm(squarefree_part(level)).count(None, 0)
        if distinct is None:
            distinct = found
        total += found
        level = level.gcd(level.derivative())
    return distinct or 0, total


def is_negative_real_rooted(p):
    """True iff every root of p is real and negative (vacuous in degree 0)."""
    _, total = count_negative_real_roots(p)
    return total == p.degree


def _cauchy_bound(p):
    """Power of two strictly above 1 + max |a_i| / |a_lead|."""
    lead = abs(p.leading())
    bound = 1 + max(abs(Fraction(c)) for c in p.coeffs[:-1]) / lead if p.degree > 0 else Fraction(1)
    power = Fraction(1)
    while power <= bound:
        power *= 2
    return power


def _split_point(sturm, lo, hi):
    """A dyadic point strictly inside (lo, hi) that is not a root, as close
    to the midpoint as the first few dyadic levels allow."""
    for depth in count(1):
        steps = 2 ** depth
        for j in range(1, steps, 2):
            x = lo + (hi - lo) * Fraction(j, steps)
            if sturm.sign(x):
                return x


def _isolate(sturm, lo, hi):
    expected = sturm.count(lo, hi)
    pending = [(lo, hi, expected, 0)]
    found = []
    while pending:
        a, b, n, depth = pending.pop()
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        if depth >= MAX_HALVINGS:
            raise RefinementLimit("%d roots still share (%s, %s] after %d halvings" % (n, a, b, depth))
        mid = _split_point(sturm, a, b)
        left = sturm.count(a, mid)
        pending.append((a, mid, left, depth + 1))
        pending.append((mid, b, n - left, depth + 1))
    found.sort()
    return found


def sturm_certificate(p):
    """Builds the SturmCertificate of the negative roots of p.

    :raises NonRealRootsError: unless every root of p is negative real
    """
    _require_nonzero_at_origin(p)
    sf = squarefree_part(p)
    sturm = _Sturm(sf)
    negatives = sturm.count(None, 0)
    if negatives != sf.degree:
        raise NonRealRootsError("%s has %d distinct negative real roots, square-free degree %d"
            % (p, negatives, sf.degree), negatives)
    intervals = _isolate(sturm, -_cauchy_bound(sf), Fraction(0)) if negatives else []
    return SturmCertificate(sf, sturm.chain, intervals)


def isolate_roots(p):
    """Disjoint isolating intervals (lo, hi] of the distinct roots of p,
    sorted ascending, all inside (-B, 0) for the Cauchy bound B.

    :raises NonRealRootsError: when some root is not negative real
    """
    return sturm_certificate(p).isolating


def refine_interval(p, interval, width=None, halvings=1):
    """Shrinks an isolating interval of the square-free part of p by bisection.

    Stops once the width is at most `width` or, without a width, after
    `halvings` steps.

    :raises RefinementLimit: if `width` needs more than MAX_HALVINGS steps
    """
    sturm = p if isinstance(p, _Sturm) else _Sturm(squarefree_part(p))
    lo, hi = interval
    steps = 0
    while (hi - lo > width) if width is not None else steps < halvings:
        if steps >= MAX_HALVINGS:
            raise RefinementLimit("interval (%s, %s] not refined to width %s" % (lo, hi, width))
        mid = _split_point(sturm, lo, hi)
        if sturm.sign(mid) == sturm.sign(hi):
            hi = mid
        else:
            lo = mid
        steps += 1
    return lo, hi


class Interlacing(enum.Enum):
    STRICT = "strict"
    WEAK = "weak"
    NONE = "none"


@dataclass
class InterlaceVerdict:
    kind: Interlacing
    witness: Optional[int] = None

    def __bool__(self):
        return self.kind is not Interlacing.NONE

    def to_json(self):
        out = {"verdict": self.kind.value}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _multiplicities(p, intervals):
    """Multiplicity of the root of p in each isolating interval (0 if absent)."""
    counts = [0] * len(intervals)
    level = _as_rat(p)
    while level.degree > 0:
        sturm = _Sturm(squarefree_part(level))
        for n, (lo, hi) in enumerate(intervals):
            counts[n] += sturm.count(lo, hi)
        level = level.gcd(level.derivative())
    return counts


def interlaces(f, g):
    """Decides whether f interlaces g: with roots a_1 <= ... <= a_d of f and
    b_1 <= ... <= b_{d-1} of g, a_i <= b_i <= a_{i+1} for all i.

    The distinct roots of f*g are isolated and the root multiplicities of f
    and g counted inside each interval, so shared roots are found exactly.
    The verdict is strict when f and g are coprime and f is square-free.

    :raises RootError: unless deg f = deg g + 1
    :raises NonRealRootsError: unless both are negative-real-rooted
    """
    if f.degree != g.degree + 1:
        raise RootError("interlacing needs deg f = deg g + 1, got %d and %d" % (f.degree, g.degree))
    for p in (f, g):
        if not is_negative_real_rooted(p):
            distinct, _ = count_negative_real_roots(p)
            raise NonRealRootsError("%s is not negative-real-rooted" % p, distinct)
    intervals = isolate_roots(f * g)
    in_f = _multiplicities(f, intervals)
    in_g = _multiplicities(g, intervals)
    below_f = below_g = 0
    strict = True
    for n in range(len(intervals)):
        # counts of roots < v, then <= v, at the n-th distinct root v
        if below_f > below_g + 1:
            return InterlaceVerdict(Interlacing.NONE, below_g + 1)
        upto_f, upto_g = below_f + in_f[n], below_g + in_g[n]
        if upto_g > upto_f:
            return InterlaceVerdict(Interlacing.NONE, upto_f + 1)
        if in_f[n] > 1 or (in_f[n] and in_g[n]):
            strict = False
        below_f, below_g = upto_f, upto_g
    return InterlaceVerdict(Interlacing.STRICT if strict else Interlacing.WEAK)


def is_log_concave(p):
    """Nonnegative coefficients with c_i^2 >= c_{i-1} c_{i+1}."""
    c = list(p.coeffs)
    if any(x < 0 for x in c):
        return False
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def _refine_until(sturm_a, a, sturm_b, b, done):
    """Alternately halves two isolating intervals until done(a, b)."""
    for _ in range(MAX_HALVINGS):
        if done(a, b):
            return a, b
        a = refine_interval(sturm_a, a)
        b = refine_interval(sturm_b, b)
    raise RefinementLimit("intervals %s and %s not separated" % (a, b))


def qvec_gap_property(q, d):
    """For the F_q family: Z_d has negative roots a_1 < ... < a_d with
    a_i < q a_{i+1}, and Z_{d-1} has exactly one root in each (a_i, q a_{i+1}).

    Certified with isolating intervals: (hi_i, q lo_{i+1}] lies inside
    (a_i, q a_{i+1}) and holds exactly one root of Z_{d-1}.

    :returns: (holds, list of certified gaps as (lo, hi) pairs)
    """
    family = NiceFamily.qvec(q)
    upper = z_family(family, d)
    lower = z_family(family, d - 1) if d > 0 else IntPolynomial([1])
    cert = sturm_certificate(upper)
    if len(cert.isolating) != d:
        return False, []
    sturm_upper = _Sturm(cert.squarefree)
    sturm_lower = _Sturm(squarefree_part(lower))
    intervals = list(cert.isolating)
    gaps = []
    for i in range(d - 1):
        left, right = intervals[i], intervals[i + 1]

        def separated(a, b):
            return a[1] < q * b[0] and sturm_lower.count(a[1], q * b[0]) == 1

        try:
            left, right = _refine_until(sturm_upper, left, sturm_upper, right, separated)
        except RefinementLimit:
            logger.info("gap %d of qvec:%d at d=%d not certified", i + 1, q, d)
            return False, gaps
        intervals[i], intervals[i + 1] = left, right
        gaps.append((left[1], q * right[0]))
    return True, gaps


def _sweep_row(job):
    family, d, certificates = job
    started = time.time()
    z = z_family(family, d)
    row = {"family": str(family), "d": d}
    try:
        cert = sturm_certificate(z)
        row["negative_real_rooted"] = True
    except NonRealRootsError:
        cert = None
        row["negative_real_rooted"] = False
    if d == 0:
        row["interlace"] = None
    elif row["negative_real_rooted"]:
        try:
            row["interlace"] = interlaces(z, z_family(family, d - 1)).to_json()
        except NonRealRootsError:
            row["interlace"] = {"verdict": Interlacing.NONE.value}
    else:
        row["interlace"] = {"verdict": Interlacing.NONE.value}
    row["log_concave"] = is_log_concave(z)
    row["kl_negative_real_rooted"] = is_negative_real_rooted(kl_family(family, d))
    row["max_coeff_digits"] = max(len(str(abs(c))) for c in z.coeffs)
    row["millis"] = int((time.time() - started) * 1000)
    row["pass"] = row["negative_real_rooted"] and (d == 0 or row["interlace"]["verdict"] != Interlacing.NONE.value)
    if certificates and cert is not None:
        row["certificate"] = cert.to_json()
    return row


def conjecture_sweep(family, d_max, certificates=False, workers=None):
    """Checks negative-real-rootedness of Z_d and whether Z_d interlaces
    Z_{d-1} for 0 <= d <= d_max.

    :returns: one report row per d; rows with "pass" false carry the
        interlace witness, and certificates when requested
    """
    rows = parallel_map(_sweep_row, [(family, d, certificates) for d in range(d_max + 1)], workers)
    for row in rows:
        logger.debug("sweep %s d=%d pass=%s", row["family"], row["d"], row["pass"])
    return rows
