# -*- coding: utf-8 -*-
"""
Exact polynomial and truncated power series arithmetic.

Every other module of zpoly computes with the three value types defined here:

    * :class:`IntPolynomial` -- dense polynomial in t with arbitrary precision
      integer coefficients. Kazhdan-Lusztig polynomials, Z-polynomials and
      characteristic polynomials are IntPolynomials.
    * :class:`RatPolynomial` -- dense polynomial in t with exact rational
      coefficients, used by Sturm chains and as series coefficients.
    * :class:`TruncatedSeries` -- power series in u, truncated at a fixed
      order N, whose coefficients are RatPolynomials in t.

All values are immutable after construction and all operations return new
values, so they can be shared freely between worker processes.

Index i of a coefficient sequence is the coefficient of t^i (resp. u^i). The
zero polynomial has the empty coefficient sequence and degree -1.

Errors raise :class:`PolynomialError`.
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

from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational
from operator import index

from zpoly.lib import ZPolyError


__all__ = ["PolynomialError", "IntPolynomial", "RatPolynomial",
    "TruncatedSeries", "poly_add", "poly_mul", "poly_scale_shift", "reverse",
    "is_palindromic", "series_exp", "series_log", "series_inv", "series_pow",
    "series_sqrt_inv", "series_from_coeffs", "series_variable", "DEFAULT_ORDER"]

DEFAULT_ORDER = 12


class PolynomialError(ZPolyError):
    """Raised on violated preconditions of polynomial or series operations
    """
    pass


def _trim(coeffs):
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


def _render(coeffs, var="t"):
    """Renders in ascending degree, e.g. "1 + 6t + 6t^2 + t^3"."""
    parts = []
    for power, coeff in enumerate(coeffs):
        if not coeff:
            continue
        magnitude = abs(coeff)
        if power == 0:
            body = str(magnitude)
        else:
            monomial = var if power == 1 else "%s^%d" % (var, power)
            if magnitude == 1:
                body = monomial
            elif isinstance(magnitude, Fraction) and magnitude.denominator != 1:
                body = "(%s)%s" % (magnitude, monomial)
            else:
                body = "%s%s" % (magnitude, monomial)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


class IntPolynomial(object):
    """Dense polynomial in t with big integer coefficients.

    :param coeffs: coefficients, index = degree
    :type coeffs: iterable of int
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        try:
            self._coeffs = _trim([index(c) for c in coeffs])
        except TypeError:
            raise PolynomialError("IntPolynomial needs integer coefficients, got %r" % (coeffs,))

    @classmethod
    def monomial(cls, power, coeff=1):
        if power < 0:
            raise PolynomialError("negative power %d" % power)
        return cls([0] * power + [coeff])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def __getitem__(self, power):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return 0

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _trim([other])
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __neg__(self):
        return IntPolynomial([-c for c in self._coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self._coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluates exactly at an integer or Fraction."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x):
        """Sign of p(x) for rational x, computed on integers only."""
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        deg = self.degree
        if deg < 0:
            return 0
        acc = 0
        den_power = 1
        # homogenized Horner: sum c_i num^i den^(deg-i)
        for c in reversed(self._coeffs):
            acc = acc * num + c * den_power
            den_power *= den
        return (acc > 0) - (acc < 0)

    def shift(self, power):
        """Multiplies by t^power."""
        if power < 0:
            raise PolynomialError("negative shift %d" % power)
        if not self._coeffs:
            return self
        return IntPolynomial([0] * power + list(self._coeffs))

    def substitute_scale(self, q):
        """Returns p(q*t)."""
        out = []
        factor = 1
        for c in self._coeffs:
            out.append(c * factor)
            factor *= q
        return IntPolynomial(out)

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def content(self):
        return reduce(gcd, self._coeffs, 0)

    def reverse(self, d):
        return reverse(self, d)

    def is_palindromic(self, d):
        return is_palindromic(self, d)

    def to_json(self):
        return list(self._coeffs)

    def __str__(self):
        return _render(self._coeffs)

    def __repr__(self):
        return "IntPolynomial(%r)" % (list(self._coeffs),)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_scale_shift(p, power):
    """Multiplies p by t^power.

    :raises PolynomialError: for a negative power
    """
    return p.shift(power)


def reverse(p, d):
    """Returns t^d p(1/t).

    :raises PolynomialError: if deg p > d
    """
    if p.degree > d:
        raise PolynomialError("cannot reverse degree %d polynomial in degree %d" % (p.degree, d))
    if p.is_zero():
        return p
    coeffs = list(p.coeffs) + [0] * (d - p.degree)
    return IntPolynomial(coeffs[::-1])


def is_palindromic(p, d):
    """True iff t^d p(1/t) = p. A polynomial of degree above d is not."""
    if p.degree > d:
        return False
    return reverse(p, d) == p


class RatPolynomial(object):
    """Dense polynomial in t with exact rational coefficients, stored in
    lowest terms (Fraction normalizes eagerly)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        out = []
        for c in coeffs:
            if not isinstance(c, Rational):
                raise PolynomialError("RatPolynomial needs rational coefficients, got %r" % (c,))
            out.append(Fraction(c))
        self._coeffs = _trim(out)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RatPolynomial):
            return value
        if isinstance(value, IntPolynomial):
            return cls(value.coeffs)
        if isinstance(value, Rational):
            return cls([value])
        raise PolynomialError("cannot use %r as a rational polynomial" % (value,))

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def leading(self):
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __getitem__(self, power):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (IntPolynomial, int, Fraction)):
            other = RatPolynomial.coerce(other)
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __neg__(self):
        return RatPolynomial([-c for c in self._coeffs])

    def __add__(self, other):
        try:
            other = RatPolynomial.coerce(other)
        except PolynomialError:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RatPolynomial.coerce(other)
        except PolynomialError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return RatPolynomial([c * other for c in self._coeffs])
        try:
            other = RatPolynomial.coerce(other)
        except PolynomialError:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return RatPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = RatPolynomial.coerce(other)
        if other.is_zero():
            raise PolynomialError("polynomial division by zero")
        rem = list(self._coeffs)
        lead = other.leading()
        dq = other.degree
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for shift in range(len(rem) - dq - 1, -1, -1):
            factor = rem[shift + dq] / lead
            if factor:
                quot[shift] = factor
                for j, c in enumerate(other._coeffs):
                    rem[shift + j] -= factor * c
        return RatPolynomial(quot), RatPolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x):
        value = self(Fraction(x))
        return (value > 0) - (value < 0)

    def derivative(self):
        return RatPolynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        return RatPolynomial([c / lead for c in self._coeffs])

    def primitive(self):
        """Scales by a positive rational so the coefficients become coprime
        integers. The sign of every value is kept, which Sturm chains need."""
        if self.is_zero():
            return self
        den = reduce(lambda acc, c: acc * c.denominator // gcd(acc, c.denominator), self._coeffs, 1)
        ints = [int(c * den) for c in self._coeffs]
        content = reduce(gcd, ints, 0)
        return RatPolynomial([Fraction(c // content) for c in ints])

    def to_int(self):
        if any(c.denominator != 1 for c in self._coeffs):
            raise PolynomialError("%s has non-integer coefficients" % self)
        return IntPolynomial([c.numerator for c in self._coeffs])

    def gcd(self, other):
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, RatPolynomial.coerce(other)
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic()

    def div_t_power(self, k):
        """Exact division by t^k."""
        if any(self[i] for i in range(k)):
            raise PolynomialError("%s is not divisible by t^%d" % (self, k))
        return RatPolynomial(self._coeffs[k:])

    def to_json(self):
        return [c.numerator if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)
            for c in self._coeffs]

    def __str__(self):
        return _render(self._coeffs)

    def __repr__(self):
        return "RatPolynomial(%r)" % ([str(c) for c in self._coeffs],)


_RZERO = RatPolynomial()
_RONE = RatPolynomial([1])


class TruncatedSeries(object):
    """Power series in u with RatPolynomial coefficients, truncated at order N
    (coefficients of u^0 .. u^N are kept).

    :param coeffs: coefficients, index = power of u; entries may be ints,
        Fractions, IntPolynomials or RatPolynomials
    :param order: truncation order N
    """

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coeffs, order=DEFAULT_ORDER):
        if order < 0:
            raise PolynomialError("negative series order %d" % order)
        coeffs = [RatPolynomial.coerce(c) for c in list(coeffs)[:order + 1]]
        coeffs.extend([_RZERO] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)
        self._order = order

    @property
    def order(self):
        return self._order

    @property
    def coeffs(self):
        """Coefficients with trailing zero terms dropped."""
        return _trim(self._coeffs)

    def __getitem__(self, power):
        if 0 <= power <= self._order:
            return self._coeffs[power]
        return _RZERO

    def constant(self):
        return self._coeffs[0]

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self._order)
        return other, min(self._order, other._order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self._order, other._order)
        return self._coeffs[:order + 1] == other._coeffs[:order + 1]

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __neg__(self):
        return TruncatedSeries([-c for c in self._coeffs], self._order)

    def __add__(self, other):
        other, order = self._check(other)
        return TruncatedSeries([self[i] + other[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __sub__(self, other):
        other, order = self._check(other)
        return TruncatedSeries([self[i] - other[i] for i in range(order + 1)], order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Rational, IntPolynomial, RatPolynomial)):
            return TruncatedSeries([c * RatPolynomial.coerce(other) for c in self._coeffs], self._order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self._order, other._order)
        out = [_RZERO] * (order + 1)
        for i in range(order + 1):
            a = self._coeffs[i]
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise PolynomialError("use series_inv or series_pow for negative powers")
        result = TruncatedSeries([1], self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def div_t_power(self, k):
        """Divides every coefficient exactly by t^k."""
        return TruncatedSeries([c.div_t_power(k) for c in self._coeffs], self._order)

    def with_order(self, order):
        return TruncatedSeries(self._coeffs, order)

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __str__(self):
        terms = []
        for power, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            body = "(%s)" % c
            terms.append(body if power == 0 else "%s*u^%d" % (body, power))
        return " + ".join(terms) + " + O(u^%d)" % (self._order + 1)

    def __repr__(self):
        return "TruncatedSeries(%s)" % self


def series_from_coeffs(coeffs, order=DEFAULT_ORDER):
    return TruncatedSeries(coeffs, order)


def series_variable(order=DEFAULT_ORDER, scale=1):
    """Returns scale*u, where scale may be a polynomial in t (e.g. t for t*u)."""
    return TruncatedSeries([0, scale], order)


def _require_constant(s, value, name):
    if s.constant() != RatPolynomial.coerce(value):
        raise PolynomialError("%s needs constant term %s, got %s" % (name, value, s.constant()))


def series_exp(s):
    """exp(s) for a series with constant term 0.

    Uses f' = s' f, i.e. n f_n = sum_{k=1}^{n} k s_k f_{n-k}.
    """
    _require_constant(s, 0, "series_exp")
    order = s.order
    f = [_RONE] + [_RZERO] * order
    for n in range(1, order + 1):
        acc = _RZERO
        for k in range(1, n + 1):
            if not s[k].is_zero():
                acc = acc + s[k] * f[n - k] * k
        f[n] = acc * Fraction(1, n)
    return TruncatedSeries(f, order)


def series_log(s):
    """log(s) for a series with constant term 1.

    From s' = s l', l_n = s_n - (1/n) sum_{k=1}^{n-1} k l_k s_{n-k}.
    """
    _require_constant(s, 1, "series_log")
    order = s.order
    l = [_RZERO] * (order + 1)
    for n in range(1, order + 1):
        acc = _RZERO
        for k in range(1, n):
            if not l[k].is_zero():
                acc = acc + l[k] * s[n - k] * k
        l[n] = s[n] - acc * Fraction(1, n)
    return TruncatedSeries(l, order)


def series_inv(s):
    """1/s for a series with constant term 1."""
    _require_constant(s, 1, "series_inv")
    order = s.order
    f = [_RONE] + [_RZERO] * order
    for n in range(1, order + 1):
        acc = _RZERO
        for k in range(1, n + 1):
            if not s[k].is_zero():
                acc = acc + s[k] * f[n - k]
        f[n] = -acc
    return TruncatedSeries(f, order)


def series_pow(s, alpha):
    """s**alpha for rational alpha and a series with constant term 1.

    From s f' = alpha s' f:
    n f_n = sum_{k=1}^{n} (alpha k - (n - k)) s_k f_{n-k}.
    """
    _require_constant(s, 1, "series_pow")
    alpha = Fraction(alpha)
    order = s.order
    f = [_RONE] + [_RZERO] * order
    for n in range(1, order + 1):
        acc = _RZERO
        for k in range(1, n + 1):
            if not s[k].is_zero():
                acc = acc + s[k] * f[n - k] * (alpha * k - (n - k))
        f[n] = acc * Fraction(1, n)
    return TruncatedSeries(f, order)


def series_sqrt_inv(s):
    """1/sqrt(s) for a series with constant term 1."""
    return series_pow(s, Fraction(-1, 2))
