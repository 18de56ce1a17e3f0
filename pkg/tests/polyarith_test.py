# -*- coding: utf-8 -*-

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

import unittest

from fractions import Fraction

from zpoly.polyarith import (IntPolynomial, PolynomialError, RatPolynomial,
    TruncatedSeries, is_palindromic, poly_add, poly_mul, poly_scale_shift,
    reverse, series_exp, series_inv, series_log, series_pow, series_sqrt_inv,
    series_variable)


class TestIntPolynomial(unittest.TestCase):
    def test_render(self):
        self.assertEqual(str(IntPolynomial([1, 6, 6, 1])), "1 + 6t + 6t^2 + t^3")
        self.assertEqual(str(IntPolynomial([1, -2])), "1 - 2t")
        self.assertEqual(str(IntPolynomial([0, -1, 0, 3])), "-t + 3t^3")
        self.assertEqual(str(IntPolynomial()), "0")

    def test_trim_and_index(self):
        p = IntPolynomial([1, 2, 0, 0])
        self.assertEqual(p.degree, 1)
        self.assertEqual(p.coeffs, (1, 2))
        self.assertEqual(p[5], 0)
        self.assertEqual(p[-1], 0)
        self.assertEqual(IntPolynomial().degree, -1)

    def test_arithmetic(self):
        p = IntPolynomial([1, 1])
        self.assertEqual(poly_mul(p, p), IntPolynomial([1, 2, 1]))
        self.assertEqual(poly_add(p, 2), IntPolynomial([3, 1]))
        self.assertEqual(p - p, IntPolynomial())
        self.assertEqual(3 * p, IntPolynomial([3, 3]))
        self.assertEqual(hash(p * 1), hash(IntPolynomial([1, 1])))

    def test_shift(self):
        p = IntPolynomial([1, 1])
        self.assertEqual(poly_scale_shift(p, 2), IntPolynomial([0, 0, 1, 1]))
        self.assertEqual(IntPolynomial().shift(3), IntPolynomial())
        self.assertRaises(PolynomialError, p.shift, -1)

    def test_reverse_and_palindrome(self):
        self.assertTrue(is_palindromic(IntPolynomial([1, 6, 6, 1]), 3))
        self.assertTrue(is_palindromic(IntPolynomial([1, 1]), 1))
        self.assertFalse(is_palindromic(IntPolynomial([1, 1]), 2))
        self.assertFalse(is_palindromic(IntPolynomial([1, 2, 1]), 1))
        self.assertEqual(reverse(IntPolynomial([1, 2]), 3), IntPolynomial([0, 0, 2, 1]))
        self.assertRaises(PolynomialError, reverse, IntPolynomial([1, 2, 3]), 1)

    def test_evaluation(self):
        p = IntPolynomial([2, 3, 1])
        self.assertEqual(p(-1), 0)
        self.assertEqual(p(Fraction(1, 2)), Fraction(15, 4))
        self.assertEqual(p.sign_at(Fraction(-3, 2)), -1)
        self.assertEqual(p.sign_at(-3), 1)
        self.assertEqual(p.sign_at(-2), 0)
        self.assertEqual(p.substitute_scale(2), IntPolynomial([2, 6, 4]))
        self.assertEqual(p.derivative(), IntPolynomial([3, 2]))


class TestRatPolynomial(unittest.TestCase):
    def test_divmod(self):
        quot, rem = divmod(RatPolynomial([-1, 0, 1]), RatPolynomial([-1, 1]))
        self.assertEqual(quot, RatPolynomial([1, 1]))
        self.assertTrue(rem.is_zero())
        quot, rem = divmod(RatPolynomial([1, 0, 1]), RatPolynomial([0, 2]))
        self.assertEqual(quot, RatPolynomial([0, Fraction(1, 2)]))
        self.assertEqual(rem, RatPolynomial([1]))

    def test_gcd(self):
        a = RatPolynomial([-1, 0, 1])
        b = RatPolynomial([1, 2, 1])
        self.assertEqual(a.gcd(b), RatPolynomial([1, 1]))
        self.assertEqual(a.gcd(RatPolynomial([2])), RatPolynomial([1]))

    def test_primitive(self):
        p = RatPolynomial([Fraction(1, 2), Fraction(1, 3)])
        self.assertEqual(p.primitive(), RatPolynomial([3, 2]))
        self.assertEqual(RatPolynomial([-4, -6]).primitive(), RatPolynomial([-2, -3]))
        self.assertEqual(p.primitive().to_int(), IntPolynomial([3, 2]))
        self.assertRaises(PolynomialError, p.to_int)


class TestTruncatedSeries(unittest.TestCase):
    order = 6

    def one_plus_u(self):
        return 1 + series_variable(self.order)

    def test_exp_log(self):
        s = self.one_plus_u()
        self.assertEqual(series_exp(series_log(s)), s)

    def test_inverse(self):
        inv = series_inv(self.one_plus_u())
        self.assertEqual([inv[n] for n in range(self.order + 1)],
            [RatPolynomial([(-1) ** n]) for n in range(self.order + 1)])
        self.assertEqual(inv * self.one_plus_u(), TruncatedSeries([1], self.order))

    def test_powers(self):
        s = self.one_plus_u()
        root = series_pow(s, Fraction(1, 2))
        self.assertEqual(root * root, s)
        inv_root = series_sqrt_inv(s)
        self.assertEqual(inv_root * inv_root * s, TruncatedSeries([1], self.order))
        self.assertEqual(s ** 3, TruncatedSeries([1, 3, 3, 1], self.order))

    def test_polynomial_coefficients(self):
        t = RatPolynomial([0, 1])
        s = series_variable(self.order, t)
        self.assertEqual((s * s)[2], RatPolynomial([0, 0, 1]))
        self.assertEqual((s * s).div_t_power(2)[2], RatPolynomial([1]))
        self.assertRaises(PolynomialError, (s * s).div_t_power, 3)

    def test_preconditions(self):
        self.assertRaises(PolynomialError, series_exp, self.one_plus_u())
        self.assertRaises(PolynomialError, series_log, series_variable(self.order))
        self.assertRaises(PolynomialError, TruncatedSeries, [1], -1)

    def test_truncation(self):
        s = TruncatedSeries([1, 2, 3, 4], 2)
        self.assertEqual(s.order, 2)
        self.assertEqual(s[3], RatPolynomial())
        self.assertEqual(s, TruncatedSeries([1, 2, 3], 5))


if __name__ == '__main__':
    unittest.main()
