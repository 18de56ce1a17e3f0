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

import sympy

from zpoly.families import NiceFamily, z_family
from zpoly.polyarith import IntPolynomial
from zpoly.roots import (Interlacing, NonRealRootsError, RootError,
    conjecture_sweep, count_negative_real_roots, count_roots_between,
    interlaces, is_log_concave, is_negative_real_rooted, isolate_roots,
    qvec_gap_property, refine_interval, squarefree_part, sturm_certificate)


def from_roots(*roots):
    """Monic integer polynomial prod (t - r)."""
    p = IntPolynomial([1])
    for r in roots:
        p = p * IntPolynomial([-r, 1])
    return p


def sympy_real_roots(p):
    t = sympy.Symbol("t")
    return sympy.Poly(list(reversed(p.coeffs)), t).real_roots()


class TestCounting(unittest.TestCase):
    def test_multiplicities(self):
        p = from_roots(-1, -1, -2)
        self.assertEqual(count_negative_real_roots(p), (2, 3))
        self.assertTrue(is_negative_real_rooted(p))
        self.assertEqual(squarefree_part(p).degree, 2)

    def test_non_real(self):
        p = IntPolynomial([1, 0, 1])
        self.assertEqual(count_negative_real_roots(p), (0, 0))
        self.assertFalse(is_negative_real_rooted(p))
        self.assertFalse(is_negative_real_rooted(IntPolynomial([1, 1, 0, 1])))

    def test_positive_root(self):
        self.assertFalse(is_negative_real_rooted(from_roots(1, -2)))

    def test_zero_at_origin(self):
        self.assertRaises(RootError, count_negative_real_roots, IntPolynomial([0, 1]))

    def test_between(self):
        p = from_roots(-1, 1)
        self.assertEqual(count_roots_between(p, -2, 2), 2)
        self.assertEqual(count_roots_between(p, -1, 1), 1)
        self.assertEqual(count_roots_between(p, None, None), 2)

    def test_against_sympy(self):
        polys = [z_family(NiceFamily.braid(), d) for d in range(1, 7)]
        polys += [z_family(NiceFamily.type_b(), d) for d in range(1, 5)]
        polys += [IntPolynomial([1, 1, 0, 1]), from_roots(-3, -1, 2)]
        for p in polys:
            roots = sympy_real_roots(p)
            negative = sum(1 for r in roots if r < 0)
            _, total = count_negative_real_roots(p)
            self.assertEqual(total, negative, p)
            self.assertEqual(is_negative_real_rooted(p), negative == p.degree, p)


class TestCertificates(unittest.TestCase):
    def test_isolation(self):
        p = from_roots(-3, -2, -1)
        intervals = isolate_roots(p)
        self.assertEqual(len(intervals), 3)
        for (lo, hi), root in zip(intervals, (-3, -2, -1)):
            self.assertTrue(lo < root <= hi, (lo, hi, root))
            self.assertEqual(count_roots_between(p, lo, hi), 1)
        for (_, hi), (lo, _) in zip(intervals, intervals[1:]):
            self.assertTrue(hi <= lo)

    def test_close_roots(self):
        p = IntPolynomial([1000 * 1001, 2001, 1]) * IntPolynomial([1, 1000])
        intervals = isolate_roots(p)
        self.assertEqual(len(intervals), 3)

    def test_certificate_json(self):
        cert = sturm_certificate(from_roots(-2, -1))
        report = cert.to_json()
        self.assertEqual(len(report["isolating"]), 2)
        self.assertEqual(report["squarefree"], [2, 3, 1])
        self.assertTrue(all(isinstance(x, (int, str)) for pair in report["isolating"] for x in pair))

    def test_non_real_certificate(self):
        with self.assertRaises(NonRealRootsError) as ctx:
            sturm_certificate(IntPolynomial([1, 1, 0, 1]))
        self.assertEqual(ctx.exception.real_count, 1)

    def test_refine(self):
        p = from_roots(-2, -1)
        interval = isolate_roots(p)[0]
        lo, hi = refine_interval(p, interval, width=Fraction(1, 1000))
        self.assertTrue(hi - lo <= Fraction(1, 1000))
        self.assertTrue(lo < -2 <= hi)


class TestInterlacing(unittest.TestCase):
    def test_verdicts(self):
        self.assertEqual(interlaces(from_roots(-3, -1), from_roots(-2)).kind, Interlacing.STRICT)
        self.assertEqual(interlaces(from_roots(-2, -1), from_roots(-1)).kind, Interlacing.WEAK)
        verdict = interlaces(from_roots(-2, -1), from_roots(-3))
        self.assertEqual(verdict.kind, Interlacing.NONE)
        self.assertFalse(verdict)
        self.assertEqual(verdict.to_json(), {"verdict": "none", "witness": 1})

    def test_double_root(self):
        self.assertEqual(interlaces(from_roots(-1, -1), from_roots(-1)).kind, Interlacing.WEAK)
        self.assertEqual(interlaces(from_roots(-3, -3, -1), from_roots(-2, -1)).kind, Interlacing.NONE)

    def test_preconditions(self):
        self.assertRaises(RootError, interlaces, from_roots(-1), from_roots(-2))
        self.assertRaises(NonRealRootsError, interlaces, IntPolynomial([1, 0, 1]), IntPolynomial([1, 1]))

    def test_families(self):
        for family in (NiceFamily.braid(), NiceFamily.uniform(2)):
            for d in range(2, 9):
                verdict = interlaces(z_family(family, d), z_family(family, d - 1))
                self.assertTrue(verdict, (family, d))

    def test_log_concave(self):
        self.assertTrue(is_log_concave(IntPolynomial([1, 6, 6, 1])))
        self.assertFalse(is_log_concave(IntPolynomial([1, 0, 1])))
        self.assertFalse(is_log_concave(IntPolynomial([1, -1])))


class TestSweeps(unittest.TestCase):
    def test_braid_sweep(self):
        rows = conjecture_sweep(NiceFamily.braid(), 10)
        self.assertEqual([row["d"] for row in rows], list(range(11)))
        for row in rows:
            self.assertTrue(row["pass"], row)
            self.assertTrue(row["log_concave"], row)
            self.assertNotIn("certificate", row)

    def test_certificates(self):
        rows = conjecture_sweep(NiceFamily.uniform(1), 5, certificates=True)
        self.assertTrue(all(row["pass"] for row in rows))
        self.assertEqual(len(rows[5]["certificate"]["isolating"]), 5)

    def test_qvec_gaps(self):
        for q, d in ((2, 3), (3, 4), (2, 6)):
            holds, gaps = qvec_gap_property(q, d)
            self.assertTrue(holds, (q, d))
            self.assertEqual(len(gaps), d - 1)


if __name__ == '__main__':
    unittest.main()
