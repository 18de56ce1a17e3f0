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

import time
import unittest

from zpoly.families import (FamilyError, NiceFamily, binomial, build_tables,
    family_lattice, gaussian_binomial, gaussian_identity_holds,
    generating_series_check, kl_closed_family, kl_family, narayana,
    narayana_identity_holds, palindromic_up_to, q_shift_check, realize,
    series_identity_check, stirling1_signed, stirling2, tables_csv,
    w_inversion_holds, whitney_multi_family, z_family)
from zpoly.klz import kl_polynomial, z_polynomial
from zpoly.matroid import LatticeTooLarge, enumerate_flats
from zpoly.polyarith import IntPolynomial

BRAID = NiceFamily.braid()
TYPE_B = NiceFamily.type_b()


class TestNumbers(unittest.TestCase):
    def test_triangles(self):
        self.assertEqual(stirling2(4, 2), 7)
        self.assertEqual(stirling2(9, 1), 1)
        self.assertEqual(stirling1_signed(4, 2), 11)
        self.assertEqual(stirling1_signed(4, 3), -6)
        self.assertEqual(binomial(6, 3), 20)
        self.assertEqual(binomial(3, 5), 0)
        self.assertEqual(gaussian_binomial(4, 2, 2), 35)
        self.assertEqual(gaussian_binomial(3, 1, 3), 13)

    def test_narayana(self):
        self.assertEqual([narayana(4, k) for k in range(1, 5)], [1, 6, 6, 1])
        self.assertEqual(narayana(4, 0), 0)


class TestNiceFamily(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(NiceFamily.parse("uniform:3"), NiceFamily.uniform(3))
        self.assertEqual(NiceFamily.parse(" Braid "), BRAID)
        self.assertEqual(NiceFamily.parse("qvec:4"), NiceFamily.qvec(4))
        self.assertEqual(str(NiceFamily.qvec(4)), "qvec:4")
        self.assertEqual(str(TYPE_B), "typeb")

    def test_parse_errors(self):
        for descriptor in ("qvec:6", "uniform:0", "uniform:x", "braid:2", "tree"):
            self.assertRaises(FamilyError, NiceFamily.parse, descriptor)


class TestTables(unittest.TestCase):
    def test_braid_flat_counts(self):
        tables = build_tables(BRAID, 8)
        self.assertEqual(tables.flat_count(3), 15)
        self.assertEqual(tables.flat_count(8), 21147)
        self.assertRaises(FamilyError, tables.check, 9)

    def test_type_b_flat_counts(self):
        self.assertEqual(build_tables(TYPE_B, 2).flat_count(2), 6)

    def test_tables_read_only(self):
        tables = build_tables(BRAID, 3)
        with self.assertRaises(ValueError):
            tables.W[1, 1] = 5

    def test_csv(self):
        lines = tables_csv(build_tables(BRAID, 2)).splitlines()
        self.assertEqual(lines[0], "family,d,k,W,w")
        self.assertEqual(len(lines), 1 + 6)
        self.assertEqual(lines[-1], "braid,2,2,1,1")


class TestFamilyPolynomials(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(z_family(NiceFamily.uniform(1), 3), IntPolynomial([1, 6, 6, 1]))
        self.assertEqual(kl_family(BRAID, 3), IntPolynomial([1, 1]))
        self.assertEqual(kl_family(BRAID, 0), IntPolynomial([1]))
        self.assertEqual(z_family(BRAID, 3), IntPolynomial([1, 7, 7, 1]))
        self.assertEqual(whitney_multi_family(BRAID, 3, (2, 1)), 18)
        self.assertEqual(whitney_multi_family(BRAID, 3, (1, 2)), 0)

    def test_identities(self):
        self.assertTrue(narayana_identity_holds(12))
        for q in (2, 3, 4, 5):
            self.assertTrue(gaussian_identity_holds(q, 10), q)
            self.assertTrue(q_shift_check(q, 10), q)

    def test_inversion_and_palindromes(self):
        for family in (BRAID, TYPE_B, NiceFamily.uniform(2), NiceFamily.qvec(3)):
            self.assertTrue(w_inversion_holds(family, 10), family)
            self.assertTrue(palindromic_up_to(family, 40), family)

    def test_closed_formula(self):
        for family in (BRAID, TYPE_B, NiceFamily.uniform(3)):
            for d in range(1, 12):
                p = kl_family(family, d)
                for i in range(1, (d + 1) // 2):
                    self.assertEqual(kl_closed_family(family, d, i), p[i], (family, d, i))

    def test_braid_forty_is_fast(self):
        started = time.time()
        p = kl_family(BRAID, 40, build_tables.__wrapped__(BRAID, 40))
        self.assertLess(time.time() - started, 10)
        self.assertEqual(p[0], 1)
        self.assertLess(2 * p.degree, 40)


class TestAgainstLattices(unittest.TestCase):
    cases = [(BRAID, 5), (TYPE_B, 3), (NiceFamily.uniform(1), 5), (NiceFamily.uniform(3), 4),
        (NiceFamily.qvec(2), 3), (NiceFamily.qvec(3), 2)]

    def test_lattice_agreement(self):
        for family, top in self.cases:
            for d in range(1, top + 1):
                lat = family_lattice(family, d)
                tables = build_tables(family, d)
                self.assertEqual(len(lat), tables.flat_count(d), (family, d))
                self.assertEqual(lat.rk_total, d)
                self.assertEqual(kl_family(family, d), kl_polynomial(lat), (family, d))
                self.assertEqual(z_family(family, d), z_polynomial(lat), (family, d))

    def test_realization_kinds(self):
        self.assertEqual(realize(BRAID, 3).kind, "graph")
        self.assertEqual(realize(TYPE_B, 3).kind, "vectors")
        self.assertEqual(realize(NiceFamily.uniform(2), 3).kind, "uniform")
        self.assertEqual(realize(NiceFamily.qvec(2), 3).kind, "flats")
        self.assertEqual(len(enumerate_flats(realize(NiceFamily.qvec(2), 3))), 16)

    def test_size_guard(self):
        self.assertRaises(LatticeTooLarge, family_lattice, BRAID, 9, 1000)


class TestSeries(unittest.TestCase):
    def test_generating_series(self):
        for family in (BRAID, TYPE_B, NiceFamily.uniform(1), NiceFamily.qvec(2)):
            self.assertTrue(generating_series_check(family, 6), family)

    def test_closed_series(self):
        self.assertTrue(series_identity_check(BRAID, 8))
        self.assertTrue(series_identity_check(TYPE_B, 6))

    def test_closed_series_limits(self):
        self.assertRaises(FamilyError, series_identity_check, NiceFamily.uniform(1), 4)
        self.assertRaises(FamilyError, series_identity_check, BRAID, 17)


if __name__ == '__main__':
    unittest.main()
