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

from zpoly.families import type_b_vectors
from zpoly.klz import (KLError, KlMethod, closed_formula_terms,
    defining_identity_holds, empty_flat_term_vanishes, enumerate_index_tuples,
    kl_all_methods, kl_coeff_closed, kl_coeff_new_recursion, kl_defining,
    kl_polynomial, kl_via_mobius, mobius_inversion_holds, t_index,
    z_is_palindromic, z_polynomial)
from zpoly.matroid import (LinearVectors, Uniform, boolean_spec,
    complete_graph_spec, enumerate_flats)
from zpoly.polyarith import IntPolynomial


def lattices():
    specs = {
        "K4": complete_graph_spec(4),
        "K5": complete_graph_spec(5),
        "U(1,3)": Uniform(1, 3),
        "U(2,3)": Uniform(2, 3),
        "U(1,4)": Uniform(1, 4),
        "U(1,5)": Uniform(1, 5),
        "B3": boolean_spec(3),
        "typeB3": type_b_vectors(3),
        "fano-like": LinearVectors(((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1))),
    }
    return dict((name, enumerate_flats(spec)) for name, spec in specs.items())


class TestKnownPolynomials(unittest.TestCase):
    def test_k4(self):
        lat = enumerate_flats(complete_graph_spec(4))
        self.assertEqual(kl_defining(lat), IntPolynomial([1, 1]))
        self.assertEqual(z_polynomial(lat), IntPolynomial([1, 7, 7, 1]))

    def test_uniform(self):
        lat = enumerate_flats(Uniform(1, 3))
        self.assertEqual(kl_via_mobius(lat), IntPolynomial([1, 2]))
        self.assertEqual(z_polynomial(lat, KlMethod.CLOSED_FORMULA), IntPolynomial([1, 6, 6, 1]))

    def test_boolean_is_trivial(self):
        lat = enumerate_flats(boolean_spec(4))
        for method in KlMethod:
            self.assertEqual(kl_polynomial(lat, method), IntPolynomial([1]))
        self.assertEqual(z_polynomial(lat), IntPolynomial([1, 4, 6, 4, 1]))

    def test_rank_zero_and_one(self):
        for spec in (boolean_spec(0), boolean_spec(1), Uniform(2, 1)):
            lat = enumerate_flats(spec)
            for method in KlMethod:
                self.assertEqual(kl_polynomial(lat, method), IntPolynomial([1]))


class TestCrossMethod(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.lattices = lattices()

    def test_all_methods_agree(self):
        for name, lat in self.lattices.items():
            results, agree = kl_all_methods(lat)
            self.assertTrue(agree, name)
            self.assertEqual(set(results), set(KlMethod))

    def test_z_palindromic(self):
        for name, lat in self.lattices.items():
            for method in KlMethod:
                self.assertTrue(z_is_palindromic(lat, method), (name, method))
            z = z_polynomial(lat)
            self.assertEqual(z.degree, lat.rk_total, name)
            self.assertEqual(z[0], 1, name)

    def test_identities(self):
        for name, lat in self.lattices.items():
            for method in KlMethod:
                self.assertTrue(defining_identity_holds(lat, method), (name, method))
            self.assertTrue(mobius_inversion_holds(lat), name)
            self.assertTrue(empty_flat_term_vanishes(lat), name)

    def test_degree_bound(self):
        for name, lat in self.lattices.items():
            p = kl_defining(lat)
            if lat.rk_total > 0:
                self.assertLess(2 * p.degree, lat.rk_total, name)


class TestNewRecursion(unittest.TestCase):
    def setUp(self):
        self.lat = enumerate_flats(Uniform(1, 5))

    def test_coefficients(self):
        self.assertEqual(kl_coeff_new_recursion(self.lat, 0), 1)
        self.assertEqual(kl_coeff_new_recursion(self.lat, 3), 0)
        self.assertEqual(kl_coeff_new_recursion(self.lat, 1), kl_defining(self.lat)[1])
        self.assertEqual(kl_coeff_new_recursion(self.lat, 2), kl_defining(self.lat)[2])

    def test_negative_index(self):
        self.assertRaises(KLError, kl_coeff_new_recursion, self.lat, -1)


class TestClosedFormula(unittest.TestCase):
    def test_term_count(self):
        for i in range(1, 7):
            self.assertEqual(len(enumerate_index_tuples(i, 2 * i + 1)), 2 * 3 ** (i - 1))

    def test_empty_and_invalid(self):
        self.assertEqual(enumerate_index_tuples(1, 2), [])
        self.assertEqual(enumerate_index_tuples(2, 3), [])
        self.assertRaises(KLError, enumerate_index_tuples, 0, 5)

    def test_t_index(self):
        self.assertEqual(t_index(1, frozenset([1, 2]), 3), 3)
        self.assertEqual(t_index(2, frozenset([1]), 3), 2)
        self.assertEqual(t_index(4, frozenset([1, 2, 3]), 3), 4)

    def test_rank_three_terms(self):
        tuples = enumerate_index_tuples(1, 3)
        self.assertEqual(sorted((t.sign, t.profile()) for t in tuples), [(-1, (2,)), (1, (1,))])
        lat = enumerate_flats(complete_graph_spec(4))
        terms = closed_formula_terms(lat, 1)
        self.assertEqual(sorted(terms), [(-1, (2,), 6), (1, (1,), 7)])
        self.assertEqual(kl_coeff_closed(lat, 1), 1)

    def test_profiles_stay_in_range(self):
        for tup in enumerate_index_tuples(3, 8):
            profile = tup.profile()
            self.assertEqual(len(profile), tup.r)
            self.assertTrue(all(0 <= i <= 8 for i in profile), tup)


if __name__ == '__main__':
    unittest.main()
