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

from zpoly.corpus import (MAX_CORPUS_GROUP_ORDER, connected_graphs, corpus,
    equivariant_corpus, family_corpus)
from zpoly.argparser_groups import UsageError
from zpoly.matroid import Uniform


class TestCorpus(unittest.TestCase):
    def test_connected_graphs(self):
        self.assertEqual(len(connected_graphs(4)), 9)
        self.assertEqual(len(connected_graphs(5)), 30)
        self.assertEqual(connected_graphs(1), [])

    def test_small_corpus(self):
        entries = corpus("small")
        names = [entry.name for entry in entries]
        self.assertEqual(len(names), len(set(names)))
        self.assertIn(Uniform(1, 2), [entry.spec for entry in entries])
        self.assertIn("braid:d=4", names)
        self.assertNotIn("braid:d=5", names)
        for entry in entries:
            entry.spec.validate()

    def test_full_is_larger(self):
        self.assertGreater(len(corpus("full")), len(corpus("small")))
        self.assertIn("qvec:2:d=3", [entry.name for entry in family_corpus("full")])

    def test_unknown(self):
        self.assertRaises(UsageError, corpus, "huge")
        self.assertRaises(UsageError, equivariant_corpus, "huge")

    def test_equivariant_corpus(self):
        entries = equivariant_corpus("small")
        self.assertTrue(entries)
        for entry in entries:
            self.assertLessEqual(entry.group.order, MAX_CORPUS_GROUP_ORDER)
            self.assertEqual(len(entry.group.identity), entry.spec.ground_size)
        orders = dict((entry.name, entry.group.order) for entry in entries)
        self.assertEqual(orders["U(1,3)"], 24)


if __name__ == '__main__':
    unittest.main()
