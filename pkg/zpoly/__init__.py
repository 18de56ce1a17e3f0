# -*- coding: utf-8 -*-

'''Exact Kazhdan-Lusztig and Z-polynomials of matroids.

The package computes the Kazhdan-Lusztig polynomial P_M(t) and the
Z-polynomial Z_M(t) of a matroid from its lattice of flats by four
independent methods, specializes them to the families of matroids that are
closed under contraction (braid, type B, uniform, all vectors over F_q) and
verifies palindromicity, Narayana and Gaussian identities and the conjectures
on real-rootedness and interlacing with exact Sturm certificates.
'''

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

from zpoly._version import __version__
