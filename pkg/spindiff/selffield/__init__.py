# coding: utf-8
#
# Copyright 2026 spindiff contributors
#
# This file is part of spindiff.
#
# spindiff is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# spindiff is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with spindiff.  If not, see <http://www.gnu.org/licenses/>.

"""Charge currents of the spinor and the magnetostatic self-field they source.

`current_density` builds the paramagnetic, diamagnetic and magnetization
currents of a `SpinorField`; `solve_vector_potential` turns a current
into the Coulomb-gauge vector potential and out-of-plane field.
"""

from ._currents import (
    CURRENT_TERMS, CurrentField, SpinDensityField, current_density,
    spin_density
)
from ._poisson import (
    BZ_DERIVATIVES, SelfFieldSolution, peak_bz, solve_vector_potential
)
