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

"""Grids, physical constants and spinor wave functions.

Fields are numpy arrays indexed as [x, y] on a `Grid2D`. A `SpinorField`
holds the spin-up and spin-down components of the electron wave
function, normalized in two dimensions (|psi|^2 in 1/m^2).
"""

from ._physics import (
    PHYSICAL, PhysicalConstants, build_constants, energy_from_wavelength,
    velocity_from_wavelength, wavelength_from_energy, wavenumber
)
from ._grid import (
    Grid2D, check_field_shape, check_same_grid, make_grid
)
from ._spinor import (
    SPIN_SHORTCUTS, PacketSpec, SpinorField, init_gaussian_spinor,
    packet_width, populations, spectral_centroid
)
