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

"""spindiff - spin-resolved electron diffraction from nanogratings.

This package simulates the diffraction of a two-component (Pauli)
electron wave packet by a multi-slit transmission grating, including
the image-charge interaction with the grating bars, the magnetostatic
self-field sourced by the electron's own current, and external
magnetic stages rotating the spin (B1) or splitting the spin channels
in transverse momentum (B2).

Users should focus on the `scenarios` submodule, which implements
preset runs and the `simulate` command. The building blocks live in
`core` (grids and spinors), `potentials` (grating and absorber),
`selffield` (currents and magnetostatics), `propagator` (split-step
time evolution and magnetic stages) and `analysis` (far-field
profiles, transmission and Husimi maps).
"""

from . import utils
from . import internal
from . import core
from . import potentials
from . import selffield
from . import analysis
from . import propagator
from . import scenarios
from .scenarios import parse_config, run_scenario


__version__ = '0.1'
