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

"""Observables derived from the propagated spinor.

Far-field screen profiles and their sigma_y readout, transmission
through the grating, fringe widths, Husimi phase-space maps and the
closed-form predictions of the magnetic stages.
"""

from ._formulas import (
    analytic_deflection, b_pi, chi, flip_probability_analytic,
    fringe_estimate, larmor_angle, screen_time, zeeman_wavenumber
)
from ._farfield import (
    PROFILE_COLUMNS, FarFieldProfile, TransverseSpinor, far_field,
    flip_probability, fringe_width, sigma_y_projection, spin_filter_readout,
    transverse_slice
)
from ._transmission import fit_through_origin, transmission
from ._husimi import (
    HusimiMap, default_husimi_axes, husimi, mean_ky, snapshot_plane
)
