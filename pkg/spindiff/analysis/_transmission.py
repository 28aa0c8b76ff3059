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

"""Transmission through the grating and centroid line fits."""

import numpy as np

from spindiff.core import SpinorField
from spindiff.utils import StaleStateError, check_type_validity


def transmission(state, scene, tolerance=1e-4):
    """Return the norm transmitted beyond the grating slab.

    state     : SpinorField once the packet has cleared the grating
    scene     : ScatteringScene holding the grating geometry
    tolerance : largest norm allowed inside the slab (default 1e-4)

    Raise a StaleStateError if the packet still overlaps the slab.
    """
    check_type_validity(state, SpinorField, 'state')
    inside = scene.slab_norm(state)
    if inside > tolerance:
        raise StaleStateError(
            'Packet has not cleared the grating: slab norm %.3g > %.1g.'
            % (inside, tolerance)
        )
    return scene.downstream_norm(state)


def fit_through_origin(x_values, y_values):
    """Return the slope and R^2 of a least-squares line y = a.x.

    R^2 compares the residuals with the variance of y about its mean.
    """
    x_values = np.asarray(x_values, dtype=float)
    y_values = np.asarray(y_values, dtype=float)
    slope = np.sum(x_values * y_values) / np.sum(x_values ** 2)
    residuals = np.sum((y_values - slope * x_values) ** 2)
    spread = np.sum((y_values - np.mean(y_values)) ** 2)
    r_squared = 1. - residuals / spread if spread else 1.
    return float(slope), float(r_squared)
