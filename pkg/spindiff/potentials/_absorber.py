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

"""Absorbing boundary mask applied after each time step."""

import numpy as np

from spindiff.core import Grid2D
from spindiff.utils import ConfigurationError, check_type_validity


class AbsorberSpec:
    """Cos^2 absorbing layer along every edge of the domain."""

    def __init__(self, width_frac=.05, minimum=0.):
        """Instantiate the absorber specification.

        width_frac : width of the layer, as a fraction of the domain's
                     extent along each axis (float in ]0, .25], default .05)
        minimum    : mask value reached on the boundary
                     (float in [0, 1[, default 0)
        """
        check_type_validity(width_frac, float, 'width_frac')
        check_type_validity(minimum, float, 'minimum')
        if not 0 < width_frac <= .25:
            raise ConfigurationError(
                "'width_frac' must lie in ]0, .25], not %s." % width_frac
            )
        if not 0 <= minimum < 1:
            raise ConfigurationError(
                "'minimum' must lie in [0, 1[, not %s." % minimum
            )
        self.width_frac = float(width_frac)
        self.minimum = float(minimum)

    def profile(self, n_points, spacing):
        """Return the 1-D mask profile along an axis of n_points nodes."""
        index = np.arange(n_points)
        distance = np.minimum(index, n_points - 1 - index) * spacing
        width = self.width_frac * (n_points - 1) * spacing
        ramp = np.clip(distance / width, 0, 1)
        ramp = np.sin(np.pi * ramp / 2) ** 2
        return self.minimum + (1 - self.minimum) * ramp


def absorbing_mask(grid, absorber):
    """Return the multiplicative absorbing mask on a grid.

    The mask equals 1 in the interior, and ramps down smoothly to
    the absorber's minimum on the boundary nodes.
    """
    check_type_validity(grid, Grid2D, 'grid')
    check_type_validity(absorber, AbsorberSpec, 'absorber')
    along_x = absorber.profile(grid.nx, grid.dx)
    along_y = absorber.profile(grid.ny, grid.dy)
    return np.minimum(along_x[:, None], along_y[None, :])
