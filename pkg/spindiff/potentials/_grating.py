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

"""Nanograting geometry, and its geometric and image-charge potentials.

Potentials are returned in joules, as 2-D arrays on the grid.
"""

import numpy as np

from spindiff.core import PHYSICAL, Grid2D
from spindiff.utils import (
    ConfigurationError, GeometryError, check_positive_float,
    check_positive_int, check_type_validity
)


class GratingSpec:
    """Transmission grating made of n_slits slits in a slab of material.

    The slab spans x in [x_front, x_front + thickness]. Slits of width
    w = open_fraction * period are centered on y_center + (j - (n-1)/2).d
    and the material extends to the grid edges beyond the outer slits.
    """

    def __init__(
            self, period, open_fraction, thickness, barrier, image_scale,
            x_front, n_slits, y_center=0.
        ):
        """Instantiate the grating specification.

        period        : grating period d, in meters
        open_fraction : slit width to period ratio f, in ]0, 1[
        thickness     : slab thickness h along x, in meters
        barrier       : potential energy V0 inside the bars, in joules
        image_scale   : image-charge scaling factor eta, in [0, 1[
        x_front       : x coordinate of the upstream face, in meters
        n_slits       : number of slits (int, zero meaning no grating)
        y_center      : y coordinate of the grating's center (default 0)
        """
        check_positive_float(period, 'period')
        check_positive_float(thickness, 'thickness')
        check_positive_float(barrier, 'barrier', allow_zero=True)
        check_positive_float(image_scale, 'image_scale', allow_zero=True)
        check_positive_int(n_slits, 'n_slits', allow_zero=True)
        check_type_validity(x_front, float, 'x_front')
        check_type_validity(y_center, float, 'y_center')
        if not 0 < open_fraction < 1:
            raise ConfigurationError(
                "'open_fraction' must lie in ]0, 1[, not %s." % open_fraction
            )
        if image_scale >= 1:
            raise ConfigurationError(
                "'image_scale' must lie in [0, 1[, not %s." % image_scale
            )
        self.period = float(period)
        self.open_fraction = float(open_fraction)
        self.thickness = float(thickness)
        self.barrier = float(barrier)
        self.image_scale = float(image_scale)
        self.x_front = float(x_front)
        self.n_slits = int(n_slits)
        self.y_center = float(y_center)

    @property
    def slit_width(self):
        """Width w = f.d of each slit."""
        return self.open_fraction * self.period

    @property
    def x_back(self):
        """x coordinate of the downstream face of the slab."""
        return self.x_front + self.thickness

    def slit_centers(self):
        """Return the y coordinates of the slits' centers."""
        offsets = np.arange(self.n_slits) - (self.n_slits - 1) / 2
        return self.y_center + offsets * self.period

    def check_fits(self, grid):
        """Raise a GeometryError if the grating does not fit the grid."""
        if self.n_slits == 0:
            return
        if self.x_front < grid.x[0] or self.x_back > grid.x_max:
            raise GeometryError(
                'Grating slab [%.4g, %.4g] exceeds the grid along x.'
                % (self.x_front, self.x_back)
            )
        centers = self.slit_centers()
        lowest = centers[0] - self.slit_width / 2
        highest = centers[-1] + self.slit_width / 2
        if lowest < grid.y[0] or highest > grid.y_max:
            raise GeometryError(
                'Slits span y in [%.4g, %.4g], beyond the grid [%.4g, %.4g].'
                % (lowest, highest, grid.y[0], grid.y_max)
            )

    def slab_columns(self, grid):
        """Return a 1-D boolean mask of grid columns inside the slab."""
        tolerance = 1e-9 * grid.dx
        return (
            (grid.x >= self.x_front - tolerance)
            & (grid.x <= self.x_back + tolerance)
        )

    def slit_walls(self, grid):
        """Return (open, lower, upper) 1-D arrays along y.

        open  : boolean mask of rows lying in a slit opening
        lower : coordinate of the lower wall of the row's slit
        upper : coordinate of the upper wall of the row's slit
        """
        half = self.slit_width / 2
        tolerance = 1e-9 * grid.dy
        is_open = np.zeros(grid.ny, dtype=bool)
        lower = np.zeros(grid.ny)
        upper = np.zeros(grid.ny)
        for center in self.slit_centers():
            inside = np.abs(grid.y - center) <= half + tolerance
            is_open |= inside
            lower[inside] = center - half
            upper[inside] = center + half
        return is_open, lower, upper


def geometric_potential(grid, grating):
    """Return the geometric potential V_g of the grating (J).

    V_g equals the barrier height inside the bars of the slab and
    zero in the slit openings and outside the slab.
    """
    check_type_validity(grid, Grid2D, 'grid')
    check_type_validity(grating, GratingSpec, 'grating')
    grating.check_fits(grid)
    potential = np.zeros(grid.shape)
    if grating.n_slits == 0:
        return potential
    is_open, _, _ = grating.slit_walls(grid)
    columns = grating.slab_columns(grid)
    potential[np.ix_(columns, ~is_open)] = grating.barrier
    return potential


def image_potential(grid, grating):
    """Return the image-charge potential of the slit walls (J).

    Inside each slit opening and within the slab, the potential is
    -(eta.e^2 / 8.pi.eps0).(1/d1 + 1/d2), d1 and d2 being the distances
    to the two walls, clamped below at half a grid cell.
    """
    check_type_validity(grid, Grid2D, 'grid')
    check_type_validity(grating, GratingSpec, 'grating')
    grating.check_fits(grid)
    potential = np.zeros(grid.shape)
    if grating.n_slits == 0 or grating.image_scale == 0:
        return potential
    is_open, lower, upper = grating.slit_walls(grid)
    floor = grid.dy / 2
    dist_up = np.maximum(upper[is_open] - grid.y[is_open], floor)
    dist_low = np.maximum(grid.y[is_open] - lower[is_open], floor)
    prefactor = (
        grating.image_scale * PHYSICAL.e ** 2 / (8 * np.pi * PHYSICAL.eps0)
    )
    profile = np.zeros(grid.ny)
    profile[is_open] = -prefactor * (1 / dist_up + 1 / dist_low)
    columns = grating.slab_columns(grid)
    potential[columns] = profile
    return potential
