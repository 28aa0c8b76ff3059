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

"""Scattering scene: grid, grating potentials, mask and stage layout."""

import numpy as np

from spindiff.core import PHYSICAL, Grid2D, check_field_shape
from spindiff.potentials._absorber import AbsorberSpec, absorbing_mask
from spindiff.potentials._grating import (
    GratingSpec, geometric_potential, image_potential
)
from spindiff.utils import check_positive_float, check_type_validity


def opaque_threshold(grid):
    """Return the largest kinetic energy representable on a grid (J).

    Barriers above this energy are opaque at the grid's resolution:
    their cells are masked out of the wave function after every step.
    """
    k_max_sq = (np.pi / grid.dx) ** 2 + (np.pi / grid.dy) ** 2
    return PHYSICAL.hbar ** 2 * k_max_sq / (2 * PHYSICAL.m_e)


class ScatteringScene:
    """Static environment through which the spinor is propagated.

    grid      : Grid2D of the simulation
    grating   : GratingSpec, or None for free space
    absorber  : AbsorberSpec, or None to disable the boundary mask
    potential : total static scalar potential V_g + V_image (J)
    opaque    : boolean array of the cells above the opaque threshold
    mask      : absorbing mask (zero on opaque cells) array, or None
    l_b1      : length of the upstream B1 stage (m)
    l_gs      : grating-to-screen distance (m)
    l_b2      : length of the downstream B2 stage (m)
    """

    def __init__(
            self, grid, grating=None, absorber=None,
            l_b1=.1, l_gs=.5, l_b2=0., potential=None
        ):
        """Instantiate the scene, building its potential and mask.

        grid      : Grid2D of the simulation
        grating   : optional GratingSpec (default None, free space)
        absorber  : optional AbsorberSpec (default None, no mask)
        l_b1      : B1 stage length in meters (default .1)
        l_gs      : grating-to-screen distance in meters (default .5)
        l_b2      : B2 stage length in meters (default 0)
        potential : optional scalar potential (J) overriding the one
                    derived from the grating (default None)
        """
        check_type_validity(grid, Grid2D, 'grid')
        check_type_validity(grating, (GratingSpec, type(None)), 'grating')
        check_type_validity(absorber, (AbsorberSpec, type(None)), 'absorber')
        check_positive_float(l_b1, 'l_b1', allow_zero=True)
        check_positive_float(l_gs, 'l_gs')
        check_positive_float(l_b2, 'l_b2', allow_zero=True)
        self.grid = grid
        self.grating = grating
        self.absorber = absorber
        self.l_b1 = float(l_b1)
        self.l_gs = float(l_gs)
        self.l_b2 = float(l_b2)
        if potential is None:
            potential = np.zeros(grid.shape)
            if grating is not None:
                potential = (
                    geometric_potential(grid, grating)
                    + image_potential(grid, grating)
                )
        check_field_shape(potential, grid, 'potential')
        self.potential = np.asarray(potential, dtype=float)
        self.potential.flags.writeable = False
        self.opaque = self.potential >= opaque_threshold(grid)
        self.opaque.flags.writeable = False
        self.mask = None
        if absorber is not None:
            self.mask = absorbing_mask(grid, absorber)
        if self.opaque.any():
            if self.mask is None:
                self.mask = np.ones(grid.shape)
            self.mask = np.where(self.opaque, 0., self.mask)
        if self.mask is not None:
            self.mask.flags.writeable = False

    def with_potential(self, potential):
        """Return a copy of the scene with a replaced scalar potential."""
        return ScatteringScene(
            self.grid, self.grating, self.absorber,
            self.l_b1, self.l_gs, self.l_b2, potential
        )

    @property
    def x_front(self):
        """Upstream face of the grating slab (grid start if no grating)."""
        return self.grid.x[0] if self.grating is None else self.grating.x_front

    @property
    def x_back(self):
        """Downstream face of the grating slab (grid start if no grating)."""
        return self.grid.x[0] if self.grating is None else self.grating.x_back

    def slab_norm(self, state):
        """Return the norm of a state lying inside the grating slab."""
        if self.grating is None:
            return 0.
        columns = self.grating.slab_columns(self.grid)
        return float(np.sum(state.density()[columns]) * self.grid.cell_area)

    def downstream_norm(self, state):
        """Return the norm of a state lying beyond the grating slab."""
        columns = self.downstream_columns()
        return float(np.sum(state.density()[columns]) * self.grid.cell_area)

    def downstream_columns(self):
        """Return a 1-D boolean mask of the columns beyond the slab."""
        if self.grating is None:
            return np.ones(self.grid.nx, dtype=bool)
        return self.grid.x > self.x_back + 1e-9 * self.grid.dx


def build_scene(grid, grating=None, absorber=None, l_b1=.1, l_gs=.5, l_b2=0.):
    """Return a ScatteringScene (see ScatteringScene for arguments)."""
    return ScatteringScene(grid, grating, absorber, l_b1, l_gs, l_b2)
