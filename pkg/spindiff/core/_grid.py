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

"""Uniform periodic Cartesian grid with its spectral axes."""

import numpy as np
import scipy.fft

from spindiff.utils import (
    ConfigurationError, GridMismatchError, check_positive_float,
    check_positive_int, check_type_validity
)


MIN_POINTS = 16


def _frozen(array):
    """Return an array flagged as read-only."""
    array.flags.writeable = False
    return array


class Grid2D:
    """Uniform (x, y) lattice, fields being indexed as [x, y].

    Real-space nodes are x0 + i.dx (i < nx) and y0 + j.dy (j < ny).
    Spectral axes `kx` and `ky` follow the standard FFT ordering.
    """

    def __init__(self, nx, ny, dx, dy, x0=0., y0=0.):
        """Instantiate the grid.

        nx, ny : number of nodes along x and y (int)
        dx, dy : grid spacings, in meters (float)
        x0, y0 : coordinates of the lower-left node (float, default 0)
        """
        check_positive_int(nx, 'nx')
        check_positive_int(ny, 'ny')
        check_positive_float(dx, 'dx')
        check_positive_float(dy, 'dy')
        check_type_validity(x0, float, 'x0')
        check_type_validity(y0, float, 'y0')
        self.nx = int(nx)
        self.ny = int(ny)
        self.dx = float(dx)
        self.dy = float(dy)
        self.x0 = float(x0)
        self.y0 = float(y0)
        self.x = _frozen(self.x0 + self.dx * np.arange(self.nx))
        self.y = _frozen(self.y0 + self.dy * np.arange(self.ny))
        self.kx = _frozen(2 * np.pi * scipy.fft.fftfreq(self.nx, self.dx))
        self.ky = _frozen(2 * np.pi * scipy.fft.fftfreq(self.ny, self.dy))
        self._k_squared = None

    def __repr__(self):
        return 'Grid2D(nx=%i, ny=%i, dx=%.4g, dy=%.4g, x0=%.4g, y0=%.4g)' % (
            self.nx, self.ny, self.dx, self.dy, self.x0, self.y0
        )

    def __eq__(self, other):
        if not isinstance(other, Grid2D):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def key(self):
        """Tuple of parameters uniquely defining the grid."""
        return (self.nx, self.ny, self.dx, self.dy, self.x0, self.y0)

    @property
    def shape(self):
        """Shape of the fields defined on the grid."""
        return (self.nx, self.ny)

    @property
    def cell_area(self):
        """Area of a grid cell, in square meters."""
        return self.dx * self.dy

    @property
    def extent_x(self):
        """Periodic length of the domain along x."""
        return self.nx * self.dx

    @property
    def extent_y(self):
        """Periodic length of the domain along y."""
        return self.ny * self.dy

    @property
    def x_max(self):
        """Coordinate of the last node along x."""
        return self.x[-1]

    @property
    def y_max(self):
        """Coordinate of the last node along y."""
        return self.y[-1]

    @property
    def k_squared(self):
        """2-D array of kx^2 + ky^2, built on first access."""
        if self._k_squared is None:
            self._k_squared = _frozen(
                self.kx[:, None] ** 2 + self.ky[None, :] ** 2
            )
        return self._k_squared

    def meshgrid(self):
        """Return the (X, Y) node coordinates as two 2-D arrays."""
        return np.meshgrid(self.x, self.y, indexing='ij')

    def column_index(self, x_value):
        """Return the index of the first node with x >= x_value."""
        return int(np.searchsorted(self.x, x_value - 1e-9 * self.dx))


def check_same_grid(*grids):
    """Raise a GridMismatchError if all given grids are not identical."""
    reference = grids[0]
    for grid in grids[1:]:
        if grid != reference:
            raise GridMismatchError(
                'Fields defined on different grids: %s and %s.'
                % (reference, grid)
            )


def check_field_shape(field, grid, name):
    """Raise a GridMismatchError if an array does not fit a grid."""
    if np.shape(field) != grid.shape:
        raise GridMismatchError(
            "'%s' has shape %s, expected %s."
            % (name, np.shape(field), grid.shape)
        )


def make_grid(
        extent_x, extent_y, spacing, x0=0., y0=0., spacing_y=None,
        fast_sizes=False
    ):
    """Return a Grid2D covering at least the requested extents.

    extent_x   : minimal length of the domain along x, in meters
    extent_y   : minimal length of the domain along y, in meters
    spacing    : grid spacing along x (and y by default), in meters
    x0, y0     : coordinates of the lower-left node (default 0)
    spacing_y  : optional distinct spacing along y (default None)
    fast_sizes : whether to round node counts up to sizes for which
                 FFTs are fast (bool, default False)
    """
    for name, value in (
            ('extent_x', extent_x), ('extent_y', extent_y),
            ('spacing', spacing)
        ):
        check_positive_float(value, name)
    if spacing_y is None:
        spacing_y = spacing
    check_positive_float(spacing_y, 'spacing_y')
    # Tolerate round-off when the extent is a multiple of the spacing.
    n_x = int(np.ceil(extent_x / spacing - 1e-9))
    n_y = int(np.ceil(extent_y / spacing_y - 1e-9))
    if fast_sizes:
        n_x = scipy.fft.next_fast_len(n_x)
        n_y = scipy.fft.next_fast_len(n_y)
    if min(n_x, n_y) < MIN_POINTS:
        raise ConfigurationError(
            'Grid too coarse: (%i, %i) nodes, at least %i required per axis.'
            % (n_x, n_y, MIN_POINTS)
        )
    return Grid2D(n_x, n_y, spacing, spacing_y, x0, y0)
