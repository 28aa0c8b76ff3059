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

"""Coulomb-gauge magnetostatic solve for the self-generated fields."""

import numpy as np
import scipy.fft

from spindiff.core import PHYSICAL, check_field_shape
from spindiff.internal.spectral import (
    centered_difference, irfft2, nyquist_mask, rfft2
)
from spindiff.selffield._currents import CurrentField
from spindiff.utils import ConfigurationError, check_type_validity


BZ_DERIVATIVES = ('spectral', 'centered')


class SelfFieldSolution:
    """Self-generated vector potential (Ax, Ay) and out-of-plane field Bz."""

    def __init__(self, grid, ax, ay, bz):
        for name, value in (('ax', ax), ('ay', ay), ('bz', bz)):
            check_field_shape(value, grid, name)
        self.grid = grid
        self.ax = ax
        self.ay = ay
        self.bz = bz

    @classmethod
    def zeros(cls, grid):
        """Return a vanishing solution on a given grid."""
        return cls(
            grid, np.zeros(grid.shape), np.zeros(grid.shape),
            np.zeros(grid.shape)
        )

    def peak_bz(self):
        """Return the peak magnitude of Bz (T)."""
        return float(np.max(np.abs(self.bz)))


def peak_bz(solution):
    """Return the peak magnitude of a solution's Bz field (T)."""
    check_type_validity(solution, SelfFieldSolution, 'solution')
    return solution.peak_bz()


def solve_vector_potential(current, bz_derivative='spectral', mu0=None):
    """Solve the Coulomb-gauge magnetostatic problem for a current.

    current       : CurrentField sourcing the field
    bz_derivative : how to differentiate A into Bz, either 'spectral'
                    or 'centered' (str, default 'spectral')
    mu0           : vacuum permeability (default: CODATA value)

    The Fourier-space solution is A(k) = mu0.P_T(k).J(k) / k^2, with
    P_T the transverse projector; the k = 0 mode and the Nyquist bins
    are set to zero.
    """
    check_type_validity(current, CurrentField, 'current')
    if bz_derivative not in BZ_DERIVATIVES:
        raise ConfigurationError(
            "Invalid 'bz_derivative': '%s'; expected one of %s."
            % (bz_derivative, BZ_DERIVATIVES)
        )
    if mu0 is None:
        mu0 = PHYSICAL.mu0
    grid = current.grid
    k_x = grid.kx[:, None]
    k_y = 2 * np.pi * scipy.fft.rfftfreq(grid.ny, grid.dy)[None, :]
    keep = nyquist_mask(grid.nx)[:, None] & nyquist_mask(grid.ny, half=True)
    k_squared = k_x ** 2 + k_y ** 2
    k_squared[0, 0] = np.inf
    # Project the current onto its transverse part, then invert -k^2.
    spec_x = rfft2(current.jx)
    spec_y = rfft2(current.jy)
    longitudinal = (k_x * spec_x + k_y * spec_y) / k_squared
    scale = np.where(keep, mu0 / k_squared, 0.)
    spec_ax = (spec_x - k_x * longitudinal) * scale
    spec_ay = (spec_y - k_y * longitudinal) * scale
    a_x = irfft2(spec_ax, grid.shape)
    a_y = irfft2(spec_ay, grid.shape)
    if bz_derivative == 'spectral':
        b_z = irfft2(1j * (k_x * spec_ay - k_y * spec_ax), grid.shape)
    else:
        b_z = (
            centered_difference(a_y, grid.dx, 0)
            - centered_difference(a_x, grid.dy, 1)
        )
    return SelfFieldSolution(grid, a_x, a_y, b_z)
