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

"""Two-component spinor fields and Gaussian wave packet initialization."""

import numpy as np
import scipy.fft

from spindiff.core._grid import Grid2D, check_field_shape
from spindiff.core._physics import (
    PHYSICAL, energy_from_wavelength, velocity_from_wavelength, wavenumber
)
from spindiff.internal.spectral import get_workers
from spindiff.utils import (
    ConfigurationError, GeometryError, check_positive_float,
    check_type_validity
)


SPIN_SHORTCUTS = {
    'up': (1., 0.),
    'down': (0., 1.),
    '+x': (2 ** -.5, 2 ** -.5),
    '-x': (2 ** -.5, -2 ** -.5),
    '+y': (2 ** -.5, 1j * 2 ** -.5),
    '-y': (2 ** -.5, -1j * 2 ** -.5),
}


class PacketSpec:
    """Parameters of an initial Gaussian spinor wave packet.

    The amplitude envelope is exp[-(x-x0c)^2/2sx^2 - (y-y0c)^2/2sy^2],
    so that sigma_x and sigma_y are amplitude widths.
    """

    def __init__(
            self, x0c, y0c, sigma_x, sigma_y, lambda_dB,
            alpha0=1., beta0=0., energy=None
        ):
        """Instantiate the packet specification.

        x0c, y0c  : coordinates of the packet's center, in meters
        sigma_x   : amplitude width along x, in meters
        sigma_y   : amplitude width along y, in meters
        lambda_dB : de Broglie wavelength, in meters
        alpha0    : spin-up coefficient (complex, default 1)
        beta0     : spin-down coefficient (complex, default 0)
        energy    : optional kinetic energy (J) to check the
                    wavelength against, to 0.5% (default None)
        """
        check_type_validity(x0c, float, 'x0c')
        check_type_validity(y0c, float, 'y0c')
        check_positive_float(sigma_x, 'sigma_x')
        check_positive_float(sigma_y, 'sigma_y')
        check_positive_float(lambda_dB, 'lambda_dB')
        self.x0c = float(x0c)
        self.y0c = float(y0c)
        self.sigma_x = float(sigma_x)
        self.sigma_y = float(sigma_y)
        self.lambda_dB = float(lambda_dB)
        self.alpha0 = complex(alpha0)
        self.beta0 = complex(beta0)
        total = abs(self.alpha0) ** 2 + abs(self.beta0) ** 2
        if abs(total - 1) > 1e-12:
            raise ConfigurationError(
                'Spinor coefficients are not normalized: '
                '|alpha0|^2 + |beta0|^2 = %.15g.' % total
            )
        if energy is not None:
            check_positive_float(energy, 'energy')
            if abs(self.kinetic_energy / energy - 1) > 5e-3:
                raise ConfigurationError(
                    'Wavelength %.4g m implies a kinetic energy of %.5g J, '
                    'inconsistent with the configured %.5g J.'
                    % (self.lambda_dB, self.kinetic_energy, energy)
                )

    @property
    def k0(self):
        """Central angular wavenumber along x (rad/m)."""
        return wavenumber(self.lambda_dB)

    @property
    def kinetic_energy(self):
        """Kinetic energy of the central plane wave (J)."""
        return energy_from_wavelength(self.lambda_dB)

    @property
    def velocity(self):
        """Group velocity of the packet (m/s)."""
        return velocity_from_wavelength(self.lambda_dB)

    def width_at(self, time):
        """Return the amplitude width along x of the free packet at `time`."""
        spread = PHYSICAL.hbar * time / (PHYSICAL.m_e * self.sigma_x ** 2)
        return self.sigma_x * np.sqrt(1 + spread ** 2)


class SpinorField:
    """Spinor wave function (psi_up, psi_dn) sampled on a Grid2D.

    Instances are treated as immutable values: component arrays are
    flagged read-only and every operation returns a new instance.
    """

    def __init__(self, grid, psi_up, psi_dn):
        """Instantiate the spinor field.

        grid   : Grid2D on which the components are sampled
        psi_up : 2-D complex array of the spin-up component (1/m)
        psi_dn : 2-D complex array of the spin-down component (1/m)
        """
        check_type_validity(grid, Grid2D, 'grid')
        check_field_shape(psi_up, grid, 'psi_up')
        check_field_shape(psi_dn, grid, 'psi_dn')
        self.grid = grid
        self.psi_up = np.asarray(psi_up, dtype=complex)
        self.psi_dn = np.asarray(psi_dn, dtype=complex)
        self.psi_up.flags.writeable = False
        self.psi_dn.flags.writeable = False

    def with_components(self, psi_up, psi_dn):
        """Return a new SpinorField on the same grid."""
        return SpinorField(self.grid, psi_up, psi_dn)

    def density(self):
        """Return the total probability density |psi_up|^2 + |psi_dn|^2."""
        return np.abs(self.psi_up) ** 2 + np.abs(self.psi_dn) ** 2

    def populations(self):
        """Return the (P_up, P_dn) spin populations."""
        return populations(self)

    def norm(self):
        """Return the total norm, as the sum of both populations."""
        return sum(populations(self))

    def is_finite(self):
        """Return whether both components only hold finite values."""
        return bool(
            np.isfinite(self.psi_up).all() and np.isfinite(self.psi_dn).all()
        )


def populations(state):
    """Return the (P_up, P_dn) spin populations of a spinor field.

    Populations are the midpoint quadratures of |psi_s|^2 over the
    periodic domain, so that their sum is the total norm.
    """
    area = state.grid.cell_area
    p_up = float(np.sum(np.abs(state.psi_up) ** 2) * area)
    p_dn = float(np.sum(np.abs(state.psi_dn) ** 2) * area)
    return p_up, p_dn


def init_gaussian_spinor(grid, spec):
    """Return a normalized Gaussian spinor wave packet.

    grid : Grid2D on which to sample the packet
    spec : PacketSpec describing the packet

    The packet is psi(x, y) = N . exp[-(x-x0)^2/2sx^2 - (y-y0)^2/2sy^2]
    . exp[i.k0.(x-x0)] . (alpha0, beta0), with N set by quadrature.
    """
    check_type_validity(grid, Grid2D, 'grid')
    check_type_validity(spec, PacketSpec, 'spec')
    # Check that the packet lies well inside the grid.
    margins = (
        spec.x0c - 4 * spec.sigma_x - grid.x[0],
        grid.x_max - spec.x0c - 4 * spec.sigma_x,
        spec.y0c - 4 * spec.sigma_y - grid.y[0],
        grid.y_max - spec.y0c - 4 * spec.sigma_y,
    )
    if min(margins) < 0:
        raise GeometryError(
            'Packet centered at (%.4g, %.4g) lies less than 4 sigma from '
            'the grid boundary.' % (spec.x0c, spec.y0c)
        )
    # Build the separable envelope with its analytic normalization.
    shift_x = grid.x - spec.x0c
    shift_y = grid.y - spec.y0c
    along_x = (
        np.exp(-shift_x ** 2 / (2 * spec.sigma_x ** 2))
        * np.exp(1j * spec.k0 * shift_x)
    )
    along_y = np.exp(-shift_y ** 2 / (2 * spec.sigma_y ** 2))
    spatial = np.outer(along_x, along_y) / np.sqrt(
        np.pi * spec.sigma_x * spec.sigma_y
    )
    # Detect clipping, then renormalize by quadrature.
    norm = np.sum(np.abs(spatial) ** 2) * grid.cell_area
    if 1 - norm > 1e-6:
        raise GeometryError(
            'Packet clipped by the grid boundary: norm deficit %.3g.'
            % (1 - norm)
        )
    spatial /= np.sqrt(norm)
    return SpinorField(grid, spec.alpha0 * spatial, spec.beta0 * spatial)


def spectral_centroid(state, axis):
    """Return the density-weighted mean wavenumber along an axis (rad/m).

    state : SpinorField whose spectrum to analyze
    axis  : 0 for k_x, 1 for k_y
    """
    wavenumbers = state.grid.kx if axis == 0 else state.grid.ky
    power = sum(
        np.sum(
            np.abs(scipy.fft.fft(psi, axis=axis, workers=get_workers())) ** 2,
            axis=1 - axis
        )
        for psi in (state.psi_up, state.psi_dn)
    )
    return float(np.sum(wavenumbers * power) / np.sum(power))


def packet_width(state, axis):
    """Return the amplitude width of a state's density along an axis.

    The width is sqrt(2) times the standard deviation of the
    marginal density, which equals sigma for a Gaussian amplitude
    exp[-u^2 / 2.sigma^2].
    """
    coords = state.grid.x if axis == 0 else state.grid.y
    marginal = np.sum(state.density(), axis=1 - axis)
    mean = np.sum(coords * marginal) / np.sum(marginal)
    variance = np.sum((coords - mean) ** 2 * marginal) / np.sum(marginal)
    return float(np.sqrt(2 * variance))
