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

"""Husimi Q phase-space maps of transverse spinor cuts.

Q_s(y0, k0) = (1/pi).|<phi_(y0,k0)|psi_s>|^2, with the Gaussian
window phi(y) = (1/pi.sigma^2)^(1/4).exp[-(y-y0)^2/2sigma^2 + i.k0.(y-y0)].
"""

import logging

import numpy as np
import scipy.fft

from spindiff.analysis._farfield import TransverseSpinor
from spindiff.internal.spectral import get_workers
from spindiff.utils import (
    check_positive_float, check_positive_int, check_type_validity
)


LOGGER = logging.getLogger(__name__)


class HusimiMap:
    """Husimi distributions of both spin channels.

    y0, ky0    : window positions (m) and wavenumbers (rad/m)
    q_up, q_dn : (len(y0), len(ky0)) nonnegative arrays
    sigma      : window width (m)
    """

    def __init__(self, y0, ky0, q_up, q_dn, sigma):
        self.y0 = np.asarray(y0, dtype=float)
        self.ky0 = np.asarray(ky0, dtype=float)
        self.q_up = q_up
        self.q_dn = q_dn
        self.sigma = float(sigma)

    def channel(self, name):
        """Return the map of a channel: 'up', 'dn' or 'total'."""
        if name == 'up':
            return self.q_up
        if name == 'dn':
            return self.q_dn
        if name == 'total':
            return self.q_up + self.q_dn
        raise KeyError("Unknown channel '%s'." % name)


def husimi(state_slice, window_sigma, y0_axis, ky0_axis, chunk=64):
    """Return the Husimi maps of a transverse cut.

    state_slice  : TransverseSpinor; multi-row cuts add incoherently
                   with their quadrature weight
    window_sigma : width of the Gaussian window (m)
    y0_axis      : window positions (m)
    ky0_axis     : window wavenumbers (rad/m)
    chunk        : number of window positions evaluated at once
    """
    check_type_validity(state_slice, TransverseSpinor, 'state_slice')
    check_positive_float(window_sigma, 'window_sigma')
    check_positive_int(chunk, 'chunk')
    y0_axis = np.atleast_1d(np.asarray(y0_axis, dtype=float))
    ky0_axis = np.atleast_1d(np.asarray(ky0_axis, dtype=float))
    y = state_slice.y
    norm = (np.pi * window_sigma ** 2) ** -.25 * state_slice.dy
    # The window phase exp(-i.k0.y0) leaves |overlap| unchanged.
    plane_waves = np.exp(-1j * np.outer(y, ky0_axis))
    maps = []
    for psi in (state_slice.psi_up, state_slice.psi_dn):
        values = np.zeros((len(y0_axis), len(ky0_axis)))
        for start in range(0, len(y0_axis), chunk):
            centres = y0_axis[start:start + chunk]
            window = norm * np.exp(
                -(y[None, :] - centres[:, None]) ** 2 / (2 * window_sigma ** 2)
            )
            for row in psi:
                overlap = (window * row[None, :]) @ plane_waves
                values[start:start + chunk] += np.abs(overlap) ** 2
        maps.append(values * state_slice.weight / np.pi)
    LOGGER.debug(
        'Husimi maps evaluated on %i x %i windows.',
        len(y0_axis), len(ky0_axis)
    )
    return HusimiMap(y0_axis, ky0_axis, maps[0], maps[1], window_sigma)


def default_husimi_axes(
        state_slice, period=None, coarsening=4, n_ky=256, orders=3,
        threshold=1e-6
    ):
    """Return default (y0, ky0) axes of a Husimi map.

    y0 spans the support of the cut's density with a spacing
    `coarsening` times that of the grid. ky0 spans the support of its
    transverse spectrum, widened by `orders` diffraction orders
    2.pi/period on each side when a grating period is given.
    Supports are where values exceed `threshold` times the maximum.
    """
    check_type_validity(state_slice, TransverseSpinor, 'state_slice')
    check_positive_int(coarsening, 'coarsening')
    check_positive_int(n_ky, 'n_ky')
    density = np.sum(
        np.abs(state_slice.psi_up) ** 2 + np.abs(state_slice.psi_dn) ** 2,
        axis=0
    )
    support = np.flatnonzero(density > threshold * np.max(density))
    y0_axis = state_slice.y[support[0]:support[-1] + 1:coarsening]
    wavenumbers = 2 * np.pi * scipy.fft.fftfreq(
        len(state_slice.y), state_slice.dy
    )
    power = sum(
        np.sum(
            np.abs(scipy.fft.fft(psi, axis=1, workers=get_workers())) ** 2,
            axis=0
        )
        for psi in (state_slice.psi_up, state_slice.psi_dn)
    )
    inside = wavenumbers[power > threshold * np.max(power)]
    margin = 0. if period is None else orders * 2 * np.pi / period
    ky0_axis = np.linspace(
        inside.min() - margin, inside.max() + margin, n_ky
    )
    return y0_axis, ky0_axis


def mean_ky(husimi_map, channel):
    """Return the Q-weighted mean wavenumber of a channel (rad/m)."""
    check_type_validity(husimi_map, HusimiMap, 'husimi_map')
    values = husimi_map.channel(channel)
    mass = np.sum(values)
    if mass <= 0:
        raise ValueError("Husimi channel '%s' holds no mass." % channel)
    return float(np.sum(values.sum(axis=0) * husimi_map.ky0) / mass)


def snapshot_plane(state, scene, sigma_x):
    """Return the x coordinate of the plane used for Husimi analysis.

    The plane lies two packet widths past the back face of the
    grating, or at the downstream density centroid if further.
    """
    grid = state.grid
    columns = scene.downstream_columns()
    marginal = np.sum(state.density(), axis=1)[columns]
    plane = scene.x_back + 2 * sigma_x
    if np.sum(marginal) > 0:
        centroid = np.sum(grid.x[columns] * marginal) / np.sum(marginal)
        plane = max(plane, centroid)
    return float(min(plane, grid.x[-1]))
