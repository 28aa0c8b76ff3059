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

"""Far-field screen profiles, sigma_y readout and fringe measurement.

Once the packet has cleared the grating, the transverse momentum
distribution maps onto the screen through y_scr = hbar.k_y.T_scr / m
(paraxial ballistic drift over L_GS at velocity v_x).
"""

import numpy as np
import pandas as pd
import scipy.fft
import scipy.signal

from spindiff.analysis._formulas import screen_time
from spindiff.core import PHYSICAL, SpinorField
from spindiff.internal.spectral import get_workers
from spindiff.utils import (
    GeometryError, check_positive_int, check_type_validity
)


PROFILE_COLUMNS = ['y_scr_m', 'I_up', 'I_dn', 'I_py', 'I_ny']


class TransverseSpinor:
    """Transverse cut of a spinor field, as rows of y samples.

    y      : transverse axis (m), uniformly spaced
    psi_up : (n_rows, n_y) array of spin-up amplitudes
    psi_dn : (n_rows, n_y) array of spin-down amplitudes
    weight : quadrature weight of each row (dx for a 2-D block,
             1 for a single plane)
    x      : longitudinal position of each row (m)
    """

    def __init__(self, y, psi_up, psi_dn, weight=1., x=None):
        self.y = np.asarray(y, dtype=float)
        self.psi_up = np.atleast_2d(np.asarray(psi_up, dtype=complex))
        self.psi_dn = np.atleast_2d(np.asarray(psi_dn, dtype=complex))
        if self.psi_up.shape != self.psi_dn.shape:
            raise GeometryError('Spinor components differ in shape.')
        if self.psi_up.shape[1] != len(self.y):
            raise GeometryError(
                'Transverse amplitudes hold %i samples, the axis %i.'
                % (self.psi_up.shape[1], len(self.y))
            )
        self.weight = float(weight)
        self.x = None if x is None else np.atleast_1d(x).astype(float)

    @property
    def dy(self):
        """Transverse spacing (m)."""
        return float(self.y[1] - self.y[0])

    @property
    def n_rows(self):
        """Number of rows of the cut."""
        return self.psi_up.shape[0]

    def norm(self):
        """Return the norm carried by the cut."""
        density = np.abs(self.psi_up) ** 2 + np.abs(self.psi_dn) ** 2
        return float(np.sum(density) * self.dy * self.weight)


def transverse_slice(state, scene=None, plane=None):
    """Return the transverse cut of a state used for far-field analysis.

    state : SpinorField to cut
    scene : ScatteringScene; without `plane`, the cut is the block of
            all columns lying beyond the grating slab
    plane : optional x coordinate (m) of a single plane to cut at
    """
    check_type_validity(state, SpinorField, 'state')
    grid = state.grid
    if plane is not None:
        index = min(grid.column_index(plane), grid.nx - 1)
        return TransverseSpinor(
            grid.y, state.psi_up[index], state.psi_dn[index],
            x=grid.x[index]
        )
    if scene is None:
        raise TypeError("Either 'scene' or 'plane' must be provided.")
    columns = scene.downstream_columns()
    return TransverseSpinor(
        grid.y, state.psi_up[columns], state.psi_dn[columns],
        weight=grid.dx, x=grid.x[columns]
    )


def sigma_y_projection(amplitude_up, amplitude_dn, scale=1.):
    """Return the (I_+y, I_-y) intensities of spinor amplitudes.

    The projections are the inner products with the sigma_y
    eigenstates (1, +-i)/sqrt(2), i.e. (psi_up -+ i.psi_dn)/sqrt(2),
    so that I_+y + I_-y = |psi_up|^2 + |psi_dn|^2.
    """
    amplitude_up = np.asarray(amplitude_up)
    amplitude_dn = np.asarray(amplitude_dn)
    plus = (amplitude_up - 1j * amplitude_dn) / np.sqrt(2)
    minus = (amplitude_up + 1j * amplitude_dn) / np.sqrt(2)
    return scale * np.abs(plus) ** 2, scale * np.abs(minus) ** 2


class FarFieldProfile:
    """Screen intensity profiles of both spin channels.

    y_scr      : screen axis (m), increasing
    ky         : transverse wavenumbers mapped onto y_scr (rad/m)
    i_up, i_dn : spin-z channel intensities (1/m)
    i_py, i_ny : sigma_y channel intensities (1/m)
    t_scr      : drift time to the screen (s)
    l_gs       : grating-to-screen distance (m)
    """

    def __init__(self, y_scr, ky, i_up, i_dn, i_py, i_ny, t_scr, l_gs):
        self.y_scr = y_scr
        self.ky = ky
        self.i_up = i_up
        self.i_dn = i_dn
        self.i_py = i_py
        self.i_ny = i_ny
        self.t_scr = t_scr
        self.l_gs = l_gs

    @property
    def spacing(self):
        """Screen sampling step (m)."""
        return float(self.y_scr[1] - self.y_scr[0])

    def total(self):
        """Return the spin-summed intensity."""
        return self.i_up + self.i_dn

    def integral(self, channel='total'):
        """Return the screen integral of a channel's intensity."""
        values = self.channel(channel)
        return float(np.sum(values) * self.spacing)

    def channel(self, name):
        """Return the intensity of a channel: up, dn, +y, -y or total."""
        channels = {
            'up': self.i_up, 'dn': self.i_dn, '+y': self.i_py,
            '-y': self.i_ny, 'total': self.total()
        }
        if name not in channels:
            raise KeyError(
                "Unknown channel '%s'; expected one of %s."
                % (name, list(channels))
            )
        return channels[name]

    def channel_fractions(self):
        """Return the (up, dn) fractions of the screen intensity."""
        total = self.integral('total')
        return self.integral('up') / total, self.integral('dn') / total

    def to_frame(self):
        """Return the profile as a pandas.DataFrame."""
        return pd.DataFrame(
            np.column_stack(
                [self.y_scr, self.i_up, self.i_dn, self.i_py, self.i_ny]
            ),
            columns=PROFILE_COLUMNS
        )


def far_field(state_slice, l_gs, v_x, pad_factor=1):
    """Return the screen profile of a transverse cut.

    state_slice : TransverseSpinor (see `transverse_slice`)
    l_gs        : grating-to-screen distance (m)
    v_x         : longitudinal velocity of the beam (m/s)
    pad_factor  : zero-padding factor of the transverse transform,
                  refining the screen sampling (default 1)

    Each row is transformed as psi(k) = dy/sqrt(2.pi) . sum_j
    psi(y_j).exp(-i.k.y_j); rows add incoherently with their weight.
    Intensities are (m / hbar.T_scr).|psi(k)|^2, so that their screen
    integral equals the norm of the cut.
    """
    check_type_validity(state_slice, TransverseSpinor, 'state_slice')
    check_positive_int(pad_factor, 'pad_factor')
    t_scr = screen_time(l_gs, v_x)
    n_points = len(state_slice.y) * pad_factor
    spacing = state_slice.dy
    ky = 2 * np.pi * scipy.fft.fftshift(scipy.fft.fftfreq(n_points, spacing))
    phase = spacing / np.sqrt(2 * np.pi) * np.exp(-1j * ky * state_slice.y[0])

    def transform(psi):
        spectrum = scipy.fft.fft(
            psi, n=n_points, axis=1, workers=get_workers()
        )
        return scipy.fft.fftshift(spectrum, axes=1) * phase

    amplitude_up = transform(state_slice.psi_up)
    amplitude_dn = transform(state_slice.psi_dn)
    scale = PHYSICAL.m_e / (PHYSICAL.hbar * t_scr) * state_slice.weight
    i_py, i_ny = sigma_y_projection(amplitude_up, amplitude_dn, scale)
    return FarFieldProfile(
        y_scr=PHYSICAL.hbar * ky * t_scr / PHYSICAL.m_e, ky=ky,
        i_up=scale * np.sum(np.abs(amplitude_up) ** 2, axis=0),
        i_dn=scale * np.sum(np.abs(amplitude_dn) ** 2, axis=0),
        i_py=np.sum(i_py, axis=0), i_ny=np.sum(i_ny, axis=0),
        t_scr=t_scr, l_gs=float(l_gs)
    )


def flip_probability(intensity_a, intensity_b):
    """Return the share of the total intensity held by the second channel.

    P = sum(I_b) / sum(I_a + I_b), e.g. P(+y -> -y) from (I_+y, I_-y).
    """
    intensity_a = np.asarray(intensity_a, dtype=float)
    intensity_b = np.asarray(intensity_b, dtype=float)
    if np.any(intensity_a < 0) or np.any(intensity_b < 0):
        raise ValueError('Intensities must be nonnegative.')
    total = np.sum(intensity_a) + np.sum(intensity_b)
    if total == 0:
        raise ValueError('Flip probability of a zero total intensity.')
    return float(np.sum(intensity_b) / total)


def spin_filter_readout(profile, y_split=0.):
    """Return the channel fractions on both sides of a screen position.

    profile : FarFieldProfile after the B1 rotation and B2 imprint
    y_split : screen coordinate separating the two spots (m)

    Returns a dict with the fractions of the total intensity found
    below and above `y_split`, and the fraction of each spin channel
    found below it.
    """
    total = profile.integral('total')
    lower = profile.y_scr < y_split
    intensity = profile.total() * profile.spacing / total
    readout = {
        'lower': float(np.sum(intensity[lower])),
        'upper': float(np.sum(intensity[~lower])),
    }
    for name in ('up', 'dn'):
        values = profile.channel(name)
        mass = np.sum(values)
        readout['%s_lower' % name] = (
            float(np.sum(values[lower]) / mass) if mass else np.nan
        )
    return readout


def _refine_peak(values, index):
    """Return the sub-sample offset of a peak from a parabolic fit."""
    if index == 0 or index == len(values) - 1:
        return 0.
    left, centre, right = values[index - 1:index + 2]
    curvature = left - 2 * centre + right
    if curvature == 0:
        return 0.
    return .5 * (left - right) / curvature


def fringe_width(profile, channel='total', prominence=.1):
    """Return the median spacing between principal far-field maxima (m).

    profile    : FarFieldProfile to analyze
    channel    : intensity channel to use (default 'total')
    prominence : peak prominence threshold, relative to the global
                 maximum (default .1)

    Peak positions are refined to sub-sample accuracy by a parabolic
    fit over their three nearest samples.
    """
    values = profile.channel(channel)
    peaks, _ = scipy.signal.find_peaks(
        values, prominence=prominence * np.max(values)
    )
    if len(peaks) < 3:
        raise ValueError(
            'Fringe width requires at least 3 maxima; found %i.' % len(peaks)
        )
    positions = np.array([
        profile.y_scr[index] + _refine_peak(values, index) * profile.spacing
        for index in peaks
    ])
    return float(np.median(np.diff(np.sort(positions))))
