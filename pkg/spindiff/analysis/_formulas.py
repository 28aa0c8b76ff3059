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

"""Closed-form formulas of the magnetic stages and far-field geometry.

The g-factor is stored signed; every magnitude below uses |g|, the
sign only setting the sense of precession.
"""

import numpy as np

from spindiff.core import PHYSICAL
from spindiff.utils import check_positive_float


def b_pi(l_b1, lambda_dB, v_x=None):
    """Return the field B_pi (T) rotating the spin by pi over the B1 stage.

    l_b1      : length of the B1 stage (m)
    lambda_dB : de Broglie wavelength of the electron (m)
    v_x       : optional beam velocity (m/s), h / (m.lambda_dB) if None

    B_pi = pi.hbar.v_x / (|g|.mu_B.L_B1), that is
    4.pi^2.hbar / (|g|.e.L_B1.lambda_dB) at the wavelength's velocity.
    """
    check_positive_float(l_b1, 'l_b1')
    check_positive_float(lambda_dB, 'lambda_dB')
    if v_x is not None:
        check_positive_float(v_x, 'v_x')
        return np.pi * PHYSICAL.hbar * v_x / (
            abs(PHYSICAL.g_factor) * PHYSICAL.mu_B * l_b1
        )
    return 4 * np.pi ** 2 * PHYSICAL.hbar / (
        abs(PHYSICAL.g_factor) * PHYSICAL.e * l_b1 * lambda_dB
    )


def chi(b_1, b_pi_value):
    """Return the field ratio chi = B1 / B_pi."""
    check_positive_float(b_pi_value, 'b_pi_value')
    return b_1 / b_pi_value


def flip_probability_analytic(chi_value):
    """Return the spin-flip probability sin^2(pi.chi / 2) of the B1 stage."""
    return np.sin(np.pi * np.asarray(chi_value) / 2) ** 2


def larmor_angle(b_1, l_b1, v_x):
    """Return the signed half rotation angle g.mu_B.B1.T / (2.hbar).

    The B1 stage acts as exp(i.angle.sigma_x), T = l_b1 / v_x.
    """
    check_positive_float(v_x, 'v_x')
    check_positive_float(l_b1, 'l_b1', allow_zero=True)
    duration = l_b1 / v_x
    return (
        PHYSICAL.g_factor * PHYSICAL.mu_B * b_1 * duration
        / (2 * PHYSICAL.hbar)
    )


def zeeman_wavenumber(g_2, l_b2, v_x):
    """Return the transverse kick alpha (rad/m) of the B2 stage.

    alpha = (|g|.mu_B / 2.hbar).G2.T_B2, with T_B2 = l_b2 / v_x, signed
    as G2. The spin-up component acquires the phase -alpha.y, hence
    the momentum shift -alpha; the spin-down one acquires the opposite.
    """
    check_positive_float(v_x, 'v_x')
    check_positive_float(l_b2, 'l_b2', allow_zero=True)
    return (
        abs(PHYSICAL.g_factor) * PHYSICAL.mu_B / (2 * PHYSICAL.hbar)
        * g_2 * l_b2 / v_x
    )


def screen_time(l_gs, v_x):
    """Return the drift time T_scr = L_GS / v_x (s)."""
    check_positive_float(l_gs, 'l_gs')
    check_positive_float(v_x, 'v_x')
    return l_gs / v_x


def analytic_deflection(g_2, l_b2, v_x, l_gs):
    """Return the magnitude of the per-spin screen deflection (m).

    delta_y = (hbar.T_scr / m).|alpha|
    """
    alpha = zeeman_wavenumber(g_2, l_b2, v_x)
    return PHYSICAL.hbar * screen_time(l_gs, v_x) / PHYSICAL.m_e * abs(alpha)


def fringe_estimate(lambda_dB, l_gs, period):
    """Return the far-field fringe width gamma = lambda.L_GS / d (m)."""
    check_positive_float(lambda_dB, 'lambda_dB')
    check_positive_float(l_gs, 'l_gs')
    check_positive_float(period, 'period')
    return lambda_dB * l_gs / period
