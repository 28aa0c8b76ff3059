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

"""Physical constants and de Broglie relations of a free electron."""

import collections

import numpy as np
import scipy.constants

from spindiff.utils import check_positive_float


PhysicalConstants = collections.namedtuple(
    'PhysicalConstants',
    ['hbar', 'm_e', 'e', 'mu_B', 'g_factor', 'eps0', 'mu0']
)
PhysicalConstants.__doc__ = """SI constants used throughout spindiff.

hbar     : reduced Planck constant (J.s)
m_e      : electron mass (kg)
e        : elementary charge, positive (C)
mu_B     : Bohr magneton, e.hbar / (2.m_e) (J/T)
g_factor : signed electron g-factor (negative)
eps0     : vacuum permittivity (F/m)
mu0      : vacuum permeability (H/m)
"""


def build_constants():
    """Return a PhysicalConstants instance built from scipy CODATA values.

    The Bohr magneton is derived from the other constants rather
    than read from the CODATA table, so that the e.hbar/2m identity
    holds to machine precision.
    """
    hbar = scipy.constants.hbar
    m_e = scipy.constants.m_e
    charge = scipy.constants.e
    return PhysicalConstants(
        hbar=hbar, m_e=m_e, e=charge, mu_B=charge * hbar / (2 * m_e),
        g_factor=-2.00231930436256, eps0=scipy.constants.epsilon_0,
        mu0=scipy.constants.mu_0
    )


PHYSICAL = build_constants()


def wavenumber(lambda_dB):
    """Return the angular wavenumber 2.pi / lambda (rad/m)."""
    check_positive_float(lambda_dB, 'lambda_dB')
    return 2 * np.pi / lambda_dB


def velocity_from_wavelength(lambda_dB):
    """Return the electron group velocity h / (m.lambda) (m/s)."""
    return PHYSICAL.hbar * wavenumber(lambda_dB) / PHYSICAL.m_e


def energy_from_wavelength(lambda_dB):
    """Return the kinetic energy hbar^2.k^2 / 2m (J) of an electron."""
    return (PHYSICAL.hbar * wavenumber(lambda_dB)) ** 2 / (2 * PHYSICAL.m_e)


def wavelength_from_energy(energy):
    """Return the de Broglie wavelength (m) of an electron of energy (J)."""
    check_positive_float(energy, 'energy')
    momentum = np.sqrt(2 * PHYSICAL.m_e * energy)
    return 2 * np.pi * PHYSICAL.hbar / momentum
