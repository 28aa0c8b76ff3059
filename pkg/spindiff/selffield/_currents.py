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

"""Spin density and Pauli charge-current density of a spinor field."""

import collections

import numpy as np

from spindiff.core import (
    PHYSICAL, SpinorField, check_field_shape, check_same_grid
)
from spindiff.internal.spectral import centered_difference
from spindiff.utils import ConfigurationError, check_type_validity


CURRENT_TERMS = ('paramagnetic', 'diamagnetic', 'magnetization')


SpinDensityField = collections.namedtuple(
    'SpinDensityField', ['sx', 'sy', 'sz']
)
SpinDensityField.__doc__ = (
    "Local spin density S = Psi^dagger.sigma.Psi, as three real arrays."
)


class CurrentField:
    """2-D charge-current density (Jx, Jy), with its decomposition.

    grid  : Grid2D on which the current is sampled
    jx    : x component of the current density (SI)
    jy    : y component of the current density (SI)
    parts : dict associating (jx, jy) pairs to the names of the
            contributing terms (subset of CURRENT_TERMS)
    """

    def __init__(self, grid, jx, jy, parts=None):
        check_field_shape(jx, grid, 'jx')
        check_field_shape(jy, grid, 'jy')
        self.grid = grid
        self.jx = jx
        self.jy = jy
        self.parts = {} if parts is None else parts

    def part(self, name):
        """Return the (jx, jy) contribution of a given term."""
        if name not in self.parts:
            raise KeyError(
                "Current term '%s' was not computed; available: %s."
                % (name, list(self.parts))
            )
        return self.parts[name]

    def scaled(self, factor):
        """Return the current multiplied by a scalar factor."""
        return CurrentField(
            self.grid, factor * self.jx, factor * self.jy,
            {
                key: (factor * jx, factor * jy)
                for key, (jx, jy) in self.parts.items()
            }
        )

    def __add__(self, other):
        """Return the sum of two currents, term by term.

        The sum keeps a decomposition only when both currents carry
        one, terms present on one side only being kept as they are.
        """
        check_type_validity(other, CurrentField, 'other')
        check_same_grid(self.grid, other.grid)
        parts = {}
        if self.parts and other.parts:
            parts = dict(self.parts)
            for name, (jx, jy) in other.parts.items():
                if name in parts:
                    jx, jy = parts[name][0] + jx, parts[name][1] + jy
                parts[name] = (jx, jy)
        return CurrentField(
            self.grid, self.jx + other.jx, self.jy + other.jy, parts
        )


def spin_density(state):
    """Return the SpinDensityField of a spinor field.

    Sx = 2.Re(up* . dn), Sy = 2.Im(up* . dn), Sz = |up|^2 - |dn|^2
    """
    check_type_validity(state, SpinorField, 'state')
    product = np.conj(state.psi_up) * state.psi_dn
    return SpinDensityField(
        sx=2 * product.real, sy=2 * product.imag,
        sz=np.abs(state.psi_up) ** 2 - np.abs(state.psi_dn) ** 2
    )


def current_density(state, vector_potential=None, terms=CURRENT_TERMS):
    """Return the charge-current density of a spinor field.

    state            : SpinorField whose current to compute
    vector_potential : optional (Ax, Ay) pair of arrays or scalars
                       coupling through the diamagnetic term
                       (default None, meaning A = 0)
    terms            : names of the contributions to include
                       (default: all of CURRENT_TERMS)

    J = -e.[(hbar/m).sum_s Im(psi_s* grad psi_s) - (e/m).A.rho
            + (hbar/2m).(d_y Sz, -d_x Sz)]
    All derivatives are periodic centered finite differences.
    """
    check_type_validity(state, SpinorField, 'state')
    unknown = set(terms) - set(CURRENT_TERMS)
    if unknown:
        raise ConfigurationError(
            'Unknown current terms: %s.' % sorted(unknown)
        )
    grid = state.grid
    charge, hbar, mass = PHYSICAL.e, PHYSICAL.hbar, PHYSICAL.m_e
    parts = {}
    if 'paramagnetic' in terms:
        flux = [np.zeros(grid.shape), np.zeros(grid.shape)]
        for psi in (state.psi_up, state.psi_dn):
            for axis, spacing in ((0, grid.dx), (1, grid.dy)):
                gradient = centered_difference(psi, spacing, axis)
                flux[axis] += np.imag(np.conj(psi) * gradient)
        factor = -charge * hbar / mass
        parts['paramagnetic'] = (factor * flux[0], factor * flux[1])
    if 'diamagnetic' in terms:
        if vector_potential is None:
            zeros = np.zeros(grid.shape)
            parts['diamagnetic'] = (zeros, zeros.copy())
        else:
            a_x, a_y = vector_potential
            for name, value in (('Ax', a_x), ('Ay', a_y)):
                if np.ndim(value):
                    check_field_shape(value, grid, name)
            factor = charge ** 2 / mass * state.density()
            parts['diamagnetic'] = (
                factor * np.broadcast_to(a_x, grid.shape),
                factor * np.broadcast_to(a_y, grid.shape)
            )
    if 'magnetization' in terms:
        s_z = spin_density(state).sz
        factor = -charge * hbar / (2 * mass)
        parts['magnetization'] = (
            factor * centered_difference(s_z, grid.dy, 1),
            -factor * centered_difference(s_z, grid.dx, 0)
        )
    j_x = sum((part[0] for part in parts.values()), np.zeros(grid.shape))
    j_y = sum((part[1] for part in parts.values()), np.zeros(grid.shape))
    return CurrentField(grid, j_x, j_y, parts)
