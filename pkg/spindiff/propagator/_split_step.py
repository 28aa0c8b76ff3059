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

"""Strang split-step Fourier propagation of the Pauli spinor.

A step applies half of the local generator (scalar potential, Zeeman
rotation, minimal coupling), the exact kinetic propagator in Fourier
space, the second half of the local generator in reverse order, then
the absorbing mask.
"""

import math

import numpy as np

from spindiff.core import PHYSICAL, SpinorField, check_same_grid
from spindiff.internal.spectral import centered_difference, fft2, ifft2
from spindiff.potentials import ScatteringScene
from spindiff.propagator._fields import FieldStack
from spindiff.propagator._plan import StepPlan, check_time_step
from spindiff.selffield import (
    SelfFieldSolution, current_density, solve_vector_potential
)
from spindiff.utils import NumericalError, check_type_validity


# Truncation level of the exponential of the A.p generator.
TAYLOR_TOLERANCE = 1e-16
TAYLOR_MAX_ORDER = 12


def kinetic_phase(grid, dt):
    """Return the exact kinetic propagator exp(-i.hbar.dt.k^2 / 2m)."""
    return np.exp(
        -1j * PHYSICAL.hbar * dt * grid.k_squared / (2 * PHYSICAL.m_e)
    )


def zeeman_rotation(psi_up, psi_dn, field, duration):
    """Apply exp(-i.H_Z.t/hbar), H_Z = -(g.mu_B/2).sigma.B, cell by cell.

    psi_up, psi_dn : component arrays of the spinor
    field          : (Bx, By, Bz) components, scalars or arrays (T)
    duration       : propagation time t (s)
    """
    # Energy vector b such that H_Z = b.sigma.
    scale = -PHYSICAL.g_factor * PHYSICAL.mu_B / 2
    b_x, b_y, b_z = (scale * np.asarray(value) for value in field)
    magnitude = np.sqrt(b_x ** 2 + b_y ** 2 + b_z ** 2)
    angle = magnitude * duration / PHYSICAL.hbar
    cosine = np.cos(angle)
    # sin(angle) / |b| . t/hbar, without dividing by zero
    factor = np.sinc(angle / np.pi) * duration / PHYSICAL.hbar
    s_x, s_y, s_z = factor * b_x, factor * b_y, factor * b_z
    new_up = (cosine - 1j * s_z) * psi_up - 1j * (s_x - 1j * s_y) * psi_dn
    new_dn = -1j * (s_x + 1j * s_y) * psi_up + (cosine + 1j * s_z) * psi_dn
    return new_up, new_dn


def _apply_transport(psi, a_x, a_y, grid, coefficient):
    """Return coefficient . (1/2)(A.grad psi + div(A.psi))."""
    result = 0.
    for axis, spacing, comp in ((0, grid.dx, a_x), (1, grid.dy, a_y)):
        if np.any(comp != 0):
            result = result + .5 * (
                comp * centered_difference(psi, spacing, axis)
                + centered_difference(comp * psi, spacing, axis)
            )
    return coefficient * result


def minimal_coupling_step(psi, vector_potential, grid, duration):
    """Apply exp(-i.(e/m).A.p.t/hbar) through a truncated Taylor series.

    The symmetrized centered-difference operator (A.grad + grad.A)/2
    is antisymmetric, the series being summed until the bound of its
    next term falls below TAYLOR_TOLERANCE.
    """
    a_x, a_y = vector_potential
    coefficient = -PHYSICAL.e * duration / PHYSICAL.m_e
    bound = abs(coefficient) * (
        np.max(np.abs(a_x)) / grid.dx + np.max(np.abs(a_y)) / grid.dy
    )
    result = psi
    term = psi
    for order in range(1, TAYLOR_MAX_ORDER + 1):
        term = _apply_transport(term, a_x, a_y, grid, coefficient) / order
        result = result + term
        if bound ** (order + 1) / math.factorial(order + 1) < TAYLOR_TOLERANCE:
            break
    return result


class SplitStepPropagator:
    """Strang split-step propagator caching the static phase factors.

    scene  : ScatteringScene providing the scalar potential and mask
    plan   : StepPlan holding the time step and coupling settings
    fields : FieldStack of external fields (default: field-free)

    When the plan enables the self-field, the field built from the
    pre-step state drives the step (the coupling lags the state by one
    step); `self_field` holds the field of the last step taken, and is
    zero before the first one.
    """

    def __init__(
            self, scene, plan, fields=None, check_stability=True, energy=0.
        ):
        check_type_validity(scene, ScatteringScene, 'scene')
        check_type_validity(plan, StepPlan, 'plan')
        if fields is None:
            fields = FieldStack(scene.grid, terms=plan.h2_terms)
        check_type_validity(fields, FieldStack, 'fields')
        check_same_grid(scene.grid, fields.grid)
        if check_stability:
            check_time_step(plan, scene, fields, energy)
        self.scene = scene
        self.plan = plan
        self.fields = fields
        self.grid = scene.grid
        self.kinetic = kinetic_phase(self.grid, plan.dt)
        self.scalar_phase = np.exp(
            -1j * scene.potential * plan.dt / (2 * PHYSICAL.hbar)
        )
        self.self_field = SelfFieldSolution.zeros(self.grid)

    def current_fields(self):
        """Return the FieldStack holding the current self-field."""
        if self.plan.self_field_enabled:
            return self.fields.with_self_field(self.self_field)
        return self.fields

    def build_self_field(self, state):
        """Return the self-field sourced by a state."""
        current = current_density(
            state, self.fields.total_vector_potential(),
            self.plan.current_terms
        )
        solution = solve_vector_potential(current, self.plan.bz_derivative)
        if not np.isfinite(solution.peak_bz()):
            raise NumericalError('Non-finite self-field.')
        return solution

    def potential_half(self, psi_up, psi_dn, fields, reverse=False):
        """Apply the local generator over dt/2 to component arrays."""
        half = self.plan.dt / 2
        operations = [
            self._scalar_operation(fields),
            self._zeeman_operation(fields, half),
            self._transport_operation(fields, half),
        ]
        for operation in (operations[::-1] if reverse else operations):
            if operation is not None:
                psi_up, psi_dn = operation(psi_up, psi_dn)
        return psi_up, psi_dn

    def _scalar_operation(self, fields):
        """Return the scalar phase operation (potential and A^2)."""
        phase = self.scalar_phase
        squared = fields.vector_potential_squared()
        if squared is not None:
            energy = PHYSICAL.e ** 2 * squared / (2 * PHYSICAL.m_e)
            phase = phase * np.exp(
                -1j * energy * self.plan.dt / (2 * PHYSICAL.hbar)
            )
        return lambda up, dn: (phase * up, phase * dn)

    @staticmethod
    def _zeeman_operation(fields, duration):
        """Return the Zeeman rotation operation, or None."""
        if not fields.has_zeeman():
            return None
        field = fields.zeeman_field()
        return lambda up, dn: zeeman_rotation(up, dn, field, duration)

    def _transport_operation(self, fields, duration):
        """Return the A.p cross-term operation, or None."""
        potential = fields.minimal_coupling()
        if potential is None:
            return None
        return lambda up, dn: (
            minimal_coupling_step(up, potential, self.grid, duration),
            minimal_coupling_step(dn, potential, self.grid, duration)
        )

    def kinetic_step(self, psi_up, psi_dn):
        """Apply the exact kinetic propagator over dt."""
        return (
            ifft2(fft2(psi_up) * self.kinetic),
            ifft2(fft2(psi_dn) * self.kinetic)
        )

    def step(self, state):
        """Return the state propagated over one time step."""
        if self.plan.self_field_enabled:
            self.self_field = self.build_self_field(state)
        fields = self.current_fields()
        psi_up, psi_dn = self.potential_half(
            state.psi_up, state.psi_dn, fields
        )
        psi_up, psi_dn = self.kinetic_step(psi_up, psi_dn)
        psi_up, psi_dn = self.potential_half(
            psi_up, psi_dn, fields, reverse=True
        )
        if self.scene.mask is not None:
            psi_up = psi_up * self.scene.mask
            psi_dn = psi_dn * self.scene.mask
        return state.with_components(psi_up, psi_dn)


def kinetic_half_spectrum(state, dt):
    """Return a state propagated by the free kinetic operator over dt.

    Each component is multiplied in Fourier space by the exact
    phase exp(-i.hbar.dt.(kx^2 + ky^2) / 2m).
    """
    check_type_validity(state, SpinorField, 'state')
    if dt == 0:
        return state
    phase = kinetic_phase(state.grid, dt)
    return state.with_components(
        ifft2(fft2(state.psi_up) * phase), ifft2(fft2(state.psi_dn) * phase)
    )


def potential_half_step(state, scene, fields, dt, self_field=False):
    """Return a state propagated by the local generator over dt / 2.

    state      : SpinorField to propagate
    scene      : ScatteringScene holding the scalar potential
    fields     : FieldStack of the fields acting on the spinor
    dt         : full time step (s); half of it is applied
    self_field : whether to add the self-field sourced by `state`
    """
    check_type_validity(state, SpinorField, 'state')
    plan = StepPlan(
        dt, 1, self_field_enabled=self_field, h2_terms=fields.terms
    )
    propagator = SplitStepPropagator(
        scene, plan, fields, check_stability=False
    )
    check_same_grid(state.grid, scene.grid)
    if self_field:
        fields = fields.with_self_field(propagator.build_self_field(state))
    psi_up, psi_dn = propagator.potential_half(
        state.psi_up, state.psi_dn, fields
    )
    if not (np.isfinite(psi_up).all() and np.isfinite(psi_dn).all()):
        raise NumericalError(
            'Non-finite values after the potential half-step.'
        )
    return state.with_components(psi_up, psi_dn)


def strang_step(state, scene, fields, dt, self_field=False):
    """Return a state propagated over one Strang step (mask included).

    When `self_field` is True, the self-field sourced by `state` is
    added to the fields for the duration of the step.
    """
    check_type_validity(state, SpinorField, 'state')
    check_same_grid(state.grid, scene.grid)
    plan = StepPlan(
        dt, 1, self_field_enabled=self_field, h2_terms=fields.terms
    )
    propagator = SplitStepPropagator(
        scene, plan, fields, check_stability=False
    )
    return propagator.step(state)
