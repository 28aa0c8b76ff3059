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

"""Magnetic control stages: upstream B1 rotation and downstream B2 kick.

Laboratory stage lengths cannot be gridded, so both stages are applied
analytically by default. The 'grid_resolved' mode integrates the same
fields with the split-step propagator, for short lengths only.
"""

import logging

import numpy as np

from spindiff.analysis import larmor_angle, zeeman_wavenumber
from spindiff.core import SpinorField, packet_width
from spindiff.potentials import ScatteringScene
from spindiff.propagator._evolve import evolve
from spindiff.propagator._fields import FieldStack
from spindiff.propagator._plan import StepPlan
from spindiff.utils import (
    ConfigurationError, check_positive_float, check_type_validity
)


STAGE_KINDS = ('b1_uniform', 'b2_gradient', 'free')
STAGE_MODES = ('analytic', 'grid_resolved')

LOGGER = logging.getLogger(__name__)


class FieldStage:
    """Magnetic stage crossed by the beam.

    kind     : 'b1_uniform', 'b2_gradient' or 'free'
    b1       : uniform field B1 along x (T)
    l_b1     : length of the B1 stage (m)
    g2       : field gradient G2 (T/m)
    l_b2     : length of the B2 stage (m)
    mode     : 'analytic' or 'grid_resolved'
    h2_terms : coupling-term flags of grid-resolved B2 runs
    y_ref    : y coordinate where the B2 field vanishes (m)
    """

    def __init__(
            self, kind, b1=0., l_b1=0., g2=0., l_b2=0., mode='analytic',
            h2_terms=None, y_ref=0.
        ):
        if kind not in STAGE_KINDS:
            raise ConfigurationError(
                "Invalid stage kind '%s'; expected one of %s."
                % (kind, STAGE_KINDS)
            )
        if mode not in STAGE_MODES:
            raise ConfigurationError(
                "Invalid stage mode '%s'; expected one of %s."
                % (mode, STAGE_MODES)
            )
        check_positive_float(l_b1, 'l_b1', allow_zero=True)
        check_positive_float(l_b2, 'l_b2', allow_zero=True)
        self.kind = kind
        self.b1 = float(b1)
        self.l_b1 = float(l_b1)
        self.g2 = float(g2)
        self.l_b2 = float(l_b2)
        self.mode = mode
        self.h2_terms = h2_terms
        self.y_ref = float(y_ref)

    @property
    def length(self):
        """Length of the stage along the beam (m)."""
        return {'b1_uniform': self.l_b1, 'b2_gradient': self.l_b2}.get(
            self.kind, 0.
        )

    def apply(self, state, v_x, dt=None):
        """Return the state having crossed the stage.

        state : SpinorField entering the stage
        v_x   : beam velocity (m/s)
        dt    : time step of grid-resolved runs (s)
        """
        if self.kind == 'free' or self.length == 0:
            return state
        if self.mode == 'analytic':
            if self.kind == 'b1_uniform':
                return apply_b1_rotation(state, self.b1, self.l_b1, v_x)
            return apply_b2_phase(state, self.g2, self.l_b2, v_x, self.y_ref)
        if dt is None:
            raise ConfigurationError(
                'Grid-resolved stages require a time step.'
            )
        if self.kind == 'b1_uniform':
            fields = FieldStack.uniform(state.grid, self.b1)
        else:
            fields = FieldStack.gradient(
                state.grid, self.g2, self.y_ref, self.h2_terms
            )
        return run_resolved_stage(state, fields, self.length, v_x, dt)


def apply_b1_rotation(state, b_1, l_b1, v_x):
    """Return the spinor rotated by the uniform B1 stage.

    U = exp(i.(g.mu_B.B1.T / 2.hbar).sigma_x), T = l_b1 / v_x; the
    spatial wave function is left untouched.
    """
    check_type_validity(state, SpinorField, 'state')
    angle = larmor_angle(b_1, l_b1, v_x)
    cosine, sine = np.cos(angle), np.sin(angle)
    return state.with_components(
        cosine * state.psi_up + 1j * sine * state.psi_dn,
        1j * sine * state.psi_up + cosine * state.psi_dn
    )


def apply_b2_phase(state, g_2, l_b2, v_x, y_ref=0.):
    """Return the spinor after the position-dependent Zeeman phase.

    psi_up is multiplied by exp(i.phi(y)) and psi_dn by exp(-i.phi(y)),
    with phi(y) = -alpha.(y - y_ref) (see zeeman_wavenumber).
    """
    check_type_validity(state, SpinorField, 'state')
    alpha = zeeman_wavenumber(g_2, l_b2, v_x)
    if alpha == 0:
        return state
    phase = np.exp(-1j * alpha * (state.grid.y - y_ref))[None, :]
    return state.with_components(
        state.psi_up * phase, state.psi_dn * np.conj(phase)
    )


def run_resolved_stage(state, fields, length, v_x, dt):
    """Integrate a stage field on the grid over the stage's transit time.

    The number of steps is rounded up and the time step shrunk so
    that they exactly cover length / v_x. The packet must remain
    at least four widths away from the downstream boundary.
    """
    grid = state.grid
    duration = length / v_x
    density = np.sum(state.density(), axis=1)
    centroid = np.sum(grid.x * density) / np.sum(density)
    room = grid.x_max - centroid - 4 * packet_width(state, 0)
    if length > room:
        raise ConfigurationError(
            'Stage length %.4g m does not fit the grid (%.4g m available).'
            % (length, room)
        )
    n_steps = max(1, int(np.ceil(duration / dt)))
    plan = StepPlan(duration / n_steps, n_steps, h2_terms=fields.terms)
    LOGGER.info('Grid-resolved stage: %i steps of %.4g s.', n_steps, plan.dt)
    scene = ScatteringScene(grid)
    return evolve(state, scene, plan, fields, check_stability=False).state
