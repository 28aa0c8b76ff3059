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

"""Time evolution of a spinor through a scattering scene."""

import logging
import time

import numpy as np
import pandas as pd

from spindiff.core import SpinorField, check_same_grid
from spindiff.propagator._split_step import SplitStepPropagator
from spindiff.utils import NumericalError, check_type_validity


SERIES_COLUMNS = [
    'step', 'time', 'norm', 'p_up', 'p_dn', 'slab_norm',
    'downstream_norm', 'x_centroid', 'bz_peak'
]

LOGGER = logging.getLogger(__name__)


class EvolutionResult:
    """Outcome of `evolve`.

    state      : final SpinorField
    series     : pandas.DataFrame of observables (see SERIES_COLUMNS)
    self_field : SelfFieldSolution sourced by the final state, or None
    n_steps    : number of steps actually taken
    """

    def __init__(self, state, series, self_field=None, n_steps=0):
        self.state = state
        self.series = series
        self.self_field = self_field
        self.n_steps = n_steps

    @property
    def elapsed(self):
        """Physical time covered by the evolution (s)."""
        if self.series.empty:
            return 0.
        return float(self.series['time'].iloc[-1])


def observe(state, scene, step, dt):
    """Return a dict of observables of a state (without 'bz_peak')."""
    p_up, p_dn = state.populations()
    marginal = np.sum(state.density(), axis=1)
    total = np.sum(marginal)
    centroid = np.sum(state.grid.x * marginal) / total if total else np.nan
    return {
        'step': step, 'time': step * dt, 'norm': p_up + p_dn,
        'p_up': p_up, 'p_dn': p_dn, 'slab_norm': scene.slab_norm(state),
        'downstream_norm': scene.downstream_norm(state),
        'x_centroid': float(centroid), 'bz_peak': np.nan
    }


def evolve(
        state, scene, plan, fields=None, check_stability=True, energy=0.,
        callback=None, until=None
    ):
    """Propagate a spinor over the steps of a plan.

    state           : initial SpinorField
    scene           : ScatteringScene (potential, mask, geometry)
    plan            : StepPlan (time step, number of steps, couplings)
    fields          : optional FieldStack of external fields
    check_stability : whether to enforce the time-step guard
    energy          : packet kinetic energy for the guard (J)
    callback        : optional function (step, state, propagator)
                      called on every recorded state
    until           : optional function (state, scene) -> bool
                      ending the evolution early once True

    Each row of the returned series describes the state after a given
    number of steps; when the self-field is enabled, its 'bz_peak'
    holds the peak |Bz| of the field sourced by that very state.
    A NumericalError naming the step is raised on non-finite values.
    """
    check_type_validity(state, SpinorField, 'state')
    check_same_grid(state.grid, scene.grid)
    propagator = SplitStepPropagator(
        scene, plan, fields, check_stability, energy
    )
    records = []
    start = time.time()
    progress = max(1, plan.n_steps // 10)
    step = 0
    for step in range(plan.n_steps):
        record = None
        if step % plan.record_every == 0:
            record = observe(state, scene, step, plan.dt)
            records.append(record)
            LOGGER.debug(
                'Step %i: norm %.12f, slab norm %.3e.',
                step, record['norm'], record['slab_norm']
            )
            if callback is not None:
                callback(step, state, propagator)
        state = propagator.step(state)
        if not state.is_finite():
            raise NumericalError('Non-finite wave function.', step=step + 1)
        if record is not None and plan.self_field_enabled:
            record['bz_peak'] = propagator.self_field.peak_bz()
        if (step + 1) % progress == 0:
            LOGGER.info(
                'Step %i/%i: norm %.6f, %.1f s elapsed.',
                step + 1, plan.n_steps, state.norm(), time.time() - start
            )
        if until is not None and until(state, scene):
            LOGGER.info('Stopping criterion met after %i steps.', step + 1)
            break
    n_steps = step + 1 if plan.n_steps else 0
    # Final state.
    record = observe(state, scene, n_steps, plan.dt)
    final_field = None
    if plan.self_field_enabled:
        final_field = propagator.build_self_field(state)
        record['bz_peak'] = final_field.peak_bz()
    records.append(record)
    if callback is not None:
        callback(n_steps, state, propagator)
    series = pd.DataFrame(records, columns=SERIES_COLUMNS)
    return EvolutionResult(state, series, final_field, n_steps)
