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

"""Time-stepping plan and its stability guard."""

import numpy as np

from spindiff.core import PHYSICAL
from spindiff.potentials import opaque_threshold
from spindiff.propagator._fields import resolve_terms
from spindiff.selffield import BZ_DERIVATIVES, CURRENT_TERMS
from spindiff.utils import (
    ConfigurationError, check_positive_float, check_positive_int
)


class StepPlan:
    """Parameters of a time evolution.

    dt                 : time step (s)
    n_steps            : number of Strang steps (int, may be 0)
    self_field_enabled : whether to couple the spinor to its own field
    h2_terms           : dict of coupling-term flags (see H2_TERMS)
    record_every       : cadence (in steps) of the observables record
    current_terms      : current contributions sourcing the self-field
    bz_derivative      : 'spectral' or 'centered' derivative of A_self
    """

    def __init__(
            self, dt, n_steps, self_field_enabled=False, h2_terms=None,
            record_every=1, current_terms=CURRENT_TERMS,
            bz_derivative='spectral'
        ):
        check_positive_float(dt, 'dt')
        check_positive_int(n_steps, 'n_steps', allow_zero=True)
        check_positive_int(record_every, 'record_every')
        unknown = set(current_terms) - set(CURRENT_TERMS)
        if unknown:
            raise ConfigurationError(
                'Unknown current terms: %s.' % sorted(unknown)
            )
        if bz_derivative not in BZ_DERIVATIVES:
            raise ConfigurationError(
                "Invalid 'bz_derivative': '%s'." % bz_derivative
            )
        self.dt = float(dt)
        self.n_steps = int(n_steps)
        self.self_field_enabled = bool(self_field_enabled)
        self.h2_terms = resolve_terms(h2_terms)
        self.record_every = int(record_every)
        self.current_terms = tuple(current_terms)
        self.bz_derivative = bz_derivative

    def replace(self, **kwargs):
        """Return a copy of the plan with some parameters replaced."""
        params = {
            'dt': self.dt, 'n_steps': self.n_steps,
            'self_field_enabled': self.self_field_enabled,
            'h2_terms': self.h2_terms, 'record_every': self.record_every,
            'current_terms': self.current_terms,
            'bz_derivative': self.bz_derivative
        }
        params.update(kwargs)
        return StepPlan(**params)


def max_local_energy(scene, fields=None, energy=0.):
    """Return the energy scale bounding the local generator (J).

    scene  : ScatteringScene whose scalar potential to consider
    fields : optional FieldStack whose Zeeman energy to consider
    energy : kinetic energy of the packet (J, default 0)
    """
    potential = np.abs(scene.potential)
    transparent = potential < opaque_threshold(scene.grid)
    # Cells above the threshold are masked out of the wave function.
    scales = [energy, float(np.max(potential[transparent], initial=0.))]
    if fields is not None and fields.has_zeeman():
        magnitude = np.sqrt(sum(
            np.abs(np.asarray(value)) ** 2 for value in fields.zeeman_field()
        ))
        scales.append(
            abs(PHYSICAL.g_factor) * PHYSICAL.mu_B
            * float(np.max(magnitude)) / 2
        )
    return max(scales)


def check_time_step(plan, scene, fields=None, energy=0.):
    """Raise a ConfigurationError if dt exceeds 0.5.hbar / V_max.

    V_max is the largest of the packet's kinetic energy, the scalar
    potential below the grid's opaque threshold and the Zeeman energy.
    Returns the bound (s).
    """
    scale = max_local_energy(scene, fields, energy)
    if scale == 0:
        return np.inf
    bound = .5 * PHYSICAL.hbar / scale
    if plan.dt > bound:
        raise ConfigurationError(
            'Time step %.4g s exceeds the stability bound %.4g s '
            '(0.5 hbar / %.4g J).' % (plan.dt, bound, scale)
        )
    return bound
