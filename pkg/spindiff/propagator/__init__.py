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

"""Split-step propagation of the spinor and the magnetic control stages.

`evolve` drives a `SplitStepPropagator` over a `StepPlan`, optionally
coupling the spinor to its own lagged self-field. `FieldStage` applies
the upstream B1 rotation and the downstream B2 kick.
"""

from ._fields import H2_TERMS, FieldStack, resolve_terms
from ._plan import (
    StepPlan, check_time_step, max_local_energy, opaque_threshold
)
from ._split_step import (
    SplitStepPropagator, kinetic_half_spectrum, kinetic_phase,
    minimal_coupling_step, potential_half_step, strang_step,
    zeeman_rotation
)
from ._evolve import SERIES_COLUMNS, EvolutionResult, evolve, observe
from ._stages import (
    STAGE_KINDS, STAGE_MODES, FieldStage, apply_b1_rotation,
    apply_b2_phase, run_resolved_stage
)
