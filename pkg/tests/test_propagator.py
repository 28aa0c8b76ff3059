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

"""Tests of the split-step propagator, the time loop and the stages."""

import numpy as np
import pytest

from spindiff.analysis import (
    b_pi, flip_probability_analytic, zeeman_wavenumber
)
from spindiff.core import (
    PHYSICAL, SPIN_SHORTCUTS, Grid2D, PacketSpec, SpinorField,
    init_gaussian_spinor, packet_width, spectral_centroid,
    velocity_from_wavelength
)
from spindiff.potentials import ScatteringScene
from spindiff.propagator import (
    FieldStack, FieldStage, SplitStepPropagator, StepPlan,
    apply_b1_rotation, apply_b2_phase, check_time_step, evolve,
    kinetic_half_spectrum, opaque_threshold, potential_half_step,
    strang_step
)
from spindiff.utils import ConfigurationError, NumericalError

from conftest import LAMBDA_FAST, NM, random_state


EV = PHYSICAL.e
V_FAST = velocity_from_wavelength(LAMBDA_FAST)


def gaussian_at_rest(grid, x_c, y_c, sigma):
    """Return a normalized spin-up Gaussian packet with zero mean momentum."""
    x_mesh, y_mesh = grid.meshgrid()
    psi = np.exp(
        -((x_mesh - x_c) ** 2 + (y_mesh - y_c) ** 2) / (2 * sigma ** 2)
    )
    psi /= np.sqrt(np.sum(psi ** 2) * grid.cell_area)
    return SpinorField(grid, psi, np.zeros(grid.shape))


def bump_scene(grid, height, x_c=18 * NM, y_c=1.5 * NM, width=4 * NM):
    """Return a scene holding a smooth Gaussian potential bump."""
    x_mesh, y_mesh = grid.meshgrid()
    potential = height * np.exp(
        -((x_mesh - x_c) ** 2 + (y_mesh - y_c) ** 2) / (2 * width ** 2)
    )
    return ScatteringScene(grid, potential=potential)


def l2_distance(first, second):
    """Return the L2 distance between two spinor fields."""
    squared = (
        np.abs(first.psi_up - second.psi_up) ** 2
        + np.abs(first.psi_dn - second.psi_dn) ** 2
    )
    return np.sqrt(np.sum(squared) * first.grid.cell_area)


def test_step_plan_validation():
    """Check the validation and copy of step plans."""
    with pytest.raises(ConfigurationError):
        StepPlan(0., 10)
    with pytest.raises(ConfigurationError):
        StepPlan(1e-15, 10, h2_terms={'spin_orbit': True})
    with pytest.raises(ConfigurationError):
        StepPlan(1e-15, 10, current_terms=('spin_orbit',))
    plan = StepPlan(1e-15, 10, h2_terms={'ap_cross': True})
    copy = plan.replace(n_steps=3)
    assert copy.n_steps == 3 and copy.dt == plan.dt
    assert copy.h2_terms['ap_cross'] and copy.h2_terms['zeeman']


def test_time_step_guard(small_grid):
    """Check the 0.5 hbar / V_max bound and the opaque-barrier exclusion."""
    plan = StepPlan(1e-15, 1)
    uniform = np.full(small_grid.shape, EV)
    scene = ScatteringScene(small_grid, potential=uniform)
    bound = .5 * PHYSICAL.hbar / EV
    assert check_time_step(plan.replace(dt=bound / 2), scene) == bound
    with pytest.raises(ConfigurationError):
        check_time_step(plan, scene)
    with pytest.raises(ConfigurationError):
        evolve(gaussian_at_rest(small_grid, 16 * NM, 0., 3 * NM), scene, plan)
    opaque = scene.with_potential(np.full(small_grid.shape, 100 * EV))
    assert check_time_step(plan, opaque) == np.inf


def test_kinetic_plane_wave_phase(small_grid):
    """Check that a lattice plane wave only acquires a global phase."""
    k_x = 2 * np.pi * 4 / small_grid.extent_x
    x_mesh, _ = small_grid.meshgrid()
    psi = np.exp(1j * k_x * x_mesh) / np.sqrt(
        small_grid.extent_x * small_grid.extent_y
    )
    state = SpinorField(small_grid, psi, np.zeros(small_grid.shape))
    dt = 3e-15
    moved = kinetic_half_spectrum(state, dt)
    phase = np.exp(-1j * PHYSICAL.hbar * k_x ** 2 * dt / (2 * PHYSICAL.m_e))
    scale = np.max(np.abs(psi))
    assert np.allclose(moved.psi_up, phase * psi, rtol=0, atol=1e-12 * scale)
    assert kinetic_half_spectrum(state, 0.) is state


def test_kinetic_free_dispersion(spin_up_state, packet_spec):
    """Check the free Gaussian spreading law within 0.5%."""
    duration = 2e-14
    moved = kinetic_half_spectrum(spin_up_state, duration)
    assert moved.norm() == pytest.approx(1., abs=1e-12)
    assert packet_width(moved, 0) == pytest.approx(
        packet_spec.width_at(duration), rel=5e-3
    )


def test_half_step_constant_potential(small_grid, rng):
    """Check that a constant potential yields a global phase."""
    state = random_state(small_grid, rng)
    scene = ScatteringScene(
        small_grid, potential=np.full(small_grid.shape, .01 * EV)
    )
    dt = 1e-15
    moved = potential_half_step(state, scene, FieldStack.free(small_grid), dt)
    phase = np.exp(-1j * .01 * EV * dt / (2 * PHYSICAL.hbar))
    assert np.allclose(moved.psi_up, phase * state.psi_up, rtol=1e-12)
    assert np.allclose(moved.psi_dn, phase * state.psi_dn, rtol=1e-12)


def test_half_step_b1_flips_spin(spin_up_state, free_scene):
    """Check that a pi rotation about x maps up onto down."""
    dt = 2e-14
    b_1 = np.pi * PHYSICAL.hbar / (
        abs(PHYSICAL.g_factor) * PHYSICAL.mu_B * dt / 2
    )
    fields = FieldStack.uniform(spin_up_state.grid, b_1)
    moved = potential_half_step(spin_up_state, free_scene, fields, dt)
    p_up, p_dn = moved.populations()
    assert p_dn == pytest.approx(1., abs=1e-12)
    assert p_up < 1e-12


def test_half_step_gradient_matches_b2_imprint(small_grid, rng, free_scene):
    """Check that the Zeeman half step of a gradient equals the B2 phase."""
    state = random_state(small_grid, rng)
    g_2, dt = 1e9, 4e-15
    fields = FieldStack.gradient(small_grid, g_2)
    moved = potential_half_step(state, free_scene, fields, dt)
    imprinted = apply_b2_phase(state, g_2, V_FAST * dt / 2, V_FAST)
    scale = np.max(np.abs(state.psi_up))
    assert np.allclose(
        moved.psi_up, imprinted.psi_up, rtol=0, atol=1e-12 * scale
    )
    assert np.allclose(
        moved.psi_dn, imprinted.psi_dn, rtol=0, atol=1e-12 * scale
    )
    assert np.allclose(moved.density(), state.density(), rtol=1e-12)


def test_strang_step_free_norm(spin_up_state, free_scene):
    """Check the norm drift of a single free step."""
    fields = FieldStack.free(spin_up_state.grid)
    moved = strang_step(spin_up_state, free_scene, fields, 1e-15)
    assert abs(moved.norm() - spin_up_state.norm()) < 1e-12


def test_unitarity(small_grid, rng):
    """Check norm conservation over 1000 steps with frozen fields."""
    state = random_state(small_grid, rng)
    scene = bump_scene(small_grid, .01 * EV)
    fields = FieldStack.uniform(small_grid, 1.)
    plan = StepPlan(1e-15, 1000, record_every=100)
    result = evolve(state, scene, plan, fields)
    assert len(result.series) == 11
    assert result.n_steps == 1000
    assert abs(result.state.norm() - state.norm()) < 1e-10
    assert np.max(np.abs(result.series['norm'] - 1.)) < 1e-10


def test_spin_populations_conserved_without_field(small_grid, rng):
    """Check that P_up and P_dn are constant in a spin-blind Hamiltonian."""
    state = random_state(small_grid, rng)
    scene = bump_scene(small_grid, .01 * EV)
    result = evolve(state, scene, StepPlan(1e-15, 100))
    p_up = result.series['p_up'].to_numpy()
    assert np.max(np.abs(p_up - p_up[0])) < 1e-12


def test_constant_potential_offset_is_a_global_phase(small_grid, rng):
    """Check that shifting the potential leaves densities unchanged."""
    state = random_state(small_grid, rng)
    scene = bump_scene(small_grid, .01 * EV)
    offset, plan = .002 * EV, StepPlan(1e-15, 50)
    shifted = scene.with_potential(scene.potential + offset)
    first = evolve(state, scene, plan).state
    second = evolve(state, shifted, plan).state
    peak = first.density().max()
    assert np.allclose(
        first.density(), second.density(), rtol=0, atol=1e-12 * peak
    )
    phase = np.exp(-1j * offset * 50 * plan.dt / PHYSICAL.hbar)
    scale = np.max(np.abs(first.psi_up))
    assert np.allclose(
        second.psi_up, phase * first.psi_up, rtol=0, atol=1e-10 * scale
    )


def test_strang_second_order(small_grid):
    """Check the order-2 Richardson ratio against a dt/8 reference."""
    state = gaussian_at_rest(small_grid, 16 * NM, 0., 3 * NM)
    scene = bump_scene(small_grid, .005 * EV)
    dt, n_steps = 1e-14, 10

    def terminal(divisor):
        plan = StepPlan(dt / divisor, n_steps * divisor)
        return evolve(state, scene, plan).state

    reference = terminal(8)
    ratio = (
        l2_distance(terminal(1), reference)
        / l2_distance(terminal(2), reference)
    )
    assert 3.5 <= ratio <= 4.5


def test_zero_steps_is_identity(spin_up_state, free_scene):
    """Check that an empty plan returns the initial state."""
    result = evolve(spin_up_state, free_scene, StepPlan(1e-15, 0))
    assert result.state is spin_up_state
    assert result.n_steps == 0
    assert len(result.series) == 1
    assert result.elapsed == 0


def test_early_stop(spin_up_state, free_scene):
    """Check that the stopping criterion ends the loop."""
    plan = StepPlan(1e-15, 50)
    result = evolve(
        spin_up_state, free_scene, plan, until=lambda state, scene: True
    )
    assert result.n_steps == 1
    assert list(result.series['step']) == [0, 1]
    assert result.elapsed == pytest.approx(1e-15)


def test_non_finite_values_abort(spin_up_state, free_scene):
    """Check that a NaN in the potential aborts with the step index."""
    potential = np.zeros(free_scene.grid.shape)
    potential[10, 10] = np.nan
    scene = free_scene.with_potential(potential)
    with pytest.raises(NumericalError) as error:
        evolve(spin_up_state, scene, StepPlan(1e-15, 5))
    assert error.value.step == 1
    with pytest.raises(NumericalError):
        FieldStack(free_scene.grid, b_ext=(np.nan, 0., 0.))


def test_opaque_wall_stops_the_packet(spin_up_state, small_grid):
    """Check that a barrier above the opaque threshold lets nothing through."""
    potential = np.zeros(small_grid.shape)
    wall = (small_grid.x > 20 * NM) & (small_grid.x < 24 * NM)
    potential[wall] = 3 * opaque_threshold(small_grid)
    scene = ScatteringScene(small_grid, potential=potential)
    result = evolve(spin_up_state, scene, StepPlan(1e-15, 40))
    density = result.state.density()
    assert not density[wall].any()
    beyond = np.sum(density[small_grid.x >= 24 * NM]) * small_grid.cell_area
    assert beyond < 1e-3
    assert result.state.norm() < .6
    assert (np.diff(result.series['norm']) < 1e-12).all()


def test_self_field_lag(spin_up_state, free_scene):
    """Check that the step from state n is driven by the field of state n."""
    plan = StepPlan(1e-16, 2, self_field_enabled=True)
    propagator = SplitStepPropagator(free_scene, plan)
    assert propagator.self_field.peak_bz() == 0
    states = [spin_up_state]
    for _ in range(2):
        states.append(propagator.step(states[-1]))
        own = propagator.build_self_field(states[-2])
        assert np.array_equal(propagator.self_field.bz, own.bz)
        assert np.array_equal(propagator.self_field.ax, own.ax)
    # The field of the post-step state is not the one that was used.
    later = propagator.build_self_field(states[-1])
    assert not np.array_equal(propagator.self_field.bz, later.bz)
    # Same step through the public one-step function.
    fields = FieldStack(free_scene.grid)
    stepped = strang_step(
        states[1], free_scene, fields, plan.dt, self_field=True
    )
    assert np.array_equal(stepped.psi_up, states[2].psi_up)
    assert np.array_equal(stepped.psi_dn, states[2].psi_dn)
    driven = strang_step(
        states[1], free_scene,
        fields.with_self_field(propagator.build_self_field(states[1])),
        plan.dt
    )
    assert np.array_equal(driven.psi_up, states[2].psi_up)


def test_evolve_records_field_of_each_state(spin_up_state, free_scene):
    """Check that 'bz_peak' holds the field sourced by the recorded state."""
    plan = StepPlan(1e-16, 3, self_field_enabled=True)
    recorded = {}

    def callback(step, state, propagator):
        recorded[step] = state

    result = evolve(spin_up_state, free_scene, plan, callback=callback)
    propagator = SplitStepPropagator(free_scene, plan)
    peaks = result.series['bz_peak'].to_numpy()
    assert 0 < peaks[0] < 1.
    for step, state in recorded.items():
        assert peaks[step] == propagator.build_self_field(state).peak_bz()
    assert result.self_field is not None
    assert result.self_field.peak_bz() == peaks[-1]


def test_self_field_disabled_records_nan(spin_up_state, free_scene):
    """Check that no self-field is recorded when disabled."""
    result = evolve(spin_up_state, free_scene, StepPlan(1e-15, 2))
    assert result.series['bz_peak'].isna().all()
    assert result.self_field is None


@pytest.mark.parametrize('chi_value', [0., .25, .5, 1., 1.5, 2.])
def test_b1_rotation_flip_law(spin_up_state, chi_value):
    """Check P(up -> down) = sin^2(pi.chi/2) after the B1 rotation."""
    l_b1 = .1
    b_1 = chi_value * b_pi(l_b1, LAMBDA_FAST)
    rotated = apply_b1_rotation(spin_up_state, b_1, l_b1, V_FAST)
    _, p_dn = rotated.populations()
    assert p_dn == pytest.approx(
        flip_probability_analytic(chi_value), abs=1e-12
    )
    assert np.allclose(rotated.density(), spin_up_state.density(), rtol=1e-12)


def test_b1_full_turn_restores_state(spin_up_state):
    """Check that chi = 2 restores the spinor up to a global phase."""
    b_1 = 2 * b_pi(.1, LAMBDA_FAST)
    rotated = apply_b1_rotation(spin_up_state, b_1, .1, V_FAST)
    overlap = np.sum(
        np.conj(spin_up_state.psi_up) * rotated.psi_up
        + np.conj(spin_up_state.psi_dn) * rotated.psi_dn
    ) * spin_up_state.grid.cell_area
    assert abs(overlap) == pytest.approx(1., abs=1e-12)


def test_b2_phase_centroid_shift(spin_up_state):
    """Check the +/-alpha spectral kicks and their linearity in L_B2."""
    velocity = 2.652e6
    alpha = zeeman_wavenumber(560., 50., velocity)
    assert alpha == pytest.approx(9.30e8, rel=2e-3)
    alpha0, beta0 = SPIN_SHORTCUTS['+x']
    mixed = spin_up_state.with_components(
        alpha0 * spin_up_state.psi_up, beta0 * spin_up_state.psi_up
    )
    kicked = apply_b2_phase(mixed, 560., 50., velocity)
    up_only = kicked.with_components(kicked.psi_up, 0 * kicked.psi_dn)
    dn_only = kicked.with_components(0 * kicked.psi_up, kicked.psi_dn)
    assert spectral_centroid(up_only, 1) == pytest.approx(-alpha, rel=1e-3)
    assert spectral_centroid(dn_only, 1) == pytest.approx(alpha, rel=1e-3)
    assert np.allclose(kicked.density(), mixed.density(), rtol=1e-12)
    doubled = apply_b2_phase(spin_up_state, 560., 100., velocity)
    assert spectral_centroid(doubled, 1) == pytest.approx(-2 * alpha, rel=1e-3)
    assert apply_b2_phase(spin_up_state, 0., 50., velocity) is spin_up_state


def test_field_stage_dispatch(spin_up_state):
    """Check stage validation and the analytic dispatch."""
    with pytest.raises(ConfigurationError):
        FieldStage('b3_quadrupole')
    with pytest.raises(ConfigurationError):
        FieldStage('free', mode='adiabatic')
    assert FieldStage('free').apply(spin_up_state, V_FAST) is spin_up_state
    stage = FieldStage('b1_uniform', b1=1e-4, l_b1=.1)
    assert stage.length == .1
    expected = apply_b1_rotation(spin_up_state, 1e-4, .1, V_FAST)
    assert np.array_equal(
        stage.apply(spin_up_state, V_FAST).psi_dn, expected.psi_dn
    )
    resolved = FieldStage('b2_gradient', g2=1., l_b2=1., mode='grid_resolved')
    with pytest.raises(ConfigurationError):
        resolved.apply(spin_up_state, V_FAST)
    with pytest.raises(ConfigurationError):
        resolved.apply(spin_up_state, V_FAST, dt=1e-15)


@pytest.mark.parametrize('chi_value', [.5, 1.])
def test_grid_resolved_b1_flip_law(spin_up_state, chi_value):
    """Check the flip law of a B1 stage integrated on the grid."""
    l_b1 = 5 * NM
    b_1 = chi_value * b_pi(l_b1, LAMBDA_FAST)
    stage = FieldStage('b1_uniform', b1=b_1, l_b1=l_b1, mode='grid_resolved')
    crossed = stage.apply(spin_up_state, V_FAST, dt=1e-15)
    _, p_dn = crossed.populations()
    expected = flip_probability_analytic(chi_value)
    assert p_dn == pytest.approx(expected, abs=1e-3)


def test_grid_resolved_b2_matches_imprint():
    """Check the grid-integrated gradient kick against the analytic one."""
    grid = Grid2D(64, 128, .5 * NM, .5 * NM, 0., -32 * NM)
    spec = PacketSpec(10 * NM, 0., 2 * NM, 4 * NM, LAMBDA_FAST)
    state = init_gaussian_spinor(grid, spec)
    g_2, l_b2 = 1.5e11, 10 * NM
    stage = FieldStage('b2_gradient', g2=g_2, l_b2=l_b2, mode='grid_resolved')
    crossed = stage.apply(state, V_FAST, dt=9e-16)
    imprinted = apply_b2_phase(state, g_2, l_b2, V_FAST)
    alpha = zeeman_wavenumber(g_2, l_b2, V_FAST)
    assert spectral_centroid(imprinted, 1) == pytest.approx(-alpha, rel=1e-3)
    assert spectral_centroid(crossed, 1) == pytest.approx(
        spectral_centroid(imprinted, 1), rel=1e-2
    )
