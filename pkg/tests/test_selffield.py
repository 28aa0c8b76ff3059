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

"""Tests of the spinor currents and the magnetostatic self-field solve."""

import numpy as np
import pytest
from scipy.special import erf

from spindiff.core import (
    PHYSICAL, SPIN_SHORTCUTS, Grid2D, PacketSpec, SpinorField,
    init_gaussian_spinor, make_grid
)
from spindiff.internal.spectral import (
    centered_difference, spectral_derivative, spectral_divergence
)
from spindiff.selffield import (
    CurrentField, SelfFieldSolution, current_density, peak_bz,
    solve_vector_potential, spin_density
)
from spindiff.utils import ConfigurationError

from conftest import NM, random_state


@pytest.fixture
def sheet_grid():
    """Grid elongated along y, for current sheets uniform along x."""
    return Grid2D(16, 256, .25 * NM, .25 * NM, 0., -32 * NM)


def gaussian_sheet(grid, amplitude=1e10, width=3 * NM):
    """Return a CurrentField Jx = J0.exp(-y^2 / 2s^2), uniform along x."""
    j_x = np.broadcast_to(
        amplitude * np.exp(-grid.y ** 2 / (2 * width ** 2)), grid.shape
    ).copy()
    return CurrentField(grid, j_x, np.zeros(grid.shape))


def plane_wave(grid, n_waves=4):
    """Return a spin-up plane wave along x, normalized on the domain."""
    k_x = 2 * np.pi * n_waves / grid.extent_x
    x_mesh, _ = grid.meshgrid()
    psi = np.exp(1j * k_x * x_mesh) / np.sqrt(grid.extent_x * grid.extent_y)
    return SpinorField(grid, psi, np.zeros(grid.shape)), k_x


def test_spin_density_of_shortcuts(small_grid):
    """Check the spin density of the +x and -y spinors."""
    envelope = np.full(small_grid.shape, 2.)
    for name, expected in (('+x', (4., 0., 0.)), ('-y', (0., -4., 0.))):
        alpha, beta = SPIN_SHORTCUTS[name]
        state = SpinorField(small_grid, alpha * envelope, beta * envelope)
        density = spin_density(state)
        for value, target in zip(density, expected):
            assert np.allclose(value, target, atol=1e-12)


def test_paramagnetic_current_of_plane_wave(small_grid):
    """Check J = -e.(hbar/m).sin(k.dx)/dx.rho for a lattice plane wave."""
    state, k_x = plane_wave(small_grid)
    current = current_density(state)
    rho = 1 / (small_grid.extent_x * small_grid.extent_y)
    expected = (
        -PHYSICAL.e * PHYSICAL.hbar / PHYSICAL.m_e
        * np.sin(k_x * small_grid.dx) / small_grid.dx * rho
    )
    assert np.allclose(current.jx, expected, rtol=1e-10)
    assert np.allclose(current.jy, 0., atol=abs(expected) * 1e-10)
    # Uniform spin-up density carries no magnetization current.
    magnetization = current.part('magnetization')[0]
    assert np.max(np.abs(magnetization)) < abs(expected) * 1e-10


def test_diamagnetic_current(small_grid, spin_up_state):
    """Check J_dia = (e^2/m).A.rho and its absence when A = 0."""
    a_x = 1e-3
    current = current_density(
        spin_up_state, (a_x, 0.), terms=('diamagnetic',)
    )
    expected = PHYSICAL.e ** 2 / PHYSICAL.m_e * a_x * spin_up_state.density()
    assert np.allclose(current.jx, expected)
    assert not np.any(current.jy)
    bare = current_density(spin_up_state, terms=('diamagnetic',))
    assert not np.any(bare.jx)


def test_current_terms_add_up(small_grid, rng):
    """Check that the total current is the sum of its parts."""
    state = random_state(small_grid, rng)
    current = current_density(state, (1e-4, -2e-4))
    assert set(current.parts) == {
        'paramagnetic', 'diamagnetic', 'magnetization'
    }
    total_x = sum(part[0] for part in current.parts.values())
    assert np.allclose(current.jx, total_x)
    with pytest.raises(KeyError):
        current_density(state, terms=('paramagnetic',)).part('diamagnetic')
    with pytest.raises(ConfigurationError):
        current_density(state, terms=('spin_orbit',))


def test_magnetization_current_is_solenoidal(small_grid, rng):
    """Check that the magnetization current has zero lattice divergence."""
    state = random_state(small_grid, rng)
    j_x, j_y = current_density(state, terms=('magnetization',)).part(
        'magnetization'
    )
    divergence = (
        centered_difference(j_x, small_grid.dx, 0)
        + centered_difference(j_y, small_grid.dy, 1)
    )
    scale = np.max(np.abs(j_x)) / small_grid.dx
    assert np.max(np.abs(divergence)) < 1e-12 * scale


def test_current_sheet_field(sheet_grid):
    """Check A and Bz of a Gaussian current sheet against closed forms."""
    amplitude, width = 1e10, 3 * NM
    current = gaussian_sheet(sheet_grid, amplitude, width)
    solution = solve_vector_potential(current)
    mu0, y = PHYSICAL.mu0, sheet_grid.y
    mean = current.jx.mean()
    primitive = width * np.sqrt(np.pi / 2) * erf(y / (np.sqrt(2) * width))
    expected_bz = mu0 * amplitude * primitive - mu0 * mean * y
    error = np.max(np.abs(solution.bz[0] - expected_bz))
    assert error < 1e-6 * np.max(np.abs(expected_bz))
    integral = y * primitive + width ** 2 * np.exp(-y ** 2 / (2 * width ** 2))
    expected_ax = -mu0 * amplitude * integral + mu0 * mean * y ** 2 / 2
    expected_ax -= expected_ax.mean()
    error = np.max(np.abs(solution.ax[0] - expected_ax))
    assert error < 1e-6 * np.max(np.abs(expected_ax))
    assert np.max(np.abs(solution.ay)) < 1e-12 * np.max(np.abs(solution.ax))
    # Uniform along x.
    peak = np.max(np.abs(solution.bz))
    assert np.allclose(solution.bz, solution.bz[0], rtol=0, atol=1e-12 * peak)


def test_current_sheet_centered_derivative(sheet_grid):
    """Check the centered-difference Bz of a current sheet."""
    current = gaussian_sheet(sheet_grid)
    spectral = solve_vector_potential(current)
    centered = solve_vector_potential(current, bz_derivative='centered')
    scale = np.max(np.abs(spectral.bz))
    assert np.max(np.abs(centered.bz - spectral.bz)) < 1e-2 * scale
    assert np.array_equal(centered.ax, spectral.ax)
    with pytest.raises(ConfigurationError):
        solve_vector_potential(current, bz_derivative='upwind')


def test_vector_potential_is_transverse(small_grid, rng):
    """Check the Coulomb gauge and Bz = curl A for a generic current."""
    state = random_state(small_grid, rng)
    solution = solve_vector_potential(current_density(state))
    scale = max(
        np.max(np.abs(solution.ax)), np.max(np.abs(solution.ay))
    ) * max(np.max(np.abs(small_grid.kx)), np.max(np.abs(small_grid.ky)))
    divergence = spectral_divergence(
        solution.ax, solution.ay, small_grid.kx, small_grid.ky
    )
    assert np.max(np.abs(divergence)) < 1e-10 * scale
    curl = (
        spectral_derivative(solution.ay, small_grid.kx, 0)
        - spectral_derivative(solution.ax, small_grid.ky, 1)
    )
    assert np.allclose(curl, solution.bz, rtol=0, atol=1e-10 * scale)


def test_field_is_linear_in_current(small_grid, rng):
    """Check that doubling the current doubles the field."""
    current = current_density(random_state(small_grid, rng))
    single = solve_vector_potential(current)
    double = solve_vector_potential(current.scaled(2.))
    assert np.allclose(double.bz, 2 * single.bz, rtol=1e-12, atol=0)
    assert peak_bz(double) == pytest.approx(2 * single.peak_bz(), rel=1e-12)


def test_field_superposition(small_grid, rng):
    """Check that the field of a.J1 + b.J2 is a.B(J1) + b.B(J2)."""
    first = current_density(random_state(small_grid, rng), (1e-4, 0.))
    second = current_density(random_state(small_grid, rng))
    combined = first.scaled(.7) + second.scaled(-1.3)
    assert set(combined.parts) == set(first.parts)
    for name in first.parts:
        assert np.allclose(
            combined.part(name)[0],
            .7 * first.part(name)[0] - 1.3 * second.part(name)[0]
        )
    field = solve_vector_potential(combined)
    one = solve_vector_potential(first)
    two = solve_vector_potential(second)
    for name in ('ax', 'ay', 'bz'):
        values = getattr(field, name)
        target = .7 * getattr(one, name) - 1.3 * getattr(two, name)
        scale = np.max(np.abs(target))
        assert scale > 0
        assert np.allclose(values, target, rtol=0, atol=1e-12 * scale)


@pytest.mark.slow
def test_reference_packet_field_magnitude():
    """Check the peak |Bz| of the reference packet before the grating."""
    wavelength = 2.73e-10
    grid = make_grid(
        60 * NM, 340 * NM, wavelength / 5, 0., -170 * NM, fast_sizes=True
    )
    packet = PacketSpec(
        35 * NM, 0., 5 * NM, 40 * NM, wavelength, alpha0=1., beta0=0.
    )
    solution = solve_vector_potential(
        current_density(init_gaussian_spinor(grid, packet))
    )
    assert .75e-12 <= solution.peak_bz() <= 3e-12


def test_zero_current_gives_zero_field(small_grid):
    """Check that a vanishing current sources no field."""
    current = CurrentField(
        small_grid, np.zeros(small_grid.shape), np.zeros(small_grid.shape)
    )
    solution = solve_vector_potential(current)
    for array in (solution.ax, solution.ay, solution.bz):
        assert not np.any(array)
    assert SelfFieldSolution.zeros(small_grid).peak_bz() == 0
