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

"""Shared micro-scale fixtures of the spindiff test suite."""

import numpy as np
import pytest

from spindiff.core import Grid2D, PacketSpec, SpinorField, init_gaussian_spinor
from spindiff.potentials import ScatteringScene


NM = 1e-9
LAMBDA_FAST = 2.73 * NM


@pytest.fixture
def small_grid():
    """64 x 64 grid at 0.5 nm, centered on the origin along y."""
    return Grid2D(64, 64, .5 * NM, .5 * NM, 0., -16 * NM)


@pytest.fixture
def packet_spec():
    """Spin-up packet at rest-frame wavelength 2.73 nm."""
    return PacketSpec(
        12 * NM, 0., 2 * NM, 3 * NM, LAMBDA_FAST, alpha0=1., beta0=0.
    )


@pytest.fixture
def spin_up_state(small_grid, packet_spec):
    """Normalized spin-up Gaussian packet on the small grid."""
    return init_gaussian_spinor(small_grid, packet_spec)


@pytest.fixture
def free_scene(small_grid):
    """Scene without grating nor absorber."""
    return ScatteringScene(small_grid)


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(1234)


def random_state(grid, rng, width=3 * NM):
    """Return a random smooth normalized spinor on a grid."""
    x_mesh, y_mesh = grid.meshgrid()
    x_c = grid.x[grid.nx // 2]
    y_c = grid.y[grid.ny // 2]
    envelope = np.exp(
        -((x_mesh - x_c) ** 2 + (y_mesh - y_c) ** 2) / (2 * width ** 2)
    )
    components = []
    for _ in range(2):
        waves = sum(
            rng.normal() * np.exp(1j * (
                rng.normal(scale=5e8) * x_mesh + rng.normal(scale=5e8) * y_mesh
            ))
            for _ in range(3)
        )
        components.append(envelope * waves)
    state = SpinorField(grid, *components)
    norm = np.sqrt(state.norm())
    return SpinorField(grid, components[0] / norm, components[1] / norm)
