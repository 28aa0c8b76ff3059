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

"""Tests of the grating geometry, its potentials and the absorber."""

import numpy as np
import pytest

from spindiff.core import PHYSICAL, Grid2D
from spindiff.potentials import (
    AbsorberSpec, GratingSpec, ScatteringScene, absorbing_mask, build_scene,
    geometric_potential, image_potential, opaque_threshold
)
from spindiff.utils import (
    ConfigurationError, GeometryError, GridMismatchError
)

from conftest import NM


EV = PHYSICAL.e


@pytest.fixture
def grating():
    """Three 2 nm slits of period 4 nm in a 2 nm thick slab."""
    return GratingSpec(
        period=4 * NM, open_fraction=.5, thickness=2 * NM, barrier=EV,
        image_scale=.35, x_front=10 * NM, n_slits=3
    )


def test_grating_geometry(grating):
    """Check slit centers, width and slab faces."""
    assert np.allclose(grating.slit_centers(), [-4 * NM, 0., 4 * NM])
    assert grating.slit_width == pytest.approx(2 * NM)
    assert grating.x_back == pytest.approx(12 * NM)


@pytest.mark.parametrize('kwargs', [
    {'open_fraction': 1.2}, {'open_fraction': 0.}, {'image_scale': 1.},
    {'period': -NM}, {'n_slits': -1}
])
def test_grating_rejects_invalid(kwargs):
    """Check the validation of grating parameters."""
    params = {
        'period': 4 * NM, 'open_fraction': .5, 'thickness': 2 * NM,
        'barrier': EV, 'image_scale': .35, 'x_front': 10 * NM, 'n_slits': 3
    }
    params.update(kwargs)
    with pytest.raises(ConfigurationError):
        GratingSpec(**params)


def test_grating_must_fit(small_grid):
    """Check that slits beyond the grid are reported."""
    wide = GratingSpec(4 * NM, .5, 2 * NM, EV, 0., 10 * NM, 9)
    with pytest.raises(GeometryError):
        geometric_potential(small_grid, wide)
    outside = GratingSpec(4 * NM, .5, 2 * NM, EV, 0., 31 * NM, 3)
    with pytest.raises(GeometryError):
        geometric_potential(small_grid, outside)


def test_geometric_potential(small_grid, grating):
    """Check that the barrier fills the bars of the slab only."""
    potential = geometric_potential(small_grid, grating)
    column = small_grid.column_index(11 * NM)
    row = {value: int(np.argmin(np.abs(small_grid.y - value * NM)))
           for value in (0., 2., 3., 6., -14.)}
    assert potential[column, row[0.]] == 0
    assert potential[column, row[3.]] == 0
    assert potential[column, row[2.]] == EV
    assert potential[column, row[6.]] == EV
    assert potential[column, row[-14.]] == EV
    outside = ~grating.slab_columns(small_grid)
    assert not potential[outside].any()
    assert np.array_equal(potential[column], potential[column + 1])


def test_geometric_potential_without_slits(small_grid):
    """Check that a zero-slit grating leaves free space."""
    empty = GratingSpec(4 * NM, .5, 2 * NM, EV, 0., 10 * NM, 0)
    assert not geometric_potential(small_grid, empty).any()


def test_image_potential(small_grid, grating):
    """Check the sign, symmetry and value of the image potential."""
    potential = image_potential(small_grid, grating)
    assert (potential <= 0).all()
    column = small_grid.column_index(11 * NM)
    center = int(np.argmin(np.abs(small_grid.y)))
    prefactor = .35 * PHYSICAL.e ** 2 / (8 * np.pi * PHYSICAL.eps0)
    assert potential[column, center] == pytest.approx(
        -2 * prefactor / NM, rel=1e-9
    )
    # Symmetric about the slit's center.
    assert potential[column, center + 1] == pytest.approx(
        potential[column, center - 1], rel=1e-9
    )
    # Walls are clamped at half a grid cell.
    wall = center + 2
    expected = -prefactor * (1 / (.25 * NM) + 1 / (2 * NM))
    assert potential[column, wall] == pytest.approx(expected, rel=1e-9)
    is_open, _, _ = grating.slit_walls(small_grid)
    assert not potential[:, ~is_open].any()


def test_image_potential_disabled(small_grid):
    """Check that eta = 0 disables the image potential."""
    grating = GratingSpec(4 * NM, .5, 2 * NM, EV, 0., 10 * NM, 3)
    assert not image_potential(small_grid, grating).any()


def test_absorbing_mask(small_grid):
    """Check the mask's range, boundary value and interior plateau."""
    mask = absorbing_mask(small_grid, AbsorberSpec(width_frac=.1))
    assert mask.min() == 0 and mask.max() == 1
    assert not mask[0].any() and not mask[:, -1].any()
    assert (mask[16:48, 16:48] == 1).all()
    assert ((mask >= 0) & (mask <= 1)).all()
    floor = absorbing_mask(small_grid, AbsorberSpec(.1, minimum=.5))
    assert floor.min() == pytest.approx(.5)


@pytest.mark.parametrize('kwargs', [
    {'width_frac': .3}, {'width_frac': 0.}, {'minimum': 1.}
])
def test_absorber_rejects_invalid(kwargs):
    """Check the validation of absorber parameters."""
    with pytest.raises(ConfigurationError):
        AbsorberSpec(**kwargs)


def test_scene_norms(small_grid, grating, spin_up_state):
    """Check that slab and downstream norms partition the state."""
    scene = build_scene(small_grid, grating, AbsorberSpec())
    upstream = np.sum(
        spin_up_state.density()[small_grid.x < grating.x_front - 1e-3 * NM]
    ) * small_grid.cell_area
    total = (
        upstream + scene.slab_norm(spin_up_state)
        + scene.downstream_norm(spin_up_state)
    )
    assert total == pytest.approx(spin_up_state.norm(), rel=1e-12)
    assert scene.x_back == pytest.approx(12 * NM)
    assert scene.potential.max() == EV
    with pytest.raises(ValueError):
        scene.potential[0, 0] = 1.


def test_opaque_bars_are_masked(small_grid, grating):
    """Check that bars above the grid's opaque threshold are masked out."""
    height = 2 * opaque_threshold(small_grid)
    opaque = GratingSpec(
        period=4 * NM, open_fraction=.5, thickness=2 * NM, barrier=height,
        image_scale=0., x_front=10 * NM, n_slits=3
    )
    scene = build_scene(small_grid, opaque)
    bars = geometric_potential(small_grid, opaque) > 0
    assert bars.any()
    assert np.array_equal(scene.opaque, bars)
    assert not scene.mask[bars].any()
    assert (scene.mask[~bars] == 1).all()
    absorbed = build_scene(small_grid, opaque, AbsorberSpec())
    assert not absorbed.mask[bars].any()
    assert np.array_equal(
        absorbed.mask[~bars], absorbing_mask(small_grid, AbsorberSpec())[~bars]
    )
    soft = build_scene(small_grid, grating)
    assert not soft.opaque.any() and soft.mask is None


def test_free_scene(free_scene, spin_up_state):
    """Check the scene observables without a grating."""
    assert free_scene.slab_norm(spin_up_state) == 0
    assert free_scene.downstream_norm(spin_up_state) == pytest.approx(
        spin_up_state.norm()
    )
    assert free_scene.mask is None
    assert not free_scene.potential.any()
    shifted = free_scene.with_potential(np.full(free_scene.grid.shape, EV))
    assert shifted.potential.min() == EV
    assert shifted.l_gs == free_scene.l_gs


def test_scene_rejects_wrong_shape(small_grid):
    """Check that potentials must match the grid."""
    other = Grid2D(32, 32, NM, NM)
    with pytest.raises(GridMismatchError):
        ScatteringScene(small_grid, potential=np.zeros(other.shape))
