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

"""External and self-generated magnetic fields acting on the spinor."""

import numpy as np

from spindiff.core import Grid2D, check_field_shape
from spindiff.selffield import SelfFieldSolution
from spindiff.utils import (
    ConfigurationError, NumericalError, check_type_validity
)


H2_TERMS = {
    'zeeman': True,
    'ap_cross': False,
    'a2_squared': False,
    'a2_aself': False,
    'self_zeeman': True,
    'self_minimal': True,
}


def resolve_terms(terms=None):
    """Return a complete dict of coupling-term flags.

    terms : optional dict of flags overriding the H2_TERMS defaults
    """
    resolved = dict(H2_TERMS)
    if terms:
        unknown = set(terms) - set(H2_TERMS)
        if unknown:
            raise ConfigurationError(
                'Unknown coupling terms: %s; expected some of %s.'
                % (sorted(unknown), list(H2_TERMS))
            )
        resolved.update({key: bool(value) for key, value in terms.items()})
    return resolved


class FieldStack:
    """Magnetic fields and vector potentials entering the Hamiltonian.

    grid       : Grid2D on which the fields are defined
    b_ext      : (Bx, By, Bz) external field components (T), each
                 a scalar or an array on the grid
    a_ext      : (Ax, Ay) external vector potential (T.m)
    self_field : optional SelfFieldSolution of the spinor's own field
    terms      : dict of coupling-term flags (see H2_TERMS)
    """

    def __init__(
            self, grid, b_ext=(0., 0., 0.), a_ext=(0., 0.),
            self_field=None, terms=None
        ):
        check_type_validity(grid, Grid2D, 'grid')
        check_type_validity(
            self_field, (SelfFieldSolution, type(None)), 'self_field'
        )
        names = ('Bx', 'By', 'Bz', 'Ax', 'Ay')
        for name, value in zip(names, (*b_ext, *a_ext)):
            if np.ndim(value):
                check_field_shape(value, grid, name)
            if not np.all(np.isfinite(value)):
                raise NumericalError("Non-finite values in field '%s'." % name)
        self.grid = grid
        self.b_ext = tuple(b_ext)
        self.a_ext = tuple(a_ext)
        self.self_field = self_field
        self.terms = resolve_terms(terms)

    @classmethod
    def free(cls, grid):
        """Return a field-free stack."""
        return cls(grid)

    @classmethod
    def uniform(cls, grid, b_x, terms=None):
        """Return the stack of a uniform transverse field B = b_x.x_hat.

        The associated vector potential does not couple to the
        in-plane motion and is dropped.
        """
        return cls(grid, b_ext=(float(b_x), 0., 0.), terms=terms)

    @classmethod
    def gradient(cls, grid, g_2, y_ref=0., terms=None):
        """Return the stack of the gradient field Bz = g_2.(y - y_ref).

        The in-plane vector potential is Ax = -g_2.(y - y_ref)^2 / 2.
        """
        offset = np.broadcast_to(grid.y - y_ref, grid.shape)
        return cls(
            grid, b_ext=(0., 0., g_2 * offset),
            a_ext=(-g_2 * offset ** 2 / 2, 0.), terms=terms
        )

    def with_self_field(self, solution):
        """Return a copy of the stack holding a given self-field."""
        return FieldStack(
            self.grid, self.b_ext, self.a_ext, solution, self.terms
        )

    def zeeman_field(self):
        """Return the (Bx, By, Bz) field entering the Zeeman term."""
        b_x, b_y, b_z = (
            self.b_ext if self.terms['zeeman'] else (0., 0., 0.)
        )
        if self.self_field is not None and self.terms['self_zeeman']:
            b_z = b_z + self.self_field.bz
        return b_x, b_y, b_z

    def has_zeeman(self):
        """Return whether the Zeeman term is non-zero anywhere."""
        return any(np.any(value != 0) for value in self.zeeman_field())

    def minimal_coupling(self):
        """Return the (Ax, Ay) pair entering the A.p cross term, or None."""
        a_x, a_y = 0., 0.
        if self.terms['ap_cross']:
            a_x, a_y = self.a_ext
        if self.self_field is not None and self.terms['self_minimal']:
            a_x = a_x + self.self_field.ax
            a_y = a_y + self.self_field.ay
        if not (np.any(a_x != 0) or np.any(a_y != 0)):
            return None
        return a_x, a_y

    def vector_potential_squared(self):
        """Return the A^2 array entering the diamagnetic energy, or None.

        Contributions: A_ext^2 ('a2_squared'), 2.A_ext.A_self
        ('a2_aself') and A_self^2 ('self_minimal').
        """
        total = 0.
        ext_x, ext_y = self.a_ext
        if self.terms['a2_squared']:
            total = total + ext_x ** 2 + ext_y ** 2
        if self.self_field is not None:
            own = self.self_field
            if self.terms['a2_aself']:
                total = total + 2 * (ext_x * own.ax + ext_y * own.ay)
            if self.terms['self_minimal']:
                total = total + own.ax ** 2 + own.ay ** 2
        if not np.any(total != 0):
            return None
        return np.broadcast_to(total, self.grid.shape)

    def total_vector_potential(self):
        """Return the (Ax, Ay) potential entering the diamagnetic current."""
        a_x, a_y = self.a_ext
        if self.self_field is not None:
            a_x = a_x + self.self_field.ax
            a_y = a_y + self.self_field.ay
        return a_x, a_y
