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

"""Exception types raised across spindiff.

Each domain error also derives from the builtin exception a caller
would naturally catch (ValueError, RuntimeError...).
"""


class SpindiffError(Exception):
    """Base class of all spindiff-specific exceptions."""


class ConfigurationError(SpindiffError, ValueError):
    """Invalid parameter value or inconsistent set of parameters."""


class ConfigParseError(ConfigurationError):
    """Configuration document error, located by a dotted key path."""

    def __init__(self, path, message):
        """Initialize the error.

        path    : dotted path of the offending configuration key (str)
        message : description of the problem (str)
        """
        self.path = path
        super().__init__("%s: %s" % (path, message) if path else message)


class GeometryError(SpindiffError, ValueError):
    """Objects that do not fit on the simulation grid."""


class GridMismatchError(SpindiffError, ValueError):
    """Fields defined on different or incompatible grids."""


class NumericalError(SpindiffError, FloatingPointError):
    """Non-finite values detected during the time evolution."""

    def __init__(self, message, step=None):
        """Initialize the error.

        message : description of the problem (str)
        step    : index of the time step at which it occurred (int or None)
        """
        self.step = step
        if step is not None:
            message = 'step %i: %s' % (step, message)
        super().__init__(message)


class StaleStateError(SpindiffError, RuntimeError):
    """Observable requested before the state reached a valid stage."""
