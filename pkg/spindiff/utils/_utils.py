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

"""Set of broadly used argument-checking and lookup utilities."""

import numbers

import numpy as np

from ._errors import ConfigurationError


def check_positive_int(instance, var_name, allow_zero=False):
    """Check that a given variable is a positive integer.

    instance   : value to check
    var_name   : variable name to use in the exception's message
    allow_zero : whether zero is a valid value (bool, default False)
    """
    if isinstance(instance, bool):
        raise_type_error(var_name, (int,), bool)
    check_type_validity(instance, (int, np.integer), var_name)
    if instance < 0 or (instance == 0 and not allow_zero):
        expected = 'non-negative' if allow_zero else 'positive'
        raise ConfigurationError(
            "'%s' must be %s, not %s." % (var_name, expected, instance)
        )


def check_positive_float(instance, var_name, allow_zero=False):
    """Check that a given variable is a finite, positive real number.

    instance   : value to check
    var_name   : variable name to use in the exception's message
    allow_zero : whether zero is a valid value (bool, default False)
    """
    if isinstance(instance, bool) or not isinstance(instance, numbers.Real):
        raise_type_error(var_name, (float,), type(instance))
    if not np.isfinite(instance):
        raise ConfigurationError("'%s' must be finite." % var_name)
    if instance < 0 or (instance == 0 and not allow_zero):
        expected = 'non-negative' if allow_zero else 'positive'
        raise ConfigurationError(
            "'%s' must be %s, not %s." % (var_name, expected, instance)
        )


def check_type_validity(instance, valid_types, var_name):
    """Raise a TypeError if a given variable instance is not of expected type.

    instance    : instance whose type to check
    valid_types : expected type (or tuple of types)
    var_name    : variable name to use in the exception's message
    """
    if isinstance(valid_types, type):
        valid_types = (valid_types,)
    elif not isinstance(valid_types, tuple):
        raise AssertionError("Invalid 'valid_types' argument.")
    if float in valid_types and int not in valid_types:
        valid_types = (*valid_types, int, np.floating, np.integer)
    if not isinstance(instance, valid_types):
        raise_type_error(var_name, valid_types, type(instance).__name__)


def raise_type_error(var_name, valid_types, var_type):
    """Raise a custom TypeError.

    var_name    : name of the variable causing the exception (str)
    valid_types : tuple of types or type names to list as valid options
    var_type    : type of the variable causing the exception (type or str)
    """
    valid_names = [
        str(getattr(valid, '__name__', valid)) for valid in valid_types
    ]
    names_string = (
        valid_names[0] if len(valid_names) == 1
        else ', '.join(valid_names[:-1]) + ' or ' + valid_names[-1]
    )
    raise TypeError(
        "Expected '%s' to be of type %s, not %s."
        % (var_name, names_string, getattr(var_type, '__name__', var_type))
    )
