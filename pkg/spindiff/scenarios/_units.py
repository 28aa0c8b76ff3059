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

"""Parsing of physical quantities written with a unit suffix."""

import re

import scipy.constants as sc

from spindiff.utils import ConfigParseError


# unit symbol: (dimension, factor to SI)
UNITS = {
    'm': ('length', 1.), 'km': ('length', sc.kilo),
    'cm': ('length', sc.centi), 'mm': ('length', sc.milli),
    'um': ('length', sc.micro), 'nm': ('length', sc.nano),
    'pm': ('length', sc.pico), 'angstrom': ('length', sc.angstrom),
    'A': ('length', sc.angstrom),
    's': ('time', 1.), 'ms': ('time', sc.milli), 'us': ('time', sc.micro),
    'ns': ('time', sc.nano), 'ps': ('time', sc.pico),
    'fs': ('time', sc.femto), 'as': ('time', sc.atto),
    'J': ('energy', 1.), 'eV': ('energy', sc.eV),
    'meV': ('energy', sc.milli * sc.eV), 'keV': ('energy', sc.kilo * sc.eV),
    'T': ('field', 1.), 'mT': ('field', sc.milli), 'uT': ('field', sc.micro),
    'nT': ('field', sc.nano), 'G': ('field', 1e-4),
    'T/m': ('gradient', 1.), 'mT/m': ('gradient', sc.milli),
    'T/mm': ('gradient', 1. / sc.milli),
    'm/s': ('velocity', 1.), 'km/s': ('velocity', sc.kilo),
}

QUANTITY_PATTERN = re.compile(
    r'^\s*(?P<value>[-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)?'
    r'\s*(?P<unit>\S*)\s*$'
)


def parse_quantity(value, dimension, path):
    """Return the SI value of a physical quantity.

    value     : number (taken as SI) or string such as '2.73 angstrom',
                '560 T/m' or 'mT' (unit alone meaning one unit)
    dimension : expected dimension ('length', 'time', 'energy',
                'field', 'gradient' or 'velocity')
    path      : dotted configuration path, used in error messages
    """
    if isinstance(value, bool):
        raise ConfigParseError(
            path, 'expected a %s, got a boolean' % dimension
        )
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise ConfigParseError(
            path, 'expected a %s, got %s' % (dimension, type(value).__name__)
        )
    match = QUANTITY_PATTERN.match(value)
    if match is None or not (match.group('value') or match.group('unit')):
        raise ConfigParseError(path, "cannot parse quantity '%s'" % value)
    number = float(match.group('value') or 1.)
    unit = match.group('unit')
    if not unit:
        return number
    if unit not in UNITS:
        raise ConfigParseError(path, "unknown unit '%s'" % unit)
    unit_dimension, factor = UNITS[unit]
    if unit_dimension != dimension:
        raise ConfigParseError(
            path, "unit '%s' is a %s, expected a %s"
            % (unit, unit_dimension, dimension)
        )
    return number * factor


def parse_complex(value, path):
    """Return a complex number from a number, [re, im] pair or string."""
    if isinstance(value, bool):
        raise ConfigParseError(path, 'expected a complex number')
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        try:
            return complex(float(value[0]), float(value[1]))
        except (TypeError, ValueError):
            pass
    if isinstance(value, str):
        try:
            return complex(value.replace(' ', '').replace('i', 'j'))
        except ValueError:
            pass
    raise ConfigParseError(path, "cannot parse complex number '%s'" % (value,))
