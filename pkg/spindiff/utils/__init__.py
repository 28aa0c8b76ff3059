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

"""Set of broadly used and generic utilitarian functions and errors."""

from ._errors import (
    ConfigParseError, ConfigurationError, GeometryError, GridMismatchError,
    NumericalError, SpindiffError, StaleStateError
)
from ._utils import (
    check_positive_float, check_positive_int, check_type_validity,
    raise_type_error
)
from ._constants import (
    CONSTANTS, OUTPUT_DIR_VARIABLE, default_output_folder, update_constants
)
