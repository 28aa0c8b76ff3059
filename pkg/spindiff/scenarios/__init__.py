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

"""Scenario configuration, preset runs and their output files.

`parse_config` builds a validated `ScenarioConfig` from a JSON text,
`run_scenario` executes it and returns the `RunManifest` of its
outputs; `main` is the entry point of the `simulate` command.
"""

from ._units import UNITS, parse_complex, parse_quantity
from ._presets import (
    DEFAULTS, PRESETS, SCALES, merge_documents, preset_document
)
from ._config import (
    SCENARIOS, SCHEMA, ScenarioConfig, apply_overrides, decode_override,
    load_config, parse_config
)
from ._io import (
    file_checksum, read_field_dump, write_field_dump, write_husimi,
    write_profile, write_table
)
from ._run import (
    RunManifest, ScenarioRunner, TransitClearance, run_scenario
)
from ._cli import build_parser, main
