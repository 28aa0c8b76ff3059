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

"""Load the constants stored in the package's config.json file.

The file is optional: missing entries fall back to defaults, and the
SPINDIFF_OUTPUT_DIR environment variable overrides 'output_folder'.
"""

import json
import os


CONFIG_PATH = os.path.abspath(os.path.join(__file__, '../../../config.json'))

OUTPUT_DIR_VARIABLE = 'SPINDIFF_OUTPUT_DIR'

DEFAULTS = {'output_folder': 'spindiff_output', 'fft_workers': 1}


def __load_constants():
    """Load the constants stored in the package's 'config.json' file."""
    config = dict(DEFAULTS)
    if os.path.isfile(CONFIG_PATH):
        with open(CONFIG_PATH) as file:
            config.update(json.load(file))
    return config


CONSTANTS = __load_constants()


def default_output_folder():
    """Return the default output directory (environment variable first)."""
    return os.environ.get(OUTPUT_DIR_VARIABLE, CONSTANTS['output_folder'])


def update_constants(persist=False, **kwargs):
    """Add or update some package constants.

    persist  : whether to write the updated constants to config.json
               (bool, default False)
    **kwargs : constants to add or update
    """
    for key, arg in kwargs.items():
        CONSTANTS[key] = arg
    if persist:
        with open(CONFIG_PATH, 'w') as file:
            json.dump(CONSTANTS, file, indent=2, sort_keys=True)
