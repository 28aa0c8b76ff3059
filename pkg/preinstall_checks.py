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

"""Pre-installation check-up script."""

import json
import os
import sys


CONFIG_KEYS = ('output_folder', 'fft_workers')


def _check_python3():
    """Check that Python >= 3.8 is being run."""
    if sys.version_info < (3, 8):
        raise RuntimeError('spindiff is a Python >= 3.8 package.')


def _load_config():
    """Load the optional config.json file (empty dict if missing)."""
    folder = os.path.dirname(os.path.abspath(__file__))
    path = os.path.join(folder, 'config.json')
    if not os.path.isfile(path):
        return {}
    with open(path) as file:
        return json.load(file)


def _check_config(config):
    """Check the entries of config.json."""
    unknown = [key for key in config if key not in CONFIG_KEYS]
    if unknown:
        raise KeyError(
            "Unknown entries in the 'config.json' file: %s" % unknown
        )
    if not isinstance(config.get('output_folder', ''), str):
        raise TypeError("'output_folder' should be a string.")
    workers = config.get('fft_workers', 1)
    if isinstance(workers, bool) or not isinstance(workers, int):
        raise ValueError("'fft_workers' should be a positive integer.")
    if workers < 1:
        raise ValueError("'fft_workers' should be a positive integer.")


def main():
    """Check some key points before installing spindiff."""
    _check_python3()
    _check_config(_load_config())


if __name__ == '__main__':
    main()
