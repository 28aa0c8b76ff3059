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

"""Command-line interface: `simulate [config] [options]`."""

import argparse
import json
import logging
import sys

from spindiff.scenarios._config import load_config
from spindiff.scenarios._presets import PRESETS
from spindiff.scenarios._run import run_scenario
from spindiff.utils import (
    ConfigParseError, OUTPUT_DIR_VARIABLE, SpindiffError,
    default_output_folder, update_constants
)


LOGGER = logging.getLogger(__name__)


class CommandParser(argparse.ArgumentParser):
    """Argument parser printing usage errors as a one-line JSON object."""

    def error(self, message):
        print(json.dumps({
            'error': 'UsageError', 'message': message,
            'usage': self.format_usage().strip()
        }), file=sys.stderr)
        self.exit(2)


def build_parser():
    """Return the argument parser of the `simulate` command."""
    parser = CommandParser(
        prog='simulate',
        description='Simulate spin-resolved electron diffraction '
                    'from a nanograting.'
    )
    parser.add_argument(
        'config', nargs='?', default=None,
        help='path to a JSON scenario configuration (default: preset values)'
    )
    parser.add_argument(
        '--out', default=None,
        help='output folder (default: $%s, or %s)'
        % (OUTPUT_DIR_VARIABLE, default_output_folder())
    )
    parser.add_argument(
        '--preset', choices=sorted(PRESETS), default=None,
        help='preset scenario to build the configuration on'
    )
    parser.add_argument(
        '--override', action='append', default=[], metavar='KEY=VALUE',
        help="override a configuration value, e.g. 'packet.sigma_y=40 nm' "
             "(may be repeated)"
    )
    parser.add_argument(
        '--threads', type=int, default=None,
        help='number of FFT worker threads'
    )
    parser.add_argument(
        '--verbose', action='store_true', help='log debugging messages'
    )
    return parser


def report_error(error):
    """Print a one-line JSON description of an error to stderr."""
    payload = {'error': type(error).__name__, 'message': str(error)}
    if isinstance(error, ConfigParseError):
        payload['path'] = error.path
    print(json.dumps(payload), file=sys.stderr)


def main(argv=None):
    """Run the `simulate` command, returning its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )
    if args.threads is not None:
        if args.threads < 1:
            report_error(ValueError("'--threads' must be positive."))
            return 2
        update_constants(fft_workers=args.threads)
    try:
        config = load_config(args.config, args.preset, args.override)
        manifest = run_scenario(config, args.out)
    except (SpindiffError, OSError, ValueError) as error:
        LOGGER.debug('Run failed.', exc_info=True)
        report_error(error)
        return 1
    print(json.dumps({
        'scenario': manifest.scenario, 'config_sha256': manifest.config_sha256,
        'outputs': len(manifest.outputs)
    }))
    return 0


if __name__ == '__main__':
    sys.exit(main())
