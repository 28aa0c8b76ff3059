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

"""Scenario configuration: strict parsing and object builders.

A configuration is a JSON document whose sections mirror DEFAULTS.
Unknown keys are rejected, physical values are converted to SI units
and every error names the dotted path of the offending key.
"""

import hashlib
import json
import math

import numpy as np

from spindiff.analysis import b_pi
from spindiff.core import (
    PHYSICAL, SPIN_SHORTCUTS, PacketSpec, make_grid,
    velocity_from_wavelength
)
from spindiff.potentials import AbsorberSpec, GratingSpec, ScatteringScene
from spindiff.propagator import FieldStage, StepPlan, resolve_terms
from spindiff.scenarios._presets import (
    PRESETS, SCALES, merge_documents, preset_document
)
from spindiff.scenarios._units import parse_complex, parse_quantity
from spindiff.selffield import BZ_DERIVATIVES, CURRENT_TERMS
from spindiff.utils import ConfigParseError, ConfigurationError


SCENARIOS = ('custom',) + tuple(PRESETS)

# key: (kind, constraint); optional keys accept null.
SCHEMA = {
    'grid': {
        'extent_x': ('length', 'positive', 'optional'),
        'extent_y': ('length', 'positive'),
        'spacing': ('length', 'positive', 'optional'),
        'spacing_y': ('length', 'positive', 'optional'),
        'x0': ('length', None),
        'y0': ('length', None),
        'fast_sizes': ('bool', None),
    },
    'packet': {
        'lambda_dB': ('length', 'positive'),
        'energy': ('energy', 'positive', 'optional'),
        'v_x': ('velocity', 'positive', 'optional'),
        'x0c': ('length', None),
        'y0c': ('length', None),
        'sigma_x': ('length', 'positive'),
        'sigma_y': ('length', 'positive'),
        'spin': ('str', tuple(SPIN_SHORTCUTS), 'optional'),
        'alpha0': ('complex', None, 'optional'),
        'beta0': ('complex', None, 'optional'),
    },
    'grating': {
        'enabled': ('bool', None),
        'period': ('length', 'positive'),
        'open_fraction': ('float', 'open_interval'),
        'thickness': ('length', 'positive'),
        'barrier': ('energy', 'nonnegative'),
        'image_scale': ('float', 'unit_interval'),
        'x_front': ('length', None, 'optional'),
        'n_slits': ('int', 'nonnegative', 'optional'),
        'y_center': ('length', None),
    },
    'absorber': {
        'enabled': ('bool', None),
        'width_frac': ('float', 'positive'),
        'minimum': ('float', 'unit_interval'),
    },
    'stages': {
        'b1': ('field', None),
        'chi': ('float', None, 'optional'),
        'l_b1': ('length', 'positive'),
        'b1_mode': ('str', ('analytic', 'grid_resolved')),
        'g2': ('gradient', None),
        'l_b2': ('length', 'nonnegative'),
        'b2_mode': ('str', ('analytic', 'grid_resolved')),
    },
    'plan': {
        'dt': ('time', 'positive'),
        'n_steps': ('int', 'nonnegative', 'optional'),
        'max_steps': ('int', 'positive'),
        'self_field': ('bool', None),
        'h2_terms': ('terms', None),
        'record_every': ('int', 'positive'),
        'current_terms': ('str_list', CURRENT_TERMS),
        'bz_derivative': ('str', BZ_DERIVATIVES),
    },
    'analysis': {
        'l_gs': ('length', 'positive'),
        'pad_factor': ('int', 'positive'),
        'husimi': ('bool', None),
        'window_sigma': ('length', 'positive', 'optional'),
        'husimi_n_ky': ('int', 'positive'),
        'prominence': ('float', 'open_interval'),
        'slab_tolerance': ('float', 'positive'),
    },
    'output': {
        'directory': ('str', None, 'optional'),
        'field_dumps': ('bool', None),
        'time_series': ('bool', None),
    },
    'sweep': {
        'chi': ('float_list', None),
        'l_b2': ('length_list', 'nonnegative'),
    },
}

QUANTITY_KINDS = ('length', 'time', 'energy', 'field', 'gradient', 'velocity')


def _check_constraint(value, constraint, path):
    """Raise a ConfigParseError if a parsed value violates a constraint."""
    if constraint is None:
        return
    if isinstance(constraint, tuple):
        values = value if isinstance(value, list) else [value]
        invalid = [item for item in values if item not in constraint]
        if invalid:
            raise ConfigParseError(
                path, 'invalid value %s; expected one of %s'
                % (invalid[0], list(constraint))
            )
        return
    checks = {
        'positive': (lambda x: x > 0, 'must be positive'),
        'nonnegative': (lambda x: x >= 0, 'must be non-negative'),
        'open_interval': (lambda x: 0 < x < 1, 'must lie in ]0, 1['),
        'unit_interval': (lambda x: 0 <= x < 1, 'must lie in [0, 1['),
    }
    check, message = checks[constraint]
    for item in (value if isinstance(value, list) else [value]):
        if not check(item):
            raise ConfigParseError(path, '%s, not %s' % (message, item))


def _parse_value(value, rule, path):
    """Return a configuration value parsed according to a schema rule."""
    kind, constraint = rule[0], rule[1]
    if value is None:
        if 'optional' in rule:
            return None
        raise ConfigParseError(path, 'value is required')
    if kind in QUANTITY_KINDS:
        parsed = parse_quantity(value, kind, path)
    elif kind == 'length_list':
        if not isinstance(value, list):
            raise ConfigParseError(path, 'expected a list of lengths')
        parsed = [
            parse_quantity(item, 'length', '%s[%i]' % (path, i))
            for i, item in enumerate(value)
        ]
    elif kind == 'float_list':
        if not isinstance(value, list) or not all(
                isinstance(item, (int, float)) and not isinstance(item, bool)
                for item in value
            ):
            raise ConfigParseError(path, 'expected a list of numbers')
        parsed = [float(item) for item in value]
    elif kind == 'str_list':
        if not isinstance(value, list) or not all(
                isinstance(item, str) for item in value
            ):
            raise ConfigParseError(path, 'expected a list of strings')
        parsed = list(value)
    elif kind == 'terms':
        if not isinstance(value, dict):
            raise ConfigParseError(path, 'expected a mapping of flags')
        try:
            resolve_terms(value)
        except ConfigurationError as error:
            raise ConfigParseError(path, str(error)) from error
        parsed = {key: bool(flag) for key, flag in value.items()}
    elif kind == 'complex':
        parsed = parse_complex(value, path)
    else:
        parsed = _parse_scalar(value, kind, path)
    _check_constraint(parsed, constraint, path)
    return parsed


def _parse_scalar(value, kind, path):
    """Parse a bool, int, float or str value."""
    if kind == 'bool':
        if not isinstance(value, bool):
            raise ConfigParseError(path, 'expected a boolean')
        return value
    if kind == 'int':
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigParseError(path, 'expected an integer')
        return value
    if kind == 'float':
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigParseError(path, 'expected a number')
        return float(value)
    if not isinstance(value, str):
        raise ConfigParseError(path, 'expected a string')
    return value


def parse_document(document):
    """Return the sections of a complete raw document, in SI units."""
    unknown = set(document) - set(SCHEMA) - {'scenario', 'preset', 'scale'}
    if unknown:
        raise ConfigParseError(sorted(unknown)[0], 'unknown key')
    sections = {}
    for section, rules in SCHEMA.items():
        raw = document.get(section, {})
        if not isinstance(raw, dict):
            raise ConfigParseError(section, 'expected a section')
        unknown = set(raw) - set(rules)
        if unknown:
            raise ConfigParseError(
                '%s.%s' % (section, sorted(unknown)[0]), 'unknown key'
            )
        sections[section] = {
            key: _parse_value(raw.get(key), rule, '%s.%s' % (section, key))
            for key, rule in rules.items()
        }
    return sections


def decode_override(text):
    """Return the (dotted path, value) pair of a 'key=value' override.

    The value is decoded as JSON when possible, and kept as a string
    otherwise (e.g. 'packet.sigma_y=40 nm').
    """
    if '=' not in text:
        raise ConfigParseError(text, "override must read 'key=value'")
    path, raw = text.split('=', 1)
    path = path.strip()
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw.strip()
    return path, value


def apply_overrides(document, overrides):
    """Return a document updated with (dotted path, value) pairs."""
    update = {}
    for path, value in overrides:
        keys = path.split('.')
        if len(keys) > 2 or not all(keys):
            raise ConfigParseError(path, 'invalid override path')
        if len(keys) == 1:
            update[keys[0]] = value
        else:
            update.setdefault(keys[0], {})
            if not isinstance(update[keys[0]], dict):
                raise ConfigParseError(path, 'conflicting overrides')
            update[keys[0]][keys[1]] = value
    return merge_documents(document, update)


def parse_config(text='', preset=None, overrides=()):
    """Return the ScenarioConfig described by a JSON text.

    text      : JSON document (str, possibly empty for the defaults)
    preset    : optional preset name, taking precedence over the
                document's 'preset' key
    overrides : iterable of 'key=value' strings or (path, value) pairs

    Missing values are filled from the preset, itself built over the
    full-scale defaults.
    """
    user = {}
    if text and text.strip():
        try:
            user = json.loads(text)
        except json.JSONDecodeError as error:
            raise ConfigParseError(
                '', 'invalid JSON at line %i: %s' % (error.lineno, error.msg)
            ) from error
        if not isinstance(user, dict):
            raise ConfigParseError('', 'expected a JSON object')
    pairs = [
        decode_override(item) if isinstance(item, str) else tuple(item)
        for item in overrides
    ]
    # Resolve the preset and scale before merging the user values.
    top_keys = ('scenario', 'preset', 'scale')
    top = apply_overrides(
        {key: user[key] for key in top_keys if key in user},
        [pair for pair in pairs if '.' not in pair[0]]
    )
    scenario = top.get('scenario', 'custom')
    if preset is None:
        preset = top.get('preset')
        if preset is None and scenario in PRESETS:
            preset = scenario
    if preset is not None and preset not in PRESETS:
        raise ConfigParseError(
            'preset', "unknown preset '%s'; expected one of %s"
            % (preset, list(PRESETS))
        )
    scale = top.get('scale', 'full')
    if scale not in SCALES:
        raise ConfigParseError(
            'scale', "unknown scale '%s'; expected one of %s" % (scale, SCALES)
        )
    document = preset_document(preset, scale)
    document = merge_documents(document, user)
    document = apply_overrides(document, pairs)
    if preset is not None:
        document['preset'] = preset
        if 'scenario' not in top:
            document['scenario'] = preset
    if document['scenario'] not in SCENARIOS:
        raise ConfigParseError(
            'scenario', "unknown scenario '%s'; expected one of %s"
            % (document['scenario'], list(SCENARIOS))
        )
    return ScenarioConfig(document)


def load_config(path=None, preset=None, overrides=()):
    """Return the ScenarioConfig stored in a JSON file (or the defaults)."""
    text = ''
    if path is not None:
        with open(path) as file:
            text = file.read()
    return parse_config(text, preset, overrides)


class ScenarioConfig:
    """Validated scenario configuration, with values in SI units.

    name     : scenario name ('custom' or a preset name)
    preset   : preset the configuration was built on, or None
    scale    : 'full' or 'fast'
    sections : grid, packet, grating, absorber, stages, plan,
               analysis, output and sweep dicts
    """

    def __init__(self, document):
        self.name = document.get('scenario', 'custom')
        self.preset = document.get('preset')
        self.scale = document.get('scale', 'full')
        sections = parse_document(document)
        self.grid = sections['grid']
        self.packet = sections['packet']
        self.grating = sections['grating']
        self.absorber = sections['absorber']
        self.stages = sections['stages']
        self.plan = sections['plan']
        self.analysis = sections['analysis']
        self.output = sections['output']
        self.sweep = sections['sweep']
        self.check_spin()

    def check_spin(self):
        """Raise a ConfigParseError on an invalid spin specification."""
        alpha0, beta0 = self.packet['alpha0'], self.packet['beta0']
        if (alpha0 is None) != (beta0 is None):
            raise ConfigParseError(
                'packet.alpha0', "'alpha0' and 'beta0' go together"
            )
        if alpha0 is None and self.packet['spin'] is None:
            raise ConfigParseError('packet.spin', 'no spin state given')
        if alpha0 is not None:
            total = abs(alpha0) ** 2 + abs(beta0) ** 2
            if abs(total - 1) > 1e-12:
                raise ConfigParseError(
                    'packet.alpha0',
                    '|alpha0|^2 + |beta0|^2 must equal 1, not %.15g' % total
                )

    def to_dict(self):
        """Return a JSON-serializable copy of the configuration."""
        def encode(value):
            if isinstance(value, complex):
                return [value.real, value.imag]
            if isinstance(value, dict):
                return {key: encode(item) for key, item in value.items()}
            if isinstance(value, list):
                return [encode(item) for item in value]
            return value
        return encode({
            'scenario': self.name, 'preset': self.preset, 'scale': self.scale,
            'grid': self.grid, 'packet': self.packet,
            'grating': self.grating, 'absorber': self.absorber,
            'stages': self.stages, 'plan': self.plan,
            'analysis': self.analysis, 'output': self.output,
            'sweep': self.sweep,
        })

    def sha256(self):
        """Return the SHA-256 digest of the canonical configuration."""
        text = json.dumps(self.to_dict(), sort_keys=True)
        return hashlib.sha256(text.encode('utf-8')).hexdigest()

    @property
    def spin(self):
        """Initial (alpha0, beta0) spin coefficients."""
        if self.packet['alpha0'] is not None:
            return self.packet['alpha0'], self.packet['beta0']
        shortcut = SPIN_SHORTCUTS[self.packet['spin']]
        return tuple(complex(value) for value in shortcut)

    @property
    def lambda_dB(self):
        """de Broglie wavelength (m)."""
        return self.packet['lambda_dB']

    @property
    def velocity(self):
        """Beam velocity (m/s), derived from the wavelength by default."""
        if self.packet['v_x'] is not None:
            return self.packet['v_x']
        return velocity_from_wavelength(self.lambda_dB)

    @property
    def x_front(self):
        """Upstream face of the grating, six widths ahead of the packet."""
        if self.grating['x_front'] is not None:
            return self.grating['x_front']
        return self.packet['x0c'] + 6 * self.packet['sigma_x']

    @property
    def x_extent(self):
        """Length of the grid along x (m), derived unless configured.

        The default span holds the packet's approach, the slab and a
        drift buffer in which the transmitted packet, spread over its
        transit, clears the slab by six widths while its leading edge
        stays six widths short of the absorber ramp.
        """
        if self.grid['extent_x'] is not None:
            return self.grid['extent_x']
        sigma = self.packet['sigma_x']
        x_back = self.x_front + self.grating['thickness']
        duration = (x_back + 6 * sigma - self.packet['x0c']) / self.velocity
        spread = PHYSICAL.hbar * duration / (PHYSICAL.m_e * sigma ** 2)
        width = sigma * math.sqrt(1 + spread ** 2)
        ramp = self.absorber['width_frac'] if self.absorber['enabled'] else 0.
        return (x_back + 12 * width - self.grid['x0']) / (1 - ramp)

    @property
    def b1_field(self):
        """Field of the B1 stage (T), set from 'chi' when given."""
        if self.stages['chi'] is not None:
            return self.stages['chi'] * self.b_pi
        return self.stages['b1']

    @property
    def b_pi(self):
        """Field rotating the spin by pi over the B1 stage (T)."""
        return b_pi(self.stages['l_b1'], self.lambda_dB, self.velocity)

    @property
    def window_sigma(self):
        """Width of the Husimi window (m), sigma_y by default."""
        if self.analysis['window_sigma'] is not None:
            return self.analysis['window_sigma']
        return self.packet['sigma_y']

    def build_grid(self):
        """Return the simulation Grid2D."""
        spacing = self.grid['spacing'] or self.lambda_dB / 10
        return make_grid(
            self.x_extent, self.grid['extent_y'], spacing,
            self.grid['x0'], self.grid['y0'], self.grid['spacing_y'],
            self.grid['fast_sizes']
        )

    def build_packet(self, spin=None):
        """Return the PacketSpec of the initial wave packet.

        spin : optional (alpha0, beta0) pair replacing the configured one
        """
        alpha0, beta0 = self.spin if spin is None else spin
        return PacketSpec(
            self.packet['x0c'], self.packet['y0c'], self.packet['sigma_x'],
            self.packet['sigma_y'], self.lambda_dB, alpha0, beta0,
            self.packet['energy']
        )

    def build_grating(self, grid):
        """Return the GratingSpec, or None when the grating is disabled.

        Without an explicit count, the grating holds the largest odd
        number of slits fitting in the grid around its center.
        """
        if not self.grating['enabled']:
            return None
        n_slits = self.grating['n_slits']
        if n_slits is None:
            centre = self.grating['y_center']
            room = min(centre - grid.y[0], grid.y_max - centre)
            width = self.grating['open_fraction'] * self.grating['period']
            n_slits = 2 * max(
                0, math.floor((room - width / 2) / self.grating['period'])
            ) + 1
        return GratingSpec(
            self.grating['period'], self.grating['open_fraction'],
            self.grating['thickness'], self.grating['barrier'],
            self.grating['image_scale'], self.x_front, n_slits,
            self.grating['y_center']
        )

    def build_scene(self, grid):
        """Return the ScatteringScene of the grating transit."""
        absorber = None
        if self.absorber['enabled']:
            absorber = AbsorberSpec(
                self.absorber['width_frac'], self.absorber['minimum']
            )
        return ScatteringScene(
            grid, self.build_grating(grid), absorber,
            self.stages['l_b1'], self.analysis['l_gs'], self.stages['l_b2']
        )

    def build_stages(self, b_1=None, l_b2=None):
        """Return the (B1, B2) FieldStage pair.

        b_1, l_b2 : optional values replacing the configured B1 field
                    and B2 length (used by sweeps)
        """
        upstream = FieldStage(
            'b1_uniform', b1=self.b1_field if b_1 is None else b_1,
            l_b1=self.stages['l_b1'], mode=self.stages['b1_mode']
        )
        downstream = FieldStage(
            'b2_gradient', g2=self.stages['g2'],
            l_b2=self.stages['l_b2'] if l_b2 is None else l_b2,
            mode=self.stages['b2_mode'], h2_terms=self.plan['h2_terms'],
            y_ref=self.grating['y_center']
        )
        return upstream, downstream

    def build_plan(self, n_steps):
        """Return the StepPlan of the grating transit."""
        return StepPlan(
            self.plan['dt'], n_steps, self.plan['self_field'],
            self.plan['h2_terms'], self.plan['record_every'],
            self.plan['current_terms'], self.plan['bz_derivative']
        )

    def transit_steps(self):
        """Return the nominal number of steps for the packet center to
        travel two widths past the back face of the grating."""
        distance = (
            self.x_front + self.grating['thickness']
            + 2 * self.packet['sigma_x'] - self.packet['x0c']
        )
        return int(np.ceil(distance / (self.velocity * self.plan['dt'])))
