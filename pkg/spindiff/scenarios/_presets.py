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

"""Preset scenarios, at full or reduced ("fast") scale.

Presets are raw configuration documents, merged over DEFAULTS before
parsing. The fast scale multiplies the de Broglie wavelength by ten
(hence the grid spacing) and divides energies by a hundred, keeping
the grating and packet lengths; the time step grows a hundredfold and
the field gradient shrinks tenfold, so that the Zeeman kick, the
spin rotation and all population ratios are left unchanged.
"""

import copy


SCALES = ('full', 'fast')

DEFAULTS = {
    'scenario': 'custom',
    'preset': None,
    'scale': 'full',
    'grid': {
        'extent_x': None,
        'extent_y': '360 nm',
        'spacing': None,
        'spacing_y': None,
        'x0': 0.,
        'y0': '-180 nm',
        'fast_sizes': True,
    },
    'packet': {
        'lambda_dB': '2.73 angstrom',
        'energy': None,
        'v_x': None,
        'x0c': '35 nm',
        'y0c': 0.,
        'sigma_x': '5 nm',
        'sigma_y': '40 nm',
        'spin': 'up',
        'alpha0': None,
        'beta0': None,
    },
    'grating': {
        'enabled': True,
        'period': '50 nm',
        'open_fraction': .5,
        'thickness': '25 nm',
        'barrier': '1200 eV',
        'image_scale': .35,
        'x_front': None,
        'n_slits': None,
        'y_center': 0.,
    },
    'absorber': {
        'enabled': True,
        'width_frac': .05,
        'minimum': 0.,
    },
    'stages': {
        'b1': 0.,
        'chi': None,
        'l_b1': '0.1 m',
        'b1_mode': 'analytic',
        'g2': 0.,
        'l_b2': 0.,
        'b2_mode': 'analytic',
    },
    'plan': {
        'dt': '9.01e-18 s',
        'n_steps': None,
        'max_steps': 20000,
        'self_field': False,
        'h2_terms': {},
        'record_every': 1,
        'current_terms': ['paramagnetic', 'diamagnetic', 'magnetization'],
        'bz_derivative': 'spectral',
    },
    'analysis': {
        'l_gs': '0.5 m',
        'pad_factor': 8,
        'husimi': False,
        'window_sigma': None,
        'husimi_n_ky': 256,
        'prominence': .1,
        'slab_tolerance': 1e-4,
    },
    'output': {
        'directory': None,
        'field_dumps': True,
        'time_series': True,
    },
    'sweep': {
        'chi': [0., .25, .5, .75, 1., 1.25, 1.5, 2.],
        'l_b2': ['10 m', '20 m', '30 m', '40 m', '50 m'],
    },
}

FAST_SCALE = {
    'packet': {'lambda_dB': '2.73 nm'},
    'grating': {'barrier': '12 eV', 'image_scale': .0035},
    'plan': {'dt': '9.01e-16 s', 'max_steps': 2000},
}

PRESETS = {
    'selffield': {
        'plan': {'self_field': True},
    },
    'field_free': {},
    'b1_sweep': {},
    'b2_filter': {
        'stages': {'g2': '560 T/m', 'l_b2': '50 m'},
        'sweep': {'chi': [0., .5, 1.]},
    },
    'husimi_sweep': {
        'stages': {'g2': '560 T/m'},
        'analysis': {'husimi': True},
    },
}

# Beam velocity of the reference parameter set, given to every preset.
REFERENCE_VELOCITY = {'full': '2.65e6 m/s', 'fast': '2.65e5 m/s'}

FAST_PRESETS = {
    'b2_filter': {'stages': {'g2': '56 T/m'}},
    'husimi_sweep': {'stages': {'g2': '56 T/m'}},
}


def merge_documents(base, update):
    """Return a deep copy of `base` recursively updated with `update`.

    Nested dicts are merged key by key, except 'h2_terms' which is
    replaced as a whole; other values are replaced.
    """
    merged = copy.deepcopy(base)
    for key, value in update.items():
        if (
                isinstance(value, dict) and isinstance(merged.get(key), dict)
                and key != 'h2_terms'
            ):
            merged[key] = merge_documents(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def preset_document(name=None, scale='full'):
    """Return the raw configuration document of a preset.

    name  : preset name (see PRESETS), or None for the defaults
    scale : 'full' (default) or 'fast'
    """
    if name is not None and name not in PRESETS:
        raise KeyError(
            "Unknown preset '%s'; expected one of %s." % (name, list(PRESETS))
        )
    if scale not in SCALES:
        raise KeyError(
            "Unknown scale '%s'; expected one of %s." % (scale, SCALES)
        )
    document = merge_documents(DEFAULTS, {'scale': scale})
    if scale == 'fast':
        document = merge_documents(document, FAST_SCALE)
    if name is not None:
        document['packet']['v_x'] = REFERENCE_VELOCITY[scale]
        document = merge_documents(document, PRESETS[name])
        if scale == 'fast':
            document = merge_documents(document, FAST_PRESETS.get(name, {}))
        document['scenario'] = name
        document['preset'] = name
    return document
