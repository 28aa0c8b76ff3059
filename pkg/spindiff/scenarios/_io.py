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

"""Output files of a scenario run.

Profiles and tables are comma-separated text written with pandas.
Two-dimensional fields are stored as a 64-byte ASCII header
'SPDF1 nx ny dx dy tag' (space-padded, newline-terminated) followed
by nx.ny little-endian float64 values in row-major order.
"""

import hashlib
import os

import numpy as np
import pandas as pd

from spindiff.analysis import FarFieldProfile, HusimiMap
from spindiff.utils import check_type_validity


DUMP_MAGIC = 'SPDF1'
HEADER_SIZE = 64
MAX_TAG_LENGTH = 12
FLOAT_FORMAT = '%.12e'


def write_table(frame, path):
    """Write a pandas.DataFrame as a CSV file, returning its path."""
    check_type_validity(frame, pd.DataFrame, 'frame')
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path


def write_profile(profile, path):
    """Write a far-field profile to a CSV file, returning its path.

    Columns: y_scr_m, I_up, I_dn, I_py, I_ny.
    """
    check_type_validity(profile, FarFieldProfile, 'profile')
    return write_table(profile.to_frame(), path)


def _dump_header(shape, dx, dy, tag):
    """Return the encoded fixed-size header of a field dump."""
    if not tag or len(tag) > MAX_TAG_LENGTH or ' ' in tag:
        raise ValueError(
            "Invalid dump tag '%s': expected at most %i characters, "
            "without spaces." % (tag, MAX_TAG_LENGTH)
        )
    text = '%s %i %i %.9e %.9e %s' % (
        DUMP_MAGIC, shape[0], shape[1], dx, dy, tag
    )
    if len(text) > HEADER_SIZE - 1:
        raise ValueError('Field dump header exceeds %i bytes.' % HEADER_SIZE)
    return (text.ljust(HEADER_SIZE - 1) + '\n').encode('ascii')


def write_field_dump(field, path, dx, dy, tag):
    """Write a real 2-D array to the binary dump format.

    field  : 2-D real array, indexed [x, y]
    path   : path of the file to write
    dx, dy : sample spacings along both axes
    tag    : quantity tag (str, at most 12 characters)
    """
    field = np.asarray(field)
    if field.ndim != 2 or np.iscomplexobj(field):
        raise ValueError('Field dumps hold real 2-D arrays only.')
    header = _dump_header(field.shape, dx, dy, tag)
    try:
        with open(path, 'wb') as file:
            file.write(header)
            file.write(np.ascontiguousarray(field, dtype='<f8').tobytes())
    except OSError as error:
        raise OSError(
            'Cannot write field dump %s: %s' % (path, error)
        ) from error
    return path


def read_field_dump(path):
    """Read a binary field dump.

    Return the 2-D float64 array and a dict holding its header
    values (nx, ny, dx, dy, tag).
    """
    with open(path, 'rb') as file:
        header = file.read(HEADER_SIZE).decode('ascii').split()
        if len(header) != 6 or header[0] != DUMP_MAGIC:
            raise ValueError('%s is not a field dump.' % path)
        n_x, n_y = int(header[1]), int(header[2])
        data = np.frombuffer(file.read(), dtype='<f8')
    if data.size != n_x * n_y:
        raise ValueError(
            '%s holds %i values, expected %i.' % (path, data.size, n_x * n_y)
        )
    info = {
        'nx': n_x, 'ny': n_y, 'dx': float(header[3]),
        'dy': float(header[4]), 'tag': header[5]
    }
    return data.reshape(n_x, n_y).astype(float), info


def write_husimi(husimi_map, folder, prefix='husimi'):
    """Write both channels of a Husimi map as field dumps.

    The dump spacings are those of the y0 and ky0 axes. Return the
    list of written paths.
    """
    check_type_validity(husimi_map, HusimiMap, 'husimi_map')
    spacing_y = np.ptp(husimi_map.y0) / max(len(husimi_map.y0) - 1, 1)
    spacing_k = np.ptp(husimi_map.ky0) / max(len(husimi_map.ky0) - 1, 1)
    paths = []
    for channel in ('up', 'dn'):
        path = os.path.join(folder, '%s_%s.bin' % (prefix, channel))
        write_field_dump(
            husimi_map.channel(channel), path, spacing_y, spacing_k,
            'q_' + channel
        )
        paths.append(path)
    return paths


def file_checksum(path):
    """Return the SHA-256 hex digest of a file's content."""
    digest = hashlib.sha256()
    with open(path, 'rb') as file:
        for block in iter(lambda: file.read(1 << 20), b''):
            digest.update(block)
    return digest.hexdigest()
