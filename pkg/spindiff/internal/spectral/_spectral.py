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

"""Set of FFT and finite-difference kernels on periodic 2-D grids.

All transforms go through scipy.fft, using the number of workers
set in the package constants ('fft_workers'). Arrays are indexed
as [x, y], so that axis 0 is x and axis 1 is y.
"""


import numpy as np
import scipy.fft

from spindiff.utils import CONSTANTS


def get_workers(workers=None):
    """Return the number of FFT workers to use (int)."""
    if workers is None:
        workers = CONSTANTS.get('fft_workers', 1)
    return int(workers)


def fft2(field, workers=None):
    """Return the 2-D discrete Fourier transform of a field."""
    return scipy.fft.fft2(field, workers=get_workers(workers))


def ifft2(spectrum, workers=None):
    """Return the inverse 2-D discrete Fourier transform of a spectrum."""
    return scipy.fft.ifft2(spectrum, workers=get_workers(workers))


def rfft2(field, workers=None):
    """Return the 2-D Fourier transform of a real field (half y-spectrum)."""
    return scipy.fft.rfft2(field, workers=get_workers(workers))


def irfft2(spectrum, shape, workers=None):
    """Return the real field of given shape matching a half y-spectrum."""
    return scipy.fft.irfft2(spectrum, s=shape, workers=get_workers(workers))


def centered_difference(field, spacing, axis):
    """Return the periodic second-order centered derivative of a field.

    field   : 2-D numpy.ndarray (real or complex)
    spacing : grid spacing along the differentiated axis (float)
    axis    : index of the axis along which to differentiate (int)
    """
    forward = np.roll(field, -1, axis=axis)
    backward = np.roll(field, 1, axis=axis)
    return (forward - backward) / (2 * spacing)


def nyquist_mask(n_points, half=False):
    """Return a 1-D boolean mask of the FFT bins to keep (no Nyquist bin).

    n_points : number of samples along the axis (int)
    half     : whether the axis is the half spectrum of a real
               transform (bool, default False)
    """
    size = n_points // 2 + 1 if half else n_points
    keep = np.ones(size, dtype=bool)
    if n_points % 2 == 0:
        keep[n_points // 2] = False
    return keep


def spectral_derivative(field, wavenumbers, axis, workers=None):
    """Return the spectral derivative of a periodic 2-D field.

    field       : 2-D numpy.ndarray (real or complex)
    wavenumbers : 1-D array of angular wavenumbers along `axis`,
                  in standard FFT ordering
    axis        : index of the axis along which to differentiate (int)
    workers     : number of FFT workers (int, default from constants)

    The Nyquist bin is dropped, so that the derivative of a real
    field remains real.
    """
    keep = nyquist_mask(len(wavenumbers))
    factor = 1j * np.where(keep, wavenumbers, 0.)
    shape = [1, 1]
    shape[axis] = -1
    spectrum = scipy.fft.fft(field, axis=axis, workers=get_workers(workers))
    derivative = scipy.fft.ifft(
        spectrum * factor.reshape(shape), axis=axis,
        workers=get_workers(workers)
    )
    return derivative.real if np.isrealobj(field) else derivative


def spectral_divergence(field_x, field_y, kx, ky, workers=None):
    """Return the spectral divergence of a real periodic 2-D vector field."""
    return (
        spectral_derivative(field_x, kx, 0, workers)
        + spectral_derivative(field_y, ky, 1, workers)
    )
