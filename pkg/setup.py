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

"""Setup for the installation of the 'spindiff' package."""

import setuptools
from setuptools.command.install import install


from preinstall_checks import main as preinstall_checks


class Installer(install):
    """Define an installation protocol by overriding setuptools' one."""

    def run(self):
        """Run the pre-installation checks, then the installation."""
        preinstall_checks()
        install.run(self)


setuptools.setup(
    name='spindiff',
    version='0.1',
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    author='spindiff contributors',
    description='spin-resolved electron diffraction from nanogratings',
    license='GPLv3',
    python_requires='>=3.8',
    install_requires=[
        'numpy >= 1.20',
        'pandas >= 1.1',
        'scipy >= 1.6'
    ],
    extras_require={'test': ['pytest >= 6.0']},
    entry_points={
        'console_scripts': ['simulate = spindiff.scenarios:main']
    },
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent"
    ],
    cmdclass={'install': Installer}
)
