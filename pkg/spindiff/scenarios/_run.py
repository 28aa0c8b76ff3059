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

"""Orchestration of scenario runs: B1 -> grating -> B2 -> screen.

`run_scenario` executes the stage pipeline of a ScenarioConfig, writes
its outputs to a folder and returns the RunManifest describing them.
When the grating transit is spin-independent (no self-field), sweeps
over the magnetic stages transit the packet once and apply the stages
to the transmitted state.
"""

import json
import logging
import os
import time

import numpy as np
import pandas as pd

from spindiff.analysis import (
    analytic_deflection, default_husimi_axes, far_field, fit_through_origin,
    flip_probability, flip_probability_analytic, fringe_estimate,
    fringe_width, husimi, mean_ky, screen_time, snapshot_plane,
    spin_filter_readout, transmission, transverse_slice, zeeman_wavenumber
)
from spindiff.core import init_gaussian_spinor
from spindiff.propagator import (
    apply_b1_rotation, apply_b2_phase, check_time_step, evolve
)
from spindiff.scenarios._config import ScenarioConfig
from spindiff.scenarios._io import (
    file_checksum, write_field_dump, write_husimi, write_profile, write_table
)
from spindiff.selffield import current_density, solve_vector_potential
from spindiff.utils import (
    StaleStateError, check_type_validity, default_output_folder
)


CONTACT_LEVEL = 1e-3

LOGGER = logging.getLogger(__name__)


class RunManifest:
    """Description of a scenario run and of its outputs.

    config_sha256 : digest of the canonical configuration
    scenario      : scenario name
    scale         : 'full' or 'fast'
    derived       : dict of derived constants
    results       : dict of scalar results
    snapshots     : dict of snapshot times (s) and planes (m)
    outputs       : dict associating output file names to SHA-256 digests
    wall_clock    : duration of the run (s), kept out of manifest.json
    """

    def __init__(self, config_sha256, scenario, scale):
        self.config_sha256 = config_sha256
        self.scenario = scenario
        self.scale = scale
        self.derived = {}
        self.results = {}
        self.snapshots = {}
        self.outputs = {}
        self.wall_clock = None

    def to_dict(self):
        """Return the deterministic content of the manifest."""
        return {
            'config_sha256': self.config_sha256, 'scenario': self.scenario,
            'scale': self.scale, 'derived': self.derived,
            'results': self.results, 'snapshots': self.snapshots,
            'outputs': dict(sorted(self.outputs.items())),
        }

    def write(self, folder):
        """Write manifest.json and timing.json to a folder."""
        path = os.path.join(folder, 'manifest.json')
        with open(path, 'w') as file:
            json.dump(
                _jsonable(self.to_dict()), file, indent=2, sort_keys=True
            )
            file.write('\n')
        with open(os.path.join(folder, 'timing.json'), 'w') as file:
            json.dump({'wall_clock_s': self.wall_clock}, file, indent=2)
            file.write('\n')
        return path


def _jsonable(value):
    """Return a value with numpy scalars and non-finite floats converted."""
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if np.isfinite(value) else None
    return value


class TransitClearance:
    """Stopping criterion of a grating transit.

    Once the packet has reached the slab, the transit ends when the
    slab norm falls below `tolerance` ('cleared'), or when the norm
    beyond the slab starts decreasing, the transmitted packet having
    reached the absorber ('absorbed').
    """

    def __init__(self, tolerance):
        self.tolerance = tolerance
        self.contacted = False
        self.downstream = 0.
        self.reason = None

    def __call__(self, state, scene):
        inside = scene.slab_norm(state)
        downstream = scene.downstream_norm(state)
        shrinking = downstream < self.downstream
        self.downstream = downstream
        self.contacted = self.contacted or inside > CONTACT_LEVEL
        if not self.contacted:
            return False
        if inside < self.tolerance:
            self.reason = 'cleared'
        elif shrinking and downstream > CONTACT_LEVEL:
            self.reason = 'absorbed'
        return self.reason is not None


class ScenarioRunner:
    """Stateful executor of a scenario, collecting its outputs.

    config : ScenarioConfig to run
    folder : output folder (created if needed)
    """

    def __init__(self, config, folder):
        check_type_validity(config, ScenarioConfig, 'config')
        self.config = config
        self.folder = folder
        os.makedirs(folder, exist_ok=True)
        self.grid = config.build_grid()
        self.scene = config.build_scene(self.grid)
        self.manifest = RunManifest(config.sha256(), config.name, config.scale)
        self.velocity = config.velocity

    def output(self, name):
        """Return the path of an output file, registering its name."""
        self.manifest.outputs[name] = None
        return os.path.join(self.folder, name)

    def finalize(self):
        """Compute the checksums of all registered outputs."""
        for name in self.manifest.outputs:
            self.manifest.outputs[name] = file_checksum(
                os.path.join(self.folder, name)
            )

    def derive_constants(self):
        """Fill the manifest's derived constants."""
        config = self.config
        packet = config.build_packet()
        stages = config.stages
        derived = {
            'lambda_dB': config.lambda_dB, 'v_x': self.velocity,
            'k0': packet.k0, 'kinetic_energy_J': packet.kinetic_energy,
            'B_pi': config.b_pi, 'B1': config.b1_field,
            'chi': config.b1_field / config.b_pi,
            'alpha': zeeman_wavenumber(
                stages['g2'], stages['l_b2'], self.velocity
            ),
            'delta_y_scr': analytic_deflection(
                stages['g2'], stages['l_b2'], self.velocity,
                config.analysis['l_gs']
            ),
            'gamma': fringe_estimate(
                config.lambda_dB, config.analysis['l_gs'],
                config.grating['period']
            ),
            'T_scr': screen_time(config.analysis['l_gs'], self.velocity),
            'dt': config.plan['dt'],
            'dt_bound': check_time_step(
                config.build_plan(0), self.scene, energy=packet.kinetic_energy
            ),
            'grid_shape': list(self.grid.shape),
            'grid_spacing': [self.grid.dx, self.grid.dy],
            'n_slits': (
                0 if self.scene.grating is None else self.scene.grating.n_slits
            ),
        }
        self.manifest.derived.update(derived)

    def initial_state(self, spin=None):
        """Return the initial spinor wave packet."""
        return init_gaussian_spinor(self.grid, self.config.build_packet(spin))

    def transit(self, state):
        """Propagate a state through the grating.

        Return the EvolutionResult, recording snapshot times and
        self-field peaks in the manifest.
        """
        config = self.config
        packet = config.build_packet()
        n_steps = config.plan['n_steps']
        until = None
        if n_steps is None:
            if self.scene.grating is None or self.scene.grating.n_slits == 0:
                n_steps = config.transit_steps()
            else:
                n_steps = config.plan['max_steps']
                until = TransitClearance(config.analysis['slab_tolerance'])
        plan = config.build_plan(n_steps)
        LOGGER.info(
            "Grating transit of scenario '%s': up to %i steps on a %s grid.",
            config.name, n_steps, self.grid.shape
        )
        result = evolve(
            state, self.scene, plan, energy=packet.kinetic_energy, until=until
        )
        if until is not None:
            self.manifest.results['transit_end'] = until.reason
            if until.reason is None:
                LOGGER.warning(
                    'Packet still overlaps the grating after %i steps.',
                    result.n_steps
                )
            elif until.reason == 'absorbed':
                LOGGER.warning(
                    'Transmitted packet reached the absorber after %i steps,'
                    ' slab norm %.3g.', result.n_steps,
                    self.scene.slab_norm(result.state)
                )
        self.record_snapshots(result)
        return result

    def record_snapshots(self, result):
        """Record snapshot times and self-field peaks of a transit."""
        series = result.series
        contact = series.index[series['slab_norm'] > CONTACT_LEVEL]
        snapshots = {
            'pre_grating': 0., 'final': result.elapsed,
            'slab_contact': (
                float(series.loc[contact[0], 'time']) if len(contact) else None
            ),
        }
        if self.config.plan['self_field']:
            self.manifest.results['bz_pre_peak'] = float(
                series['bz_peak'].iloc[0]
            )
            after = series.loc[contact[0]:] if len(contact) else series
            peak = after['bz_peak'].idxmax()
            snapshots['post_grating_peak'] = float(series.loc[peak, 'time'])
            self.manifest.results['bz_post_peak'] = float(
                series.loc[peak, 'bz_peak']
            )
        self.manifest.snapshots.update(snapshots)
        if self.config.output['time_series']:
            write_table(series, self.output('series.csv'))

    def profile(self, state):
        """Return the far-field profile of a transmitted state."""
        return far_field(
            transverse_slice(state, self.scene), self.config.analysis['l_gs'],
            self.velocity, self.config.analysis['pad_factor']
        )

    def analyze(self, state, name='profile.csv'):
        """Compute and record the observables of a final state.

        Returns the FarFieldProfile of the state.
        """
        config = self.config
        results = self.manifest.results
        profile = self.profile(state)
        write_profile(profile, self.output(name))
        if self.scene.grating is not None:
            results['downstream_norm'] = self.scene.downstream_norm(state)
            try:
                results['transmission'] = transmission(
                    state, self.scene, config.analysis['slab_tolerance']
                )
            except StaleStateError as error:
                LOGGER.warning('Transmission unavailable: %s', error)
                results['transmission'] = None
        try:
            results['fringe_width'] = fringe_width(
                profile, prominence=config.analysis['prominence']
            )
        except ValueError as error:
            LOGGER.warning('Fringe width unavailable: %s', error)
            results['fringe_width'] = None
        fraction_up, fraction_dn = profile.channel_fractions()
        results.update({
            'screen_norm': profile.integral('total'),
            'fraction_up': fraction_up, 'fraction_dn': fraction_dn,
            'P_flip': flip_probability(profile.i_up, profile.i_dn),
            'P_py_to_ny': flip_probability(profile.i_py, profile.i_ny),
        })
        if config.analysis['husimi']:
            self.husimi_snapshot(state)
        return profile

    def husimi_snapshot(self, state, prefix='husimi'):
        """Compute, record and write the Husimi maps of a state."""
        plane = snapshot_plane(
            state, self.scene, self.config.packet['sigma_x']
        )
        cut = transverse_slice(state, plane=plane)
        y0_axis, ky0_axis = default_husimi_axes(
            cut, self.config.grating['period'],
            n_ky=self.config.analysis['husimi_n_ky']
        )
        husimi_map = husimi(cut, self.config.window_sigma, y0_axis, ky0_axis)
        self.manifest.snapshots['husimi_plane_x'] = plane
        for channel in ('up', 'dn'):
            try:
                self.manifest.results['mean_ky_' + channel] = mean_ky(
                    husimi_map, channel
                )
            except ValueError:
                self.manifest.results['mean_ky_' + channel] = None
        for path in write_husimi(husimi_map, self.folder, prefix):
            self.output(os.path.basename(path))
        return husimi_map

    def dump_fields(self, state, suffix):
        """Write the spin densities of a state as field dumps."""
        if not self.config.output['field_dumps']:
            return
        for channel, psi in (('up', state.psi_up), ('dn', state.psi_dn)):
            name = 'rho_%s_%s.bin' % (channel, suffix)
            write_field_dump(
                np.abs(psi) ** 2, self.output(name), self.grid.dx,
                self.grid.dy, 'rho_' + channel
            )

    def dump_self_field(self, state, suffix):
        """Write the self-field sourced by a state as field dumps."""
        if not self.config.output['field_dumps']:
            return
        solution = solve_vector_potential(
            current_density(state, terms=self.config.plan['current_terms']),
            self.config.plan['bz_derivative']
        )
        for name, values in (
                ('ax', solution.ax), ('ay', solution.ay), ('bz', solution.bz)
            ):
            write_field_dump(
                values, self.output('%s_%s.bin' % (name, suffix)),
                self.grid.dx, self.grid.dy, name + '_' + suffix[:6]
            )

    @property
    def factorized(self):
        """Whether the stages commute with the grating transit."""
        return (
            not self.config.plan['self_field']
            and self.config.stages['b1_mode'] == 'analytic'
        )

    def stage_b1(self, state, b_1=None):
        """Apply the B1 stage (configured field unless given)."""
        upstream, _ = self.config.build_stages(b_1=b_1)
        return upstream.apply(state, self.velocity, self.config.plan['dt'])

    def stage_b2(self, state, l_b2=None):
        """Apply the B2 stage (configured length unless given)."""
        _, downstream = self.config.build_stages(l_b2=l_b2)
        return downstream.apply(state, self.velocity, self.config.plan['dt'])

    # Scenarios.

    def run_single(self):
        """Run the B1 -> grating -> B2 pipeline once."""
        config = self.config
        state = self.initial_state()
        self.dump_fields(state, 'initial')
        if config.plan['self_field']:
            self.dump_self_field(state, 'pre')
        if self.is_echo():
            LOGGER.info('Nothing to propagate: echoing the input state.')
            self.manifest.results['norm'] = state.norm()
            return
        state = self.stage_b1(state)
        state = self.transit(state).state
        if config.plan['self_field']:
            self.dump_self_field(state, 'post')
        state = self.stage_b2(state)
        self.dump_fields(state, 'final')
        self.analyze(state)

    def is_echo(self):
        """Whether the configuration holds neither steps nor stages."""
        stages = self.config.stages
        return (
            self.config.plan['n_steps'] == 0 and self.config.b1_field == 0
            and (stages['g2'] == 0 or stages['l_b2'] == 0)
        )

    def transmitted_states(self, b1_values):
        """Yield (b1, state) pairs of transmitted states per B1 field."""
        if self.factorized:
            base = self.transit(self.initial_state()).state
            for b_1 in b1_values:
                yield b_1, apply_b1_rotation(
                    base, b_1, self.config.stages['l_b1'], self.velocity
                )
        else:
            for b_1 in b1_values:
                state = self.stage_b1(self.initial_state(), b_1)
                yield b_1, self.transit(state).state

    def run_b1_sweep(self):
        """Sweep the B1 field over chi values, recording flip probabilities."""
        chis = self.config.sweep['chi']
        b_pi_value = self.config.b_pi
        rows = []
        for chi_value, (_, state) in zip(
                chis, self.transmitted_states([c * b_pi_value for c in chis])
            ):
            profile = self.profile(self.stage_b2(state))
            rows.append({
                'chi': chi_value,
                'P_flip': flip_probability(profile.i_up, profile.i_dn),
                'P_flip_analytic': float(flip_probability_analytic(chi_value)),
            })
        table = pd.DataFrame(
            rows, columns=['chi', 'P_flip', 'P_flip_analytic']
        )
        write_table(table, self.output('b1_sweep.csv'))
        self.manifest.results['max_flip_error'] = float(
            np.max(np.abs(table['P_flip'] - table['P_flip_analytic']))
        )

    def run_b2_filter(self):
        """Read the spin-filtered screen pattern for several chi values."""
        chis = self.config.sweep['chi']
        b_pi_value = self.config.b_pi
        rows = []
        for chi_value, (_, state) in zip(
                chis, self.transmitted_states([c * b_pi_value for c in chis])
            ):
            profile = self.profile(self.stage_b2(state))
            write_profile(
                profile, self.output('profile_chi_%.2f.csv' % chi_value)
            )
            fraction_up, fraction_dn = profile.channel_fractions()
            row = {'chi': chi_value, 'p_up': fraction_up, 'p_dn': fraction_dn}
            row.update(spin_filter_readout(profile))
            rows.append(row)
        write_table(pd.DataFrame(rows), self.output('b2_filter.csv'))

    def run_husimi_sweep(self):
        """Sweep the B2 length, recording Husimi momentum centroids."""
        config = self.config
        state = self.stage_b1(self.initial_state())
        state = self.transit(state).state
        lengths = config.sweep['l_b2']
        plane = snapshot_plane(state, self.scene, config.packet['sigma_x'])
        widest = transverse_slice(
            self.stage_b2(state, max(lengths)), plane=plane
        )
        y0_axis, ky0_axis = default_husimi_axes(
            widest, config.grating['period'],
            n_ky=config.analysis['husimi_n_ky']
        )
        reference = self.profile(state)
        centre_up = _screen_centroid(reference, 'up')
        centre_dn = _screen_centroid(reference, 'dn')
        rows = []
        for length in lengths:
            imprinted = self.stage_b2(state, length)
            husimi_map = husimi(
                transverse_slice(imprinted, plane=plane), config.window_sigma,
                y0_axis, ky0_axis
            )
            profile = self.profile(imprinted)
            row = {
                'l_b2_m': length,
                'alpha': zeeman_wavenumber(
                    config.stages['g2'], length, self.velocity
                ),
                'delta_y_analytic': analytic_deflection(
                    config.stages['g2'], length, self.velocity,
                    config.analysis['l_gs']
                ),
                'delta_y_up': _screen_centroid(profile, 'up') - centre_up,
                'delta_y_dn': _screen_centroid(profile, 'dn') - centre_dn,
            }
            for channel in ('up', 'dn'):
                try:
                    row['ky_' + channel] = mean_ky(husimi_map, channel)
                except ValueError:
                    row['ky_' + channel] = np.nan
            rows.append(row)
        table = pd.DataFrame(rows, columns=[
            'l_b2_m', 'alpha', 'ky_up', 'ky_dn', 'delta_y_analytic',
            'delta_y_up', 'delta_y_dn'
        ])
        write_table(table, self.output('husimi_centroids.csv'))
        self.manifest.snapshots['husimi_plane_x'] = plane
        for channel, sign in (('up', -1), ('dn', 1)):
            valid = table['ky_' + channel].notna()
            if valid.sum() >= 2:
                slope, r_squared = fit_through_origin(
                    table['l_b2_m'][valid], table['ky_' + channel][valid]
                )
                self.manifest.results['ky_%s_slope' % channel] = slope
                self.manifest.results['ky_%s_r2' % channel] = r_squared
            self.manifest.results['ky_%s_over_alpha' % channel] = [
                sign * value / alpha if alpha else None
                for value, alpha in zip(table['ky_' + channel], table['alpha'])
            ]


def _screen_centroid(profile, channel):
    """Return the intensity-weighted screen position of a channel (m)."""
    values = profile.channel(channel)
    mass = np.sum(values)
    return float(np.sum(profile.y_scr * values) / mass) if mass else np.nan


SCENARIO_RUNNERS = {
    'custom': ScenarioRunner.run_single,
    'selffield': ScenarioRunner.run_single,
    'field_free': ScenarioRunner.run_single,
    'b1_sweep': ScenarioRunner.run_b1_sweep,
    'b2_filter': ScenarioRunner.run_b2_filter,
    'husimi_sweep': ScenarioRunner.run_husimi_sweep,
}


def run_scenario(config, output_dir=None):
    """Run a scenario and write its outputs and manifest.

    config     : ScenarioConfig to run
    output_dir : output folder (default: the configured one, or the
                 package's default output folder)

    Return the RunManifest of the run.
    """
    check_type_validity(config, ScenarioConfig, 'config')
    folder = (
        output_dir or config.output['directory'] or default_output_folder()
    )
    start = time.time()
    runner = ScenarioRunner(config, folder)
    runner.derive_constants()
    LOGGER.info("Running scenario '%s' (%s scale).", config.name, config.scale)
    SCENARIO_RUNNERS[config.name](runner)
    runner.finalize()
    runner.manifest.wall_clock = time.time() - start
    runner.manifest.write(folder)
    LOGGER.info(
        "Scenario '%s' done in %.1f s; outputs in %s.",
        config.name, runner.manifest.wall_clock, folder
    )
    return runner.manifest
