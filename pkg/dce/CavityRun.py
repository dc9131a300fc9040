from __future__ import print_function
from __future__ import division
from __future__ import absolute_import
from builtins import object
import csv
import json
import os
import sys
import warnings
import numpy as np
from . import Analytic
from . import Constants
from . import RunConfig
from .FileInterface import Default
from .FileInterface import Load as runLoad
from .FileInterface import Save as runSave
from .Integrator import IntegrationError
from .Observables import particleSpectrum
from .Propagators import makePropagator
from .Trajectory import TrajectoryRangeError
from .UtilsParallel import rank

"""
    Single simulation of the cavity field: integrates the chosen formulation from t=0 up to t_max and
    extracts the particle spectrum at every checkpoint. Rows are written to CSV as they are produced,
    so a failed run leaves a valid prefix behind.
    Attributes:
        parameters (RunParameters): validated run configuration
        label (str): file name stem, defaults to the configured prefix
        save_to_file (bool): write CSV and JSON summary (and HDF5 if configured)
        verbose (bool): print banner and progress on rank 0
        omega, k_max: optional replacements for the configured values, used by the sweeps
"""

class CavityRun(object):

    def __init__(self,
            parameters=None,
            label=None,
            save_to_file=True,
            verbose=True,
            omega=None,
            k_max=None):

        params = parameters if parameters is not None else RunConfig.buildParameters()
        if k_max is not None:
            params = params._replace(k_max=int(k_max))
        if omega is not None:
            params = params._replace(omega=float(omega))
        self.parameters = RunConfig.validate(params)
        self.label = label or self.parameters.prefix
        self.verbose = verbose and rank == 0

        self.trajectory = RunConfig.makeTrajectory(self.parameters)
        self.system = RunConfig.makeModeSystem(self.parameters, self.trajectory)
        self.propagator = makePropagator(self.parameters.formulation, self.system, self.trajectory)
        self.checkpoints = RunConfig.checkpoints(self.parameters)

        self.records = []
        self.final_pair = None
        self.complete = False
        self.failure_time = None
        self.failure_message = None
        self.files = {}

        warnings.filterwarnings('always', module='DCE', category=UserWarning)

        if self.verbose:
            print('Cavity run')
            print('\t Trajectory: %s' % self.trajectory.describe())
            print('\t Formulation: %s' % self.parameters.formulation)
            print('\t Modes: %d' % self.system.k_max)
            print('\t Integrator: %s, abs_tol=%g, rel_tol=%g' % (self.parameters.method, self.parameters.abs_tol, self.parameters.rel_tol))
            print('\t Time range: 0 - %g, interval %g' % (self.parameters.t_max, self.parameters.interval))

        if save_to_file:
            self._prepareOutput()
        self._run(save_to_file)
        if save_to_file:
            self._writeSummary()
            if self.parameters.hdf5:
                self.files['hdf5'] = self._path(Constants.HDF5_SUFFIX)
                self.save(self.files['hdf5'])


    @property
    def hasOverlay(self):
        """
        Analytic overlay columns apply to massless sinusoidal runs above the lowest resonance
        """
        return (self.trajectory.kind == 'sinusoidal' and self.parameters.mass == 0
            and Analytic.prediction(self.trajectory.omega, self.trajectory.epsilon, 0., self.trajectory.l0) is not None)


    def _path(self, suffix):
        return os.path.join(self.parameters.directory, self.label + suffix)


    def _prepareOutput(self):
        if not os.path.isdir(self.parameters.directory):
            os.makedirs(self.parameters.directory)
        self.files['csv'] = self._path(Constants.CSV_SUFFIX)
        self.files['summary'] = self._path(Constants.SUMMARY_SUFFIX)


    def header(self):
        columns = ['t', 'N_total', 'E_total', 'max_abs_d', 'wall_moving_flag']
        columns += ['N_%d' % k for k in range(1, self.parameters.report_modes + 1)]
        if self.hasOverlay:
            columns += ['N_pred', 'E_pred']
        return columns


    def _row(self, record):
        row = ['%.10g' % record.t, '%.12e' % record.N_total, '%.12e' % record.E_total,
            '%.6e' % record.max_abs_d, '%d' % int(record.wall_moving)]
        row += ['%.12e' % n for n in record.N_k[:self.parameters.report_modes]]
        if self.hasOverlay:
            row += ['' if record.N_pred is None else '%.12e' % record.N_pred,
                '' if record.E_pred is None else '%.12e' % record.E_pred]
        return row


    def _run(self, save_to_file):
        f = open(self.files['csv'], 'w') if save_to_file else None
        writer = csv.writer(f, lineterminator='\n') if f else None
        overlay = self.hasOverlay
        warned_moving = False
        try:
            if writer:
                writer.writerow(self.header())
                f.flush()
            for t, y in self.propagator.propagate(self.checkpoints, RunConfig.makeStepperConfig(self.parameters)):
                pair = self.propagator.bogoliubov(t, y)
                prediction = Analytic.prediction(self.trajectory.omega, self.trajectory.epsilon, t, self.trajectory.l0) if overlay else None
                record = particleSpectrum(pair, prediction)
                self.records.append(record)
                self.final_pair = pair
                if writer:
                    writer.writerow(self._row(record))
                    f.flush()
                if pair.wall_moving and t > 0 and not warned_moving:
                    warned_moving = True
                    warnings.warn_explicit('Wall is moving at extraction time t=%g; particle numbers refer to the '
                        'instantaneous basis' % t, UserWarning, 'DCE', 0)
                self._printProgressStatements(t)
            self.complete = True
        except (IntegrationError, TrajectoryRangeError) as error:
            self.failure_time = error.t
            self.failure_message = str(error)
            warnings.warn_explicit('Run %s stopped: %s' % (self.label, error), UserWarning, 'DCE', 0)
        finally:
            if f:
                f.close()
            if self.verbose:
                sys.stdout.write('\n')


    def _printProgressStatements(self, t):
        if self.verbose:
            sys.stdout.write('\r%.1f %% done, t = %g / %g' % (100. * t / self.parameters.t_max, t, self.parameters.t_max))
            sys.stdout.flush()


    def summary(self):
        out = {
            'label': self.label,
            'complete': self.complete,
            'failure_time': self.failure_time,
            'failure_message': self.failure_message,
            'parameters': RunConfig.asDict(self.parameters),
            'files': dict(self.files)}
        if self.records:
            final = self.records[-1]
            out['final'] = {
                't': float(final.t),
                'N_total': final.N_total,
                'E_total': final.E_total,
                'N_k': [float(n) for n in final.N_k[:self.parameters.report_modes]],
                'max_abs_d': final.max_abs_d,
                'max_offdiag': final.max_offdiag}
            out['max_abs_d'] = max(r.max_abs_d for r in self.records)
            out['max_offdiag'] = max(r.max_offdiag for r in self.records)
        return out


    def _writeSummary(self):
        with open(self.files['summary'], 'w') as f:
            json.dump(self.summary(), f, indent=2, sort_keys=True)


    @property
    def times(self):
        return np.array([r.t for r in self.records])

    @property
    def totals(self):
        return np.array([r.N_total for r in self.records])

    @property
    def energies(self):
        return np.array([r.E_total for r in self.records])

    @property
    def spectra(self):
        return np.array([r.N_k for r in self.records])


    def spectrumAt(self, t):
        """
        Record at checkpoint t, or None when the run did not reach it
        """
        for record in self.records:
            if abs(record.t - t) <= 1e-9 * max(1., abs(t)):
                return record
        return None


    def save(self, path):
        instance = Default()
        instance.parameters = RunConfig.asDict(self.parameters)
        instance.label = self.label
        instance.complete = int(self.complete)
        if self.failure_time is not None:
            instance.failure_time = self.failure_time
        instance.series = {
            't': self.times,
            'N_total': self.totals,
            'E_total': self.energies,
            'N_k': self.spectra,
            'max_abs_d': np.array([r.max_abs_d for r in self.records]),
            'wall_moving': np.array([int(r.wall_moving) for r in self.records])}
        if self.final_pair is not None:
            instance.final = {'t1': self.final_pair.t1, 'A': self.final_pair.A, 'B': self.final_pair.B}
        runSave(instance, path)

    @staticmethod
    def load(path):
        """
        Stored run: parameters come back as RunParameters, series and final matrices as arrays
        """
        run = runLoad(path)
        try:
            fields = {}
            for key, value in run.parameters.items():
                if isinstance(value, np.ndarray):
                    value = value.tolist()
                if key == 'detuning':
                    value = [RunConfig.parsePair(item) for item in value]
                fields[key] = value
            run.parameters = RunConfig.RunParameters(**fields)
            run.complete = bool(run.complete)
        except (AttributeError, TypeError) as error:
            print('Could not load cavity run with path ' + path + ': ' + str(error))
            return None
        return run


def runSingle(parameters, **kwargs):
    return CavityRun(parameters, **kwargs)
