from __future__ import print_function
from __future__ import division
from __future__ import absolute_import
from builtins import object
import csv
import json
import os
import warnings
import numpy as np
import scipy.ndimage
from . import Analytic
from . import Constants
from . import RunConfig
from .CavityRun import CavityRun
from .UtilsParallel import divideTasks, gatherResults, rank, size
from .Utils import namedtuple

"""
    Frequency sweep around the resonances omega = 2 n pi / l0. Every (n, delta_n) point is a full run;
    oscillating points (gamma > 1) get their period and maximum amplitude measured from N(t).
    Attributes:
        parameters (RunParameters): run configuration whose detuning list holds the (n, delta_n) points
        save_to_file (bool): write per-point runs plus the sweep CSV and JSON
"""

class DetuningSweep(object):

    def __init__(self, parameters, save_to_file=True, verbose=True):
        if not parameters.detuning:
            raise ValueError('A detuning sweep needs at least one n:delta_n point')
        if parameters.kind != 'sinusoidal':
            raise ValueError('Detuning sweeps drive the wall sinusoidally, got trajectory kind %r' % parameters.kind)
        self.parameters = RunConfig.validate(parameters)
        self.points = list(self.parameters.detuning)
        self.files = {}

        if verbose and rank == 0:
            print('Detuning sweep')
            print('\t Points (n, delta_n): %s' % ', '.join('(%g, %g)' % p for p in self.points))
            print('\t epsilon: %g' % self.parameters.epsilon)
            print('\t t_max: %g' % self.parameters.t_max)

        local = {}
        for task in divideTasks(len(self.points), rank, size):
            n, delta_n = self.points[task]
            local[task] = self._runPoint(n, delta_n, save_to_file, verbose and size == 1)
        self.results = gatherResults(local, len(self.points))

        self.alpha = None
        if self.results is None:
            return
        for result in self.results:
            if not result.complete:
                warnings.warn_explicit('Detuning point n=%g delta_n=%g failed' % (result.n, result.delta_n), UserWarning, 'DCE', 0)
            elif result.gamma > 1 and result.status != 'ok':
                warnings.warn_explicit('Detuning point n=%g delta_n=%g: %s' % (result.n, result.delta_n, result.status), UserWarning, 'DCE', 0)
        self.alpha = fitAmplitudeExponent(self.results)
        if save_to_file:
            self._write()


    def _runPoint(self, n, delta_n, save_to_file, verbose):
        l0 = self.parameters.l0
        epsilon = self.parameters.epsilon
        gamma = Analytic.detuningParameter(delta_n, n, epsilon)
        run = CavityRun(self.parameters, label='%s_n%g_dn%g' % (self.parameters.prefix, n, delta_n),
            save_to_file=save_to_file, verbose=verbose, omega=2 * np.pi * (n + delta_n) / l0)

        times, totals = run.times, run.totals
        final_E = float(run.energies[-1]) if run.records else None
        predicted_E = None
        if run.records:
            predicted_E = float(Analytic.predictE(n, epsilon, times[-1] / l0, gamma)) / l0

        period = amplitude = t_half = predicted = error = None
        status = 'not oscillating'
        if gamma > 1:
            predicted = Analytic.predictPeriod(n, gamma, epsilon) * l0
            measurement = measureOscillation(times, totals)
            status = measurement.status
            if measurement.status == 'ok':
                period, amplitude, t_half = measurement.period, measurement.amplitude, measurement.t_half
                error = abs(period - predicted) / predicted
        return DetuningPoint(n=n, delta_n=delta_n, gamma=gamma, regime=regime(gamma), complete=run.complete,
            period=period, predicted_period=predicted, period_error=error, amplitude=amplitude, t_half=t_half,
            final_E=final_E, predicted_E=predicted_E, status=status)


    @property
    def failed(self):
        return bool(self.results) and any(not r.complete for r in self.results)


    def _write(self):
        stem = os.path.join(self.parameters.directory, '%s_%s' % (self.parameters.prefix, Constants.DETUNING_FILE_NAME))
        self.files['csv'] = stem + Constants.CSV_SUFFIX
        self.files['summary'] = stem + Constants.SUMMARY_SUFFIX
        with open(self.files['csv'], 'w') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(DetuningPoint._fields)
            for result in self.results:
                writer.writerow([_cell(v) for v in result])
        with open(self.files['summary'], 'w') as f:
            json.dump({
                'epsilon': self.parameters.epsilon,
                'alpha': self.alpha,
                'failed': self.failed,
                'points': [dict((k, _plain(v)) for k, v in r._asdict().items()) for r in self.results]},
                f, indent=2, sort_keys=True)


def regime(gamma):
    if abs(gamma - 1) < Analytic.RESONANCE_TOLERANCE:
        return 'quadratic'
    return 'exponential' if gamma < 1 else 'oscillating'


def _refine(times, values, i):
    """
    Vertex of the parabola through samples i-1, i, i+1; the sample itself at the ends of the series
    """
    if i == 0 or i == len(values) - 1:
        return times[i], values[i]
    a, b, c = np.polyfit(times[i-1:i+2], values[i-1:i+2], 2)
    if a == 0:
        return times[i], values[i]
    t = -b / (2 * a)
    if not times[i-1] <= t <= times[i+1]:
        return times[i], values[i]
    return t, a * t**2 + b * t + c


def measureOscillation(times, N, depth=Constants.MINIMUM_DEPTH_FRACTION):
    """
    Period and amplitude of an oscillating particle number N(t)
    Arguments:
      times: ascending sample times starting at 0
      N: particle numbers at those times
      depth: a sample belongs to a minimum when it lies below depth * max(N)
    Output:
      OscillationMeasurement; status is 'ok' or the reason the detection failed
    """
    times = np.asarray(times, dtype=np.float64)
    N = np.asarray(N, dtype=np.float64)
    if times.size < 3 or not np.any(N > 0):
        return OscillationMeasurement(status='too few samples')

    #lowest sample of every stretch below the depth threshold
    labels, count = scipy.ndimage.label(N < depth * N.max())
    lowest = scipy.ndimage.minimum_position(N, labels, np.arange(1, count + 1))
    minima, indices = [], []
    for (i,) in lowest:
        if i == len(N) - 1 and i > 0:
            #run cut off by the end of the series
            continue
        minima.append(_refine(times, N, i)[0])
        indices.append(i)
    if len(minima) < 2:
        return OscillationMeasurement(minima=minima, status='fewer than two minima within t_max')

    first, second = indices[0], indices[1]
    i = first + int(np.argmax(N[first:second + 1]))
    t_half, amplitude = _refine(times, N, i)
    return OscillationMeasurement(period=float(np.mean(np.diff(minima))), amplitude=float(amplitude),
        t_half=float(t_half), minima=[float(t) for t in minima], status='ok')


def fitAmplitudeExponent(points):
    """
    Least-squares slope alpha of log N(t0/2) = alpha log(delta_n) + c over the measured oscillating points
    """
    usable = [p for p in points if p.amplitude and p.amplitude > 0 and p.delta_n != 0]
    if len({abs(p.delta_n) for p in usable}) < 2:
        return None
    x = np.log([abs(p.delta_n) for p in usable])
    y = np.log([p.amplitude for p in usable])
    return float(np.polyfit(x, y, 1)[0])


def _plain(value):
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    return value


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return '%.12e' % value
    return value


def runDetuningSweep(parameters, **kwargs):
    return DetuningSweep(parameters, **kwargs)


OscillationMeasurement = namedtuple('OscillationMeasurement',
    ['period',      #Mean spacing of successive minima
    'amplitude',    #Largest N between the first two minima
    't_half',       #Time of that maximum
    'minima',       #Refined times of the minima, the first one at t=0
    'status'],
    {'minima': [],
     'status': 'ok'})


DetuningPoint = namedtuple('DetuningPoint',
    ['n',
    'delta_n',
    'gamma',
    'regime',           #exponential, quadratic or oscillating
    'complete',         #Run reached t_max
    'period',           #Measured oscillation period
    'predicted_period',
    'period_error',     #Relative deviation of the measured period
    'amplitude',        #N(t0/2)
    't_half',
    'final_E',          #Radiated energy at the last checkpoint
    'predicted_E',      #Analytic energy in the branch selected by gamma
    'status'])
