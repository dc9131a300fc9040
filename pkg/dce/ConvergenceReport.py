from __future__ import print_function
from __future__ import division
from __future__ import absolute_import
from builtins import object
import csv
import json
import os
import warnings
import numpy as np
from . import Constants
from . import RunConfig
from .CavityRun import CavityRun
from .UtilsParallel import divideTasks, gatherResults, rank, size

"""
    Cut-off convergence study: repeats a run for every k_max of the sweep and compares the total
    particle number and the single-mode numbers at the probe times.
    Attributes:
        parameters (RunParameters): run configuration with sweep_k_max holding at least two values
        save_to_file (bool): write per-k_max runs plus the report CSV and JSON
"""

class ConvergenceReport(object):

    def __init__(self, parameters, save_to_file=True, verbose=True):
        k_max_values = sorted(set(parameters.sweep_k_max or []))
        if len(k_max_values) < 2:
            raise ValueError('A convergence sweep needs at least two k_max values, got %s' % parameters.sweep_k_max)
        self.parameters = RunConfig.validate(parameters)
        self.k_max_values = k_max_values
        self.probe_times = RunConfig.probeTimes(self.parameters)
        self.files = {}

        if verbose and rank == 0:
            print('Convergence sweep')
            print('\t k_max values: %s' % ', '.join(str(k) for k in k_max_values))
            print('\t Probe times: %s' % ', '.join('%g' % t for t in self.probe_times))
            print('\t Stability threshold: %g' % self.parameters.stability_threshold)

        local = {}
        for task in divideTasks(len(k_max_values), rank, size):
            k_max = k_max_values[task]
            run = CavityRun(self.parameters, label='%s_kmax%d' % (self.parameters.prefix, k_max),
                save_to_file=save_to_file, verbose=verbose and size == 1, k_max=k_max)
            local[task] = _probeSpectra(run, self.probe_times, self.parameters.report_modes)
        results = gatherResults(local, len(k_max_values))

        #only rank 0 holds the gathered spectra
        self.report = None
        if results is None:
            return
        self.report = buildConvergenceReport(k_max_values, self.probe_times, results,
            self.parameters.stability_threshold, self.parameters.report_modes)
        for k_max in self.report['failed']:
            warnings.warn_explicit('Convergence point k_max=%d failed' % k_max, UserWarning, 'DCE', 0)
        for t, k in self.report['unstable_modes']:
            warnings.warn_explicit('Mode %d is not converged in k_max at t=%g' % (k, t), UserWarning, 'DCE', 0)
        if save_to_file:
            self._write()


    @property
    def failed(self):
        return bool(self.report and self.report['failed'])


    def _write(self):
        stem = os.path.join(self.parameters.directory, '%s_%s' % (self.parameters.prefix, Constants.CONVERGENCE_FILE_NAME))
        self.files['csv'] = stem + Constants.CSV_SUFFIX
        self.files['summary'] = stem + Constants.SUMMARY_SUFFIX
        report = self.report
        modes = report['report_modes']
        with open(self.files['csv'], 'w') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(['t_probe', 'k_max', 'N_total'] + ['N_%d' % k for k in range(1, modes + 1)])
            for i, t in enumerate(report['probe_times']):
                for j, k_max in enumerate(report['k_max_values']):
                    if k_max in report['failed']:
                        writer.writerow(['%.10g' % t, k_max] + [''] * (modes + 1))
                        continue
                    writer.writerow(['%.10g' % t, k_max, '%.12e' % report['N_total'][i][j]]
                        + ['%.12e' % n for n in report['N_k'][i][j]])
        with open(self.files['summary'], 'w') as f:
            json.dump(_jsonReady(report), f, indent=2, sort_keys=True)


def _probeSpectra(run, probe_times, report_modes):
    """
    (N_total, N_k) of a run at every probe time, None for probes the run did not reach
    """
    out = []
    for t in probe_times:
        record = run.spectrumAt(t)
        out.append(None if record is None else (record.N_total, np.array(record.N_k[:report_modes])))
    return out


def buildConvergenceReport(k_max_values, probe_times, spectra, threshold=Constants.STABILITY_THRESHOLD, report_modes=None):
    """
    Tabulates particle numbers against the cut-off and decides which modes are converged
    Arguments:
      k_max_values: ascending cut-offs
      probe_times: times the runs are compared at
      spectra: per k_max, a list over probe times of (N_total, N_k) or None for failed points
      threshold: largest variation across k_max that still counts as stable
      report_modes: number of modes compared
    Output:
      dict with the N_total and N_k tables, per-mode variation and verdicts, the variation of N_total
      and the recommended k_max (None when no cut-off is stable)
    """
    failed = [k for k, s in zip(k_max_values, spectra) if s is None or any(p is None for p in s)]
    good = [(k, s) for k, s in zip(k_max_values, spectra) if k not in failed]
    if report_modes is None:
        report_modes = min(len(p[1]) for _, s in good for p in s) if good else 0

    report = {'k_max_values': list(k_max_values), 'probe_times': list(probe_times), 'threshold': threshold,
        'report_modes': report_modes, 'failed': failed, 'N_total': [], 'N_k': [],
        'variation': [], 'total_variation': [], 'stable': [], 'unstable_modes': []}

    #recommended_from[j]: every cut-off from good[j] on agrees within the threshold at all probe times
    recommended_from = [True] * len(good)
    for i, t in enumerate(probe_times):
        totals = [s[i][0] if k not in failed else None for k, s in zip(k_max_values, spectra)]
        modes = [s[i][1][:report_modes] if k not in failed else None for k, s in zip(k_max_values, spectra)]
        report['N_total'].append(totals)
        report['N_k'].append(modes)
        if len(good) < 2:
            report['variation'].append(None)
            report['total_variation'].append(None)
            report['stable'].append(None)
            continue
        table = np.array([s[i][1][:report_modes] for _, s in good])
        variation = table.max(axis=0) - table.min(axis=0)
        total = np.array([s[i][0] for _, s in good])
        stable = variation < threshold
        report['variation'].append(variation.tolist())
        report['total_variation'].append(float(total.max() - total.min()))
        report['stable'].append(stable.tolist())
        report['unstable_modes'] += [(t, k + 1) for k in np.flatnonzero(~stable)]
        for j in range(len(good)):
            tail = table[j:]
            if np.any(tail.max(axis=0) - tail.min(axis=0) >= threshold):
                recommended_from[j] = False

    report['recommended_k_max'] = None
    if len(good) >= 2:
        for j, (k_max, _) in enumerate(good[:-1]):
            if recommended_from[j]:
                report['recommended_k_max'] = k_max
                break
    return report


def _jsonReady(value):
    if isinstance(value, dict):
        return {str(k): _jsonReady(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonReady(v) for v in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, np.bool_)):
        return value.item()
    return value


def runConvergence(parameters, **kwargs):
    return ConvergenceReport(parameters, **kwargs)
