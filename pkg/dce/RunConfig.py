from __future__ import division
from __future__ import absolute_import
"""
Run configuration: a flat key=value text file with dotted section names, e.g.

    # omega = 3 pi resonance
    trajectory.kind = sinusoidal
    trajectory.omega = 3pi
    modes.k_max = 60
    integrator.abs_tol = 1e-8
    schedule.t_max = 250

Values may be numbers, multiples of pi (`3pi`, `3*pi`, `pi`), booleans (true/false/yes/no),
comma-separated lists, or strings. Detuning points are written as `n:delta_n`.
"""
import re
import numpy as np
from . import Constants
from .Integrator import StepperConfig
from .ModeSystem import ModeSystem
from .Trajectory import Trajectory
from .Utils import namedtuple

_PI_PATTERN = re.compile(r'^\s*([-+]?[0-9.eE+-]*)\s*\*?\s*pi\s*$')


def _float(text):
    text = str(text).strip()
    match = _PI_PATTERN.match(text)
    if match:
        factor = match.group(1)
        return (float(factor) if factor not in ('', '+', '-') else float(factor + '1')) * np.pi
    return float(text)


def _int(text):
    value = _float(text)
    if value != int(value):
        raise ValueError('Expected an integer, got %s' % text)
    return int(value)


def _bool(text):
    text = str(text).strip().lower()
    if text in ('true', 'yes', '1', 'on'):
        return True
    if text in ('false', 'no', '0', 'off'):
        return False
    raise ValueError('Expected a boolean, got %s' % text)


def _str(text):
    text = str(text).strip()
    return text if text and text.lower() != 'none' else None


def _optionalFloat(text):
    return None if _str(text) is None else _float(text)


def _list(converter):
    def convert(text):
        return [converter(item) for item in str(text).split(',') if item.strip()]
    return convert


def parsePair(text):
    n, _, delta_n = str(text).partition(':')
    if not delta_n:
        raise ValueError('Detuning points are written n:delta_n, got %s' % text)
    return (_float(n), _float(delta_n))


#dotted config key -> (RunParameters field, converter)
KEYS = {
    'trajectory.kind': ('kind', _str),
    'trajectory.l0': ('l0', _float),
    'trajectory.epsilon': ('epsilon', _float),
    'trajectory.omega': ('omega', _float),
    'trajectory.t_end': ('t_end', _optionalFloat),
    'trajectory.table_path': ('table_path', _str),
    'modes.k_max': ('k_max', _int),
    'modes.mass': ('mass', _float),
    'integrator.method': ('method', _str),
    'integrator.abs_tol': ('abs_tol', _float),
    'integrator.rel_tol': ('rel_tol', _float),
    'integrator.initial_step': ('initial_step', _float),
    'integrator.max_step': ('max_step', _float),
    'integrator.max_steps': ('max_steps', _int),
    'schedule.t_max': ('t_max', _float),
    'schedule.interval': ('interval', _float),
    'schedule.t_probe': ('t_probe', _list(_float)),
    'run.formulation': ('formulation', _str),
    'sweep.k_max': ('sweep_k_max', _list(_int)),
    'sweep.detuning': ('detuning', _list(parsePair)),
    'sweep.stability_threshold': ('stability_threshold', _float),
    'output.directory': ('directory', _str),
    'output.prefix': ('prefix', _str),
    'output.report_modes': ('report_modes', _int),
    'output.hdf5': ('hdf5', _bool),
}


def readConfig(path):
    """
    Reads a config file into a dict of dotted key -> raw string
    """
    raw = {}
    with open(path) as f:
        for number, line in enumerate(f, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition('=')
            if not sep:
                raise ValueError('%s:%d: expected key = value, got %r' % (path, number, line))
            raw[key.strip()] = value.strip()
    return raw


def parseOverrides(items):
    """
    'section.key=value' strings from the command line
    """
    raw = {}
    for item in items or ():
        key, sep, value = item.partition('=')
        if not sep:
            raise ValueError('Override must look like section.key=value, got %r' % item)
        raw[key.strip()] = value.strip()
    return raw


def buildParameters(raw=None, **overrides):
    """
    Converts raw dotted entries into validated RunParameters. Keyword overrides use field names.
    """
    values = {}
    for key, text in (raw or {}).items():
        if key not in KEYS:
            raise ValueError('Unknown config key %r' % key)
        field, converter = KEYS[key]
        try:
            values[field] = converter(text)
        except ValueError as error:
            raise ValueError('Bad value for %s: %s' % (key, error))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return validate(RunParameters(**values))


def loadParameters(path=None, overrides=(), **fields):
    raw = readConfig(path) if path else {}
    raw.update(parseOverrides(overrides))
    return buildParameters(raw, **fields)


def validate(params):
    if params.kind not in Constants.TRAJECTORY_KINDS:
        raise ValueError('trajectory.kind must be one of %s, got %r' % (Constants.TRAJECTORY_KINDS, params.kind))
    if params.formulation not in Constants.FORMULATIONS:
        raise ValueError('run.formulation must be one of %s, got %r' % (Constants.FORMULATIONS, params.formulation))
    if params.method not in Constants.METHODS:
        raise ValueError('integrator.method must be one of %s, got %r' % (Constants.METHODS, params.method))
    if params.t_max <= 0:
        raise ValueError('schedule.t_max must be positive, got %g' % params.t_max)
    if params.interval <= 0:
        raise ValueError('schedule.interval must be positive, got %g' % params.interval)
    if params.k_max < 1:
        raise ValueError('modes.k_max must be at least 1, got %d' % params.k_max)
    if params.kind == 'tabulated' and not params.table_path:
        raise ValueError('Tabulated trajectories need trajectory.table_path')
    for t in params.t_probe or ():
        if t < 0 or t > params.t_max:
            raise ValueError('Probe time %g outside [0, t_max]' % t)

    smallest = min([params.k_max] + list(params.sweep_k_max or []))
    report_modes = params.report_modes
    if report_modes is None:
        report_modes = min(smallest, Constants.MAX_REPORT_MODES)
    if report_modes < 1 or report_modes > smallest:
        raise ValueError('output.report_modes=%d must lie in [1, %d], the smallest k_max of the run' % (report_modes, smallest))
    return params._replace(report_modes=report_modes)


def checkpoints(params):
    """
    Extraction times 0, interval, 2*interval, ... up to t_max, plus any probe times
    """
    count = int(np.floor(params.t_max / params.interval + 1e-9))
    times = params.interval * np.arange(count + 1)
    if params.t_max - times[-1] > 1e-9 * params.t_max:
        times = np.append(times, params.t_max)
    if params.t_probe:
        times = np.union1d(times, np.asarray(params.t_probe, dtype=np.float64))
    return times


def probeTimes(params):
    return list(params.t_probe) if params.t_probe else [params.t_max]


def makeTrajectory(params, omega=None):
    """
    Builds the wall motion and checks that it is known on all of [0, t_max]
    """
    trajectory = Trajectory(kind=params.kind, l0=params.l0, epsilon=params.epsilon,
        omega=params.omega if omega is None else omega, t_end=params.t_end, table_path=params.table_path)
    start, stop = trajectory.coveredRange()
    if start > 0 or stop < params.t_max:
        raise ValueError('Trajectory table %s covers [%g, %g] but the run needs [0, %g]; '
            'extend the table or set trajectory.t_end inside it' % (params.table_path, start, stop, params.t_max))
    return trajectory


def makeModeSystem(params, trajectory, k_max=None):
    return ModeSystem(k_max=params.k_max if k_max is None else k_max, mass=params.mass, l0=trajectory.l0)


def makeStepperConfig(params):
    return StepperConfig(abs_tol=params.abs_tol, rel_tol=params.rel_tol, initial_step=params.initial_step,
        max_step=params.max_step, method=params.method, max_steps=params.max_steps)


def asDict(params):
    """
    Plain dict view for summaries and HDF5 files; None entries are dropped
    """
    out = {}
    for key, value in params._asdict().items():
        if value is None:
            continue
        if key == 'detuning':
            value = ['%g:%g' % pair for pair in value]
        out[key] = value
    return out


RunParameters = namedtuple('RunParameters',
    ['kind',                #Trajectory kind
    'l0',                   #Initial cavity length
    'epsilon',              #Relative amplitude
    'omega',                #Drive frequency
    't_end',                #Time the motion stops, None to keep moving
    'table_path',           #(t, l) table for tabulated motion
    'k_max',                #Mode cut-off
    'mass',                 #Field mass
    'method',               #dop853 or dopri5
    'abs_tol',
    'rel_tol',
    'initial_step',
    'max_step',
    'max_steps',
    't_max',                #End of the integration
    'interval',             #Spacing of the checkpoints
    't_probe',              #Times compared in convergence reports
    'formulation',          #xi_eta, bogoliubov or second_order
    'sweep_k_max',          #Cut-offs of a convergence sweep
    'detuning',             #(n, delta_n) points of a detuning sweep
    'stability_threshold',
    'directory',            #Output directory
    'prefix',               #Output file prefix
    'report_modes',         #Number of N_k columns written
    'hdf5'],                #Also store the run as HDF5
    {'kind': 'sinusoidal',
     'l0': Constants.DEFAULT_L0,
     'epsilon': Constants.DEFAULT_EPSILON,
     'omega': 2 * np.pi,
     'k_max': Constants.DEFAULT_K_MAX,
     'mass': 0.,
     'method': Constants.DEFAULT_METHOD,
     'abs_tol': Constants.ABS_TOL,
     'rel_tol': Constants.REL_TOL,
     'initial_step': 0.,
     'max_step': 0.,
     'max_steps': Constants.MAX_STEPS,
     't_max': Constants.DEFAULT_T_MAX,
     'interval': Constants.CHECKPOINT_INTERVAL,
     'formulation': 'xi_eta',
     'stability_threshold': Constants.STABILITY_THRESHOLD,
     'directory': '.',
     'prefix': 'dce',
     'hdf5': False})
