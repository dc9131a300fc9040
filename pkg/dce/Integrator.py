from __future__ import division
from __future__ import absolute_import
import numpy as np
import scipy.integrate
from . import Constants
from .Utils import namedtuple


class IntegrationError(RuntimeError):
    """
    Raised when the stepper cannot reach the next checkpoint
    """
    def __init__(self, message, t, code=None):
        super(IntegrationError, self).__init__('%s (t = %g)' % (message, t))
        self.t = t
        self.code = code


#Return codes of the dop853/dopri5 drivers
RETURN_MESSAGES = {
    -1: 'input is not consistent',
    -2: 'larger max_steps is needed',
    -3: 'step size underflow',
    -4: 'problem is probably stiff'}


def componentScale(y0):
    """
    sqrt of the number of real components the solver sees for the complex state y0
    """
    return np.sqrt(2. * np.asarray(y0).size)


def makeSolver(rhs, y0, t0, cfg):
    """
    Embedded Dormand-Prince stepper on the complex state. complex_ode advances the state as interleaved
    real pairs and the drivers accept a step when the RMS of err_i / (atol + rtol*|y_i|) over all of them is
    below one. Both tolerances are divided by sqrt(number of real components), which bounds every
    component by abs_tol + rtol*|y_i| on its own.
    """
    if cfg.method not in Constants.METHODS:
        raise ValueError('Unknown integration method %r, expected one of %s' % (cfg.method, Constants.METHODS))
    if cfg.abs_tol <= 0 or cfg.rel_tol <= 0:
        raise ValueError('Tolerances must be positive, got abs_tol=%g rel_tol=%g' % (cfg.abs_tol, cfg.rel_tol))

    scale = componentScale(y0)
    options = {'atol': cfg.abs_tol / scale, 'rtol': cfg.rel_tol / scale, 'nsteps': int(cfg.max_steps)}
    if cfg.initial_step:
        if cfg.initial_step < 0:
            raise ValueError('initial_step must be positive, got %g' % cfg.initial_step)
        options['first_step'] = cfg.initial_step
    if cfg.max_step:
        options['max_step'] = cfg.max_step

    solver = scipy.integrate.complex_ode(rhs)
    solver.set_integrator(cfg.method, **options)
    solver.set_initial_value(np.asarray(y0, dtype=np.complex128), t0)
    return solver


def integrate(rhs, y0, t0, checkpoints, cfg=None):
    """
    Integrate y' = rhs(t, y) and deliver the state at each checkpoint. Steps are clamped so that every
    checkpoint is hit exactly; the step size adapts freely in between.
    Arguments:
      rhs: callable (t, y) -> dy/dt on flat complex arrays
      y0: initial state at t0
      checkpoints: ascending times, the first one >= t0
      cfg: StepperConfig
    Output:
      generator of (t, y) pairs; y is a fresh array
    """
    cfg = cfg if cfg is not None else StepperConfig()
    checkpoints = np.asarray(checkpoints, dtype=np.float64)
    if checkpoints.size == 0:
        return
    if checkpoints[0] < t0:
        raise ValueError('First checkpoint %g lies before the start time %g' % (checkpoints[0], t0))
    if np.any(np.diff(checkpoints) <= 0):
        raise ValueError('Checkpoints must be strictly ascending')

    solver = makeSolver(rhs, y0, t0, cfg)
    for t in checkpoints:
        if t == t0:
            yield t, np.array(y0, dtype=np.complex128)
            continue
        y = solver.integrate(t)
        if not solver.successful():
            code = solver.get_return_code()
            raise IntegrationError('Integration failed: %s' % RETURN_MESSAGES.get(code, 'return code %s' % code), solver.t, code)
        if not np.all(np.isfinite(y)):
            raise IntegrationError('Non-finite values in state', t)
        yield t, np.array(y)


def fixedStepConfig(h, method=Constants.DEFAULT_METHOD):
    """
    Stepper that takes steps of exactly h: error control is switched off by loose tolerances
    """
    return StepperConfig(abs_tol=1., rel_tol=1., initial_step=h, max_step=h, method=method)


StepperConfig = namedtuple('StepperConfig',
    ['abs_tol',
    'rel_tol',
    'initial_step',     #0 lets the solver pick the first step
    'max_step',         #0 means unlimited
    'method',
    'max_steps'],       #step budget per checkpoint segment
    {'abs_tol': Constants.ABS_TOL,
     'rel_tol': Constants.REL_TOL,
     'initial_step': 0.,
     'max_step': 0.,
     'method': Constants.DEFAULT_METHOD,
     'max_steps': Constants.MAX_STEPS})
