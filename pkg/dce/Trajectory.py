from __future__ import division
from __future__ import absolute_import
from builtins import object
import numpy as np
import scipy.interpolate
from . import Constants


class TrajectoryRangeError(ValueError):
    """
    Raised when the motion is queried outside the tabulated times
    """
    def __init__(self, message, t):
        super(TrajectoryRangeError, self).__init__(message)
        self.t = t


class Trajectory(object):
    """
    Prescribed motion l(t) of the moving cavity wall, in units with hbar=c=1.
    The wall at x=0 is fixed; l(t) is the position of the second wall.
    Attributes:
        kind (str): 'static', 'sinusoidal' or 'tabulated'
        l0 (float): initial cavity length
        epsilon (float): relative amplitude of the sinusoidal motion
        omega (float): angular frequency of the sinusoidal motion
        t_end (float): if set, the wall stops at l(t_end) and rests afterwards
        table_path (str): two-column text file (t, l) for tabulated motion
    """

    def __init__(self,
            kind='sinusoidal',
            l0=Constants.DEFAULT_L0,
            epsilon=Constants.DEFAULT_EPSILON,
            omega=2*np.pi,
            t_end=None,
            table_path=None,
            table=None):

        if kind not in Constants.TRAJECTORY_KINDS:
            raise ValueError('Unknown trajectory kind %r, expected one of %s' % (kind, Constants.TRAJECTORY_KINDS))
        if t_end is not None and t_end < 0:
            raise ValueError('t_end must be non-negative, got %g' % t_end)

        self.kind = kind
        self.t_start = 0.
        self.t_end = t_end
        self.table_path = table_path
        self._interpolant = None

        if kind == 'tabulated':
            if table is None:
                if not table_path:
                    raise ValueError('Tabulated trajectory needs a table_path')
                table = np.loadtxt(table_path, ndmin=2)
            self._setTable(np.asarray(table, dtype=np.float64))
            self.l0 = float(self._interpolant(self._times[0]))
            self.epsilon = 0.
            self.omega = 0.
            return

        if l0 <= 0:
            raise ValueError('Cavity length l0 must be positive, got %g' % l0)
        self.l0 = float(l0)
        self.epsilon = float(epsilon) if kind == 'sinusoidal' else 0.
        self.omega = float(omega) if kind == 'sinusoidal' else 0.
        if abs(self.epsilon) >= 1:
            raise ValueError('Amplitude |epsilon| must stay below 1 so that l(t) > 0, got %g' % self.epsilon)


    def _setTable(self, table):
        if table.ndim != 2 or table.shape[1] < 2 or table.shape[0] < 2:
            raise ValueError('Trajectory table needs at least two rows of (t, l)')
        times, lengths = table[:, 0], table[:, 1]
        if np.any(np.diff(times) <= 0):
            raise ValueError('Trajectory table times must be strictly ascending')
        if np.any(lengths <= 0):
            raise ValueError('Trajectory table lengths must be positive')
        #Monotone cubic: no overshoot between nodes, continuous derivative for l_dot/l
        self._times = times
        self._interpolant = scipy.interpolate.PchipInterpolator(times, lengths, extrapolate=False)
        self._velocity = self._interpolant.derivative(1)
        self._acceleration = self._interpolant.derivative(2)


    @property
    def hasAnalyticAcceleration(self):
        return self.kind != 'tabulated'


    def _frozenTime(self, t):
        """
        Returns the time at which the motion is evaluated and whether the wall has stopped
        """
        if self.t_end is not None and t > self.t_end:
            return self.t_end, True
        return t, False


    def _check(self, t):
        """
        Validates a query time and returns (effective time, stopped)
        """
        if t < 0:
            raise ValueError('Trajectory queried at negative time t=%g' % t)
        t_eff, stopped = self._frozenTime(t)
        if self.kind == 'tabulated' and (t_eff < self._times[0] or t_eff > self._times[-1]):
            raise TrajectoryRangeError('Time t=%g outside trajectory table range [%g, %g]' % (t, self._times[0], self._times[-1]), t)
        return t_eff, stopped


    def evaluate(self, t):
        """
        Cavity length and wall velocity at time t
        Arguments:
          t: time, t >= 0
        Output:
          l, l_dot
        """
        t, stopped = self._check(t)

        if self.kind == 'static':
            return self.l0, 0.
        if self.kind == 'sinusoidal':
            phase = self.omega * t
            l = self.l0 * (1 + self.epsilon * np.sin(phase))
            l_dot = 0. if stopped else self.l0 * self.epsilon * self.omega * np.cos(phase)
            return l, l_dot

        l = float(self._interpolant(t))
        l_dot = 0. if stopped else float(self._velocity(t))
        return l, l_dot


    def acceleration(self, t):
        """
        Wall acceleration; only the builtin kinds provide it analytically
        """
        t, stopped = self._check(t)
        if stopped or self.kind == 'static':
            return 0.
        if self.kind == 'sinusoidal':
            return -self.l0 * self.epsilon * self.omega**2 * np.sin(self.omega * t)
        return float(self._acceleration(t))


    def initialVelocityDiscontinuity(self):
        """
        Jump of the wall velocity when the motion is switched on at t=0 (the wall rests before).
        A nonzero value means M(0) enters the initial conditions of the mode functions.
        """
        return self.evaluate(self.t_start if self.kind != 'tabulated' else self._times[0])[1]


    def coveredRange(self):
        """
        Time interval on which the motion is known; a wall stopped inside the table rests forever after
        """
        if self.kind != 'tabulated':
            return self.t_start, np.inf
        if self.t_end is not None and self.t_end <= self._times[-1]:
            return self._times[0], np.inf
        return self._times[0], self._times[-1]


    def isMoving(self, t):
        _, l_dot = self.evaluate(t)
        return abs(l_dot) > Constants.VELOCITY_TOLERANCE * self.l0 * max(self.omega, 1.)


    def period(self):
        if self.kind != 'sinusoidal' or self.omega == 0:
            return None
        return 2 * np.pi / self.omega


    def describe(self):
        if self.kind == 'sinusoidal':
            return 'sinusoidal l0=%g epsilon=%g omega=%g' % (self.l0, self.epsilon, self.omega)
        if self.kind == 'tabulated':
            return 'tabulated %s' % self.table_path
        return 'static l0=%g' % self.l0
