from __future__ import division
from __future__ import absolute_import
from builtins import object
import numpy as np
from . import Constants
from . import Dynamics as dyn
from . import Observables as obs
from .Integrator import integrate
from .Utils import EvolutionState, SecondOrderState, flatten, unflatten


class Propagator(object):
    """
    Glue between one formulation of the mode dynamics and the integrator: packs the state into a
    flat complex vector, evaluates its time derivative and turns it into Bogoliubov coefficients.
    """
    name = None

    def __init__(self, system, trajectory):
        self.system = system
        self.trajectory = trajectory
        self.k_max = system.k_max
        self._stopped = False

    def initialState(self):
        raise NotImplementedError

    def derivative(self, t, y):
        raise NotImplementedError

    def bogoliubov(self, t, y):
        raise NotImplementedError

    def __call__(self, t, y):
        return self.derivative(t, y)

    def switchTimes(self, t_last):
        """
        Times in [0, t_last) where the wall motion switches; steps never straddle them
        """
        t_end = self.trajectory.t_end
        if t_end is None or t_end >= t_last:
            return []
        return [t_end]

    def crossSwitch(self, t, y):
        self._stopped = True
        return y

    def _wall(self, t):
        """
        l and l_dot seen by the derivative: zero velocity from the stop on, t_end included
        """
        l, l_dot = self.trajectory.evaluate(t)
        return (l, 0.) if self._stopped else (l, l_dot)

    def propagate(self, checkpoints, cfg=None):
        """
        Integrate from the initial state at t=0 through the checkpoints. The integration is split at the
        switch times and crossSwitch maps the state across each of them; a checkpoint on a switch time
        gets the state from before the switch.
        Arguments:
          checkpoints: ascending times, the first one >= 0
          cfg: StepperConfig
        Output:
          generator of (t, y) pairs
        """
        checkpoints = np.asarray(checkpoints, dtype=np.float64)
        if checkpoints.size == 0:
            return
        self._stopped = False
        t0, y0 = 0., self.initialState()
        for switch in self.switchTimes(checkpoints[-1]) + [None]:
            if switch is None:
                segment, stops = checkpoints, checkpoints
            else:
                segment = checkpoints[checkpoints <= switch]
                stops = segment if segment.size and segment[-1] == switch else np.append(segment, switch)
            y = y0
            for i, (t, y) in enumerate(integrate(self, y0, t0, stops, cfg)):
                if i < segment.size:
                    yield t, y
            if switch is None:
                return
            t0, y0 = switch, self.crossSwitch(switch, y)
            checkpoints = checkpoints[checkpoints > switch]


class XiEtaPropagator(Propagator):
    name = 'xi_eta'

    def initialState(self):
        state = dyn.initialXiEta(self.system)
        return flatten(state.xi, state.eta)

    def unpack(self, t, y):
        xi, eta = unflatten(y, self.k_max)
        return EvolutionState(t, xi, eta)

    def derivative(self, t, y):
        l, l_dot = self._wall(t)
        dxi, deta = dyn.rhsXiEta(self.unpack(t, y), dyn.coefficients(self.system, l, l_dot, t))
        return np.concatenate((dxi.ravel(), deta.ravel()))

    def bogoliubov(self, t, y):
        l, _ = self.trajectory.evaluate(t)
        return obs.extractBogoliubov(self.unpack(t, y), self.system, l, self.trajectory.isMoving(t))


class BogoliubovPropagator(Propagator):
    name = 'bogoliubov'

    def initialState(self):
        return flatten(*dyn.initialAB(self.system))

    def derivative(self, t, y):
        A, B = unflatten(y, self.k_max)
        l, l_dot = self._wall(t)
        dA, dB = dyn.rhsAB(A, B, self.system, l, l_dot)
        return np.concatenate((dA.ravel(), dB.ravel()))

    def bogoliubov(self, t, y):
        A, B = unflatten(y, self.k_max)
        l, _ = self.trajectory.evaluate(t)
        return obs.pairFromAB(t, A, B, self.system, l, self.trajectory.isMoving(t))


class SecondOrderPropagator(Propagator):
    """
    Mode functions epsilon_n^(m) of the second-order equations, integrated as (eps, eps_dot).
    Needs the wall acceleration for dM/dt, so tabulated motion is rejected.
    When the wall stops at t_end with a finite velocity M jumps to zero and dM/dt carries a delta. The
    conjugate momentum eps_dot + M^T eps stays continuous, so eps_dot is kicked by M(t_end)^T eps there.
    """
    name = 'second_order'

    def __init__(self, system, trajectory):
        if not trajectory.hasAnalyticAcceleration:
            raise ValueError('The second-order formulation needs an analytic wall acceleration; %s trajectories are not supported' % trajectory.kind)
        super(SecondOrderPropagator, self).__init__(system, trajectory)

    def initialState(self):
        state = dyn.initialEpsilon(self.system, self.trajectory)
        return flatten(state.eps, state.eps_dot)

    def unpack(self, t, y):
        eps, eps_dot = unflatten(y, self.k_max)
        return SecondOrderState(t, eps, eps_dot)

    def derivative(self, t, y):
        state = self.unpack(t, y)
        l, l_dot = self._wall(t)
        l_ddot = 0. if self._stopped else self.trajectory.acceleration(t)
        M_dot = self.system.couplingRate(l, l_dot, l_ddot)
        eps_ddot = dyn.rhsEpsilon(state, self.system, l, l_dot, M_dot)
        return np.concatenate((state.eps_dot.ravel(), eps_ddot.ravel()))

    def crossSwitch(self, t, y):
        state = self.unpack(t, y)
        l, l_dot = self.trajectory.evaluate(t)
        M = self.system.coupling(l, l_dot)
        super(SecondOrderPropagator, self).crossSwitch(t, y)
        return flatten(state.eps, state.eps_dot + M.T.dot(state.eps))

    def bogoliubov(self, t, y):
        l, l_dot = self.trajectory.evaluate(t)
        return obs.extractFromEpsilon(self.unpack(t, y), self.system, l, l_dot, self.trajectory.isMoving(t))

    def xiEta(self, t, y):
        l, l_dot = self.trajectory.evaluate(t)
        return obs.xiEtaFromEpsilon(self.unpack(t, y), self.system, l, l_dot)


PROPAGATORS = {cls.name: cls for cls in (XiEtaPropagator, BogoliubovPropagator, SecondOrderPropagator)}


def makePropagator(formulation, system, trajectory):
    if formulation not in PROPAGATORS:
        raise ValueError('Unknown formulation %r, expected one of %s' % (formulation, Constants.FORMULATIONS))
    return PROPAGATORS[formulation](system, trajectory)
