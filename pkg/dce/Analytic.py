from __future__ import division
from __future__ import absolute_import
#Small-amplitude predictions for a Dirichlet cavity of unit length driven by l(t) = 1 + epsilon sin(omega t)
#near the resonance omega = 2 n pi. They are used as oracles and as overlay columns.
import numpy as np
from . import Constants
from .Utils import ResonancePrediction

RESONANCE_TOLERANCE = 1e-9 #gamma below this counts as exact resonance


def _checkTime(t):
    if np.any(np.asarray(t) < 0):
        raise ValueError('Prediction requested for negative time')


def predictNTotal(n, epsilon, t):
    """
    Short-time total particle number at resonance, N(t) = n(4n^2-1)(epsilon pi t)^2/12
    """
    _checkTime(t)
    return n * (4 * n**2 - 1) * (epsilon * np.pi * np.asarray(t))**2 / 12.


def predictSpectrum(n, epsilon, t, k):
    """
    Parabolic short-time spectrum N_k(t) = (2n-k)k(epsilon pi t)^2/4 for k < 2n, zero otherwise
    """
    _checkTime(t)
    k = np.asarray(k, dtype=np.float64)
    if np.any(k < 1):
        raise ValueError('Mode index must be at least 1')
    value = (2 * n - k) * k * (epsilon * np.pi * np.asarray(t))**2 / 4.
    return np.where(k < 2 * n, value, 0.)


def predictE(n, epsilon, t, gamma=0.):
    """
    Radiated energy for detuning gamma:
      gamma < 1: exponential growth (pi/12)(4n^2-1) sinh^2(n sqrt(1-gamma^2) pi epsilon t)/(1-gamma^2)
      gamma = 1: quadratic growth (pi/3)(4n^2-1)(n pi epsilon t/2)^2
      gamma > 1: oscillation (pi/12)(4n^2-1) sin^2(n sqrt(gamma^2-1) pi epsilon t)/(gamma^2-1)
    """
    _checkTime(t)
    if gamma < 0:
        raise ValueError('Detuning parameter gamma must be non-negative, got %g' % gamma)
    t = np.asarray(t, dtype=np.float64)
    weight = 4 * n**2 - 1
    if gamma == 1:
        return (np.pi / 3.) * weight * (n * np.pi * epsilon * t / 2.)**2
    if gamma < 1:
        root = np.sqrt(1 - gamma**2)
        return (np.pi / 12.) * weight * np.sinh(n * root * np.pi * epsilon * t)**2 / (1 - gamma**2)
    root = np.sqrt(gamma**2 - 1)
    return (np.pi / 12.) * weight * np.sin(n * root * np.pi * epsilon * t)**2 / (gamma**2 - 1)


def predictPeriod(n, gamma, epsilon):
    """
    Period t0 = 1/(n epsilon sqrt(gamma^2-1)) of the particle number and energy oscillations
    """
    if gamma <= 1:
        raise ValueError('Oscillations need gamma > 1, got %g' % gamma)
    return 1. / (n * epsilon * np.sqrt(gamma**2 - 1))


def coupledModeSet(n):
    """
    Predicate telling whether mode k can be excited at the resonance omega = 2 n pi.
    Modes k = 2np, p = 1, 2, ... are never coupled.
    """
    order = 2 * n
    if order < 1 or abs(order - round(order)) > 1e-12:
        raise ValueError('Resonance index must be a positive integer or half-integer, got %g' % n)
    order = int(round(order))

    def isCoupled(k):
        return k % order != 0
    return isCoupled


def resonanceParameters(omega, l0=Constants.DEFAULT_L0):
    """
    Splits a drive frequency into the nearest resonance index n (integer or half-integer) and
    the detuning delta_n, omega = 2 pi (n + delta_n) / l0
    """
    x = omega * l0 / (2 * np.pi)
    n = np.round(2 * x) / 2.
    return float(n), float(x - n)


def detuningParameter(delta_n, n, epsilon):
    """
    gamma = |delta_n| / (n epsilon); with epsilon = 1e-3 this is delta_n * 1e3 / n
    """
    return abs(delta_n) / (n * epsilon)


def prediction(omega, epsilon, t, l0=Constants.DEFAULT_L0):
    """
    Analytic overlay for a sinusoidal run, or None when omega is below the lowest resonance.
    Times are measured in units of l0 and the energy scales as 1/l0.
    """
    n, delta_n = resonanceParameters(omega, l0)
    if n < 0.5 or epsilon <= 0:
        return None
    gamma = detuningParameter(delta_n, n, epsilon)
    tau = t / l0
    resonant = gamma < RESONANCE_TOLERANCE
    return ResonancePrediction(
        n=n,
        delta_n=delta_n,
        epsilon=epsilon,
        gamma=gamma,
        t=t,
        N_total=float(predictNTotal(n, epsilon, tau)) if resonant else None,
        E_total=float(predictE(n, epsilon, tau, 0. if resonant else gamma)) / l0,
        short_time=bool(epsilon * np.pi * tau < Constants.SHORT_TIME_LIMIT),
        small_amplitude=bool(epsilon < Constants.SMALL_AMPLITUDE_LIMIT))
