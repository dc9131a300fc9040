from __future__ import division
from __future__ import absolute_import
#Bogoliubov coefficients, particle spectra and unitarity residuals at a checkpoint
import numpy as np
from .Utils import BogoliubovPair, BogoliubovResiduals, EvolutionState, ObservableRecord


def _deltas(system, l):
    omega1 = system.frequencies(l)
    ratio = system.initial_frequencies / omega1
    return omega1, 0.5 * (1 + ratio), 0.5 * (1 - ratio)


def _prefactor(system, omega1):
    #sqrt(Omega_n^1 / Omega_m^0) / 2 at [n, m]
    return 0.5 * np.sqrt(omega1[:, np.newaxis] / system.initial_frequencies[np.newaxis, :])


def extractBogoliubov(state, system, l, wall_moving=False):
    """
    Bogoliubov coefficients at t1 = state.t from the auxiliary functions.
    Arguments:
      state: EvolutionState at t1
      system: ModeSystem
      l: cavity length l(t1)
      wall_moving: whether l_dot(t1) != 0, carried along as the matching-problem flag
    Output:
      BogoliubovPair with
        A_mn = sqrt(Omega_n^1/Omega_m^0)/2 [Delta+_n xi_n^(m) + Delta-_n eta_n^(m)]
        B_mn = sqrt(Omega_n^1/Omega_m^0)/2 [Delta-_n xi_n^(m) + Delta+_n eta_n^(m)]
    """
    omega1, delta_plus, delta_minus = _deltas(system, l)
    prefactor = _prefactor(system, omega1)
    xi, eta = state.xi, state.eta
    A = prefactor * (delta_plus[:, np.newaxis] * xi + delta_minus[:, np.newaxis] * eta)
    B = prefactor * (delta_minus[:, np.newaxis] * xi + delta_plus[:, np.newaxis] * eta)
    return BogoliubovPair(state.t, A.T, B.T, delta_plus, delta_minus, omega1, bool(wall_moving))


def extractFromEpsilon(state, system, l, l_dot, wall_moving=None):
    """
    Bogoliubov coefficients straight from the second-order solution (epsilon, epsilon_dot) and M(t1)
    """
    omega1, delta_plus, delta_minus = _deltas(system, l)
    momentum = state.eps_dot + system.coupling(l, l_dot).T.dot(state.eps)
    prefactor = _prefactor(system, omega1)
    shift = 1j * momentum / omega1[:, np.newaxis]
    A = prefactor * (state.eps + shift)
    B = prefactor * (state.eps - shift)
    if wall_moving is None:
        wall_moving = l_dot != 0
    return BogoliubovPair(state.t, A.T, B.T, delta_plus, delta_minus, omega1, bool(wall_moving))


def xiEtaFromEpsilon(state, system, l, l_dot):
    """
    xi, eta = eps +- (i/Omega_n^0)[eps_dot_n + sum_k M_kn eps_k]
    """
    momentum = state.eps_dot + system.coupling(l, l_dot).T.dot(state.eps)
    shift = 1j * momentum / system.initial_frequencies[:, np.newaxis]
    return EvolutionState(state.t, state.eps + shift, state.eps - shift)


def pairFromAB(t1, A, B, system, l, wall_moving=False):
    omega1, delta_plus, delta_minus = _deltas(system, l)
    return BogoliubovPair(t1, A, B, delta_plus, delta_minus, omega1, bool(wall_moving))


def particlesAtInitialLength(state, system):
    """
    N_n = (1/4) sum_m (Omega_n^0/Omega_m^0) |eta_n^(m)|^2, valid only when l(t1) = l0
    """
    omega0 = system.initial_frequencies
    weight = omega0[:, np.newaxis] / omega0[np.newaxis, :]
    return 0.25 * np.sum(weight * np.abs(state.eta)**2, axis=1)


def bogoliubovResiduals(pair):
    """
    Deviation from the Bogoliubov relations
      sum_m [A_mn A*_mk - B*_mn B_mk] = delta_nk,  sum_m [A_mn B*_mk - B*_mn A_mk] = 0
    Output:
      BogoliubovResiduals with d_k = 1 - sum_m(|A_mk|^2 - |B_mk|^2) and the largest off-diagonal entries
    """
    A, B = pair.A, pair.B
    d_k = 1. - np.sum(np.abs(A)**2 - np.abs(B)**2, axis=0)

    normalization = A.T.dot(A.conj()) - B.conj().T.dot(B)
    anomalous = A.T.dot(B.conj()) - B.conj().T.dot(A)
    offdiag = normalization - np.diag(np.diag(normalization))

    max_offdiag = float(np.max(np.abs(offdiag))) if offdiag.size else 0.
    return BogoliubovResiduals(d_k, float(np.max(np.abs(d_k))), max_offdiag, float(np.max(np.abs(anomalous))))


def particleSpectrum(pair, prediction=None):
    """
    Particle numbers N_n = sum_m |B_mn|^2, their total and the radiated energy sum_n Omega_n^1 N_n
    Arguments:
      pair: BogoliubovPair
      prediction: optional ResonancePrediction for the analytic overlay columns
    Output:
      ObservableRecord
    """
    N_k = np.sum(np.abs(pair.B)**2, axis=0)
    residuals = bogoliubovResiduals(pair)
    N_pred = prediction.N_total if prediction is not None else None
    E_pred = prediction.E_total if prediction is not None else None
    return ObservableRecord(
        t=pair.t1,
        N_k=N_k,
        N_total=float(np.sum(N_k)),
        E_total=float(np.sum(pair.final_frequencies * N_k)),
        d_k=residuals.d_k,
        max_abs_d=residuals.max_abs_d,
        max_offdiag=max(residuals.max_offdiag_norm, residuals.max_anomalous),
        wall_moving=pair.wall_moving,
        N_pred=N_pred,
        E_pred=E_pred)
