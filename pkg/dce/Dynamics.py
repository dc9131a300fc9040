from __future__ import division
from __future__ import absolute_import
#Right-hand sides and initial data of the three equivalent mode-function formulations
import numpy as np
from .Utils import CoefficientSet, EvolutionState, SecondOrderState, identity


def _checkDimensions(k_max, *matrices):
    for matrix in matrices:
        if np.shape(matrix) != (k_max, k_max):
            raise ValueError('Expected a %d x %d matrix, got shape %s' % (k_max, k_max, np.shape(matrix)))


def coefficients(system, l, l_dot, t=None):
    """
    Coefficients of the first-order xi/eta system at one instant.
    Arguments:
      system: ModeSystem
      l, l_dot: cavity length and wall velocity at time t
      t: time, only carried for bookkeeping
    Output:
      CoefficientSet with a+_nn = (Omega_n^0/2)[1 + (Omega_n/Omega_n^0)^2],
      a-_nn with the minus sign, and c+-_nk = [M_kn +- (Omega_k^0/Omega_n^0) M_nk]/2
    """
    omega0 = system.initial_frequencies
    ratio = system.frequencies(l) / omega0
    a_plus = 0.5 * omega0 * (1 + ratio**2)
    a_minus = 0.5 * omega0 * (1 - ratio**2)

    M = system.coupling(l, l_dot)
    weight = omega0[np.newaxis, :] / omega0[:, np.newaxis]  #Omega_k^0 / Omega_n^0 at [n, k]
    c_plus = 0.5 * (M.T + weight * M)
    c_minus = 0.5 * (M.T - weight * M)
    return CoefficientSet(a_plus, a_minus, c_plus, c_minus)


def rhsXiEta(state, coeffs):
    """
    Time derivatives of xi and eta. All columns m are advanced at once with matrix products.
    """
    k_max = coeffs.a_plus.size
    _checkDimensions(k_max, state.xi, state.eta, coeffs.c_plus, coeffs.c_minus)
    a_plus = coeffs.a_plus[:, np.newaxis]
    a_minus = coeffs.a_minus[:, np.newaxis]
    xi, eta = state.xi, state.eta

    dxi = -1j * (a_plus * xi - a_minus * eta) - (coeffs.c_minus.dot(xi) + coeffs.c_plus.dot(eta))
    deta = -1j * (a_minus * xi - a_plus * eta) - (coeffs.c_plus.dot(xi) + coeffs.c_minus.dot(eta))
    return dxi, deta


def frictionMatrix(M):
    """
    [M_mn - M_nm] at [n, m], the velocity coupling of the second-order mode equations
    """
    return M.T - M


def rhsAB(A, B, system, l, l_dot):
    """
    Direct evolution of the Bogoliubov coefficients A_mn, B_mn (rows m, columns n) when the
    extraction time is treated as continuous.
      dA_mn = -i Omega_n A_mn + Gamma_n B_mn + sum_k [K-_nk A_mk - K+_nk B_mk]
      dB_mn = +i Omega_n B_mn + Gamma_n A_mn + sum_k [K-_nk B_mk - K+_nk A_mk]
    with Gamma_n = Omega_dot_n / (2 Omega_n) and
    K+-_nk = [sqrt(Omega_k/Omega_n) M_nk +- sqrt(Omega_n/Omega_k) M_kn] / 2.
    B rotates with the positive frequency; that is what its definition through epsilon implies.
    """
    _checkDimensions(system.k_max, A, B)
    omega = system.frequencies(l)
    gamma = 0.5 * system.frequencyRates(l, l_dot) / omega
    M = system.coupling(l, l_dot)

    root = np.sqrt(omega)
    weight = root[np.newaxis, :] / root[:, np.newaxis]  #sqrt(Omega_k/Omega_n) at [n, k]
    K_plus = 0.5 * (weight * M + M.T / weight)
    K_minus = 0.5 * (weight * M - M.T / weight)

    dA = -1j * omega * A + gamma * B + A.dot(K_minus.T) - B.dot(K_plus.T)
    dB = 1j * omega * B + gamma * A + B.dot(K_minus.T) - A.dot(K_plus.T)
    return dA, dB


def rhsEpsilon(state, system, l, l_dot, M_dot):
    """
    Second derivative of epsilon_n^(m) from
      eps_dd_n + Omega_n^2 eps_n + sum_m [M_mn - M_nm] eps_d_m + sum_m [M_dot_mn - N_nm] eps_m = 0
    with N_nm = sum_k M_nk M_mk, applied column by column.
    """
    _checkDimensions(system.k_max, state.eps, state.eps_dot, M_dot)
    omega = system.frequencies(l)
    M = system.coupling(l, l_dot)
    N = M.dot(M.T)
    return -(omega**2)[:, np.newaxis] * state.eps - frictionMatrix(M).dot(state.eps_dot) - (M_dot.T - N).dot(state.eps)


def initialXiEta(system):
    """
    xi(0) = 2 I, eta(0) = 0
    """
    return EvolutionState(0., 2 * identity(system.k_max), np.zeros((system.k_max, system.k_max), dtype=np.complex128))


def initialAB(system):
    return identity(system.k_max), np.zeros((system.k_max, system.k_max), dtype=np.complex128)


def initialEpsilon(system, trajectory):
    """
    eps(0) = I and eps_dot_n^(m)(0) = -i Omega_n^0 delta_nm - M_mn(0). M(0) is kept whenever the wall starts
    with a finite velocity, otherwise the vacuum initial conditions are violated.
    """
    l, l_dot = trajectory.evaluate(0.)
    M0 = system.coupling(l, l_dot)
    eps_dot = -1j * np.diag(system.initial_frequencies).astype(np.complex128) - M0.T
    return SecondOrderState(0., identity(system.k_max), eps_dot)
