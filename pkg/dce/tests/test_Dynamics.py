import numpy as np
import pytest
from dce import Dynamics as dyn
from dce.Integrator import StepperConfig, integrate
from dce.ModeSystem import ModeSystem
from dce.Propagators import XiEtaPropagator
from dce.Trajectory import Trajectory
from dce.Utils import EvolutionState, SecondOrderState, flatten


def test_static_coefficients():
    system = ModeSystem(k_max=6)
    coeffs = dyn.coefficients(system, 1., 0.)
    np.testing.assert_allclose(coeffs.a_plus, system.initial_frequencies)
    np.testing.assert_array_equal(coeffs.a_minus, 0.)
    np.testing.assert_array_equal(coeffs.c_plus, 0.)
    np.testing.assert_array_equal(coeffs.c_minus, 0.)


def test_a_minus_stretched():
    coeffs = dyn.coefficients(ModeSystem(k_max=3), 1.001, 0.)
    assert coeffs.a_minus[0] == pytest.approx(0.5*np.pi*(1 - 1/1.001**2), rel=1e-12)
    assert coeffs.a_minus[0] == pytest.approx(3.1369e-3, rel=1e-4)


def test_c_plus_entry():
    coeffs = dyn.coefficients(ModeSystem(k_max=3), 1., 1.)
    assert coeffs.c_plus[0, 1] == pytest.approx(-2./3)


def test_static_xi_eta_solution():
    system = ModeSystem(k_max=5)
    coeffs = dyn.coefficients(system, 1., 0.)
    t = 0.37
    phase = np.diag(np.exp(-1j * system.initial_frequencies * t))
    state = EvolutionState(t, 2*phase, np.zeros((5, 5), dtype=complex))
    dxi, deta = dyn.rhsXiEta(state, coeffs)
    np.testing.assert_allclose(dxi, -1j * system.initial_frequencies[:, np.newaxis] * 2*phase)
    np.testing.assert_array_equal(deta, 0.)


def test_static_AB_solution():
    system = ModeSystem(k_max=4)
    t = 1.3
    A = np.diag(np.exp(-1j * system.initial_frequencies * t))
    B = np.zeros((4, 4), dtype=complex)
    dA, dB = dyn.rhsAB(A, B, system, 1., 0.)
    np.testing.assert_allclose(dA, -1j * A * system.initial_frequencies[np.newaxis, :])
    np.testing.assert_array_equal(dB, 0.)


def test_static_epsilon_solution():
    system = ModeSystem(k_max=4)
    t = 0.8
    phase = np.diag(np.exp(-1j * system.initial_frequencies * t))
    state = SecondOrderState(t, phase, -1j * system.initial_frequencies[:, np.newaxis] * phase)
    eps_ddot = dyn.rhsEpsilon(state, system, 1., 0., np.zeros((4, 4)))
    np.testing.assert_allclose(eps_ddot, -(system.initial_frequencies**2)[:, np.newaxis] * phase)


def test_friction_antisymmetric():
    rng = np.random.RandomState(3)
    system = ModeSystem(k_max=7)
    M = system.coupling(rng.uniform(0.5, 2.), rng.uniform(-1., 1.))
    np.testing.assert_allclose(dyn.frictionMatrix(M), -2*M)


def test_dimension_mismatch():
    system = ModeSystem(k_max=3)
    coeffs = dyn.coefficients(system, 1., 0.1)
    bad = EvolutionState(0., np.eye(4), np.zeros((4, 4)))
    with pytest.raises(ValueError):
        dyn.rhsXiEta(bad, coeffs)
    with pytest.raises(ValueError):
        dyn.rhsAB(np.eye(2), np.eye(2), system, 1., 0.1)


def test_initial_data():
    system = ModeSystem(k_max=3)
    state = dyn.initialXiEta(system)
    np.testing.assert_array_equal(state.xi, 2*np.eye(3))
    np.testing.assert_array_equal(state.eta, 0.)
    A, B = dyn.initialAB(system)
    np.testing.assert_array_equal(A, np.eye(3))
    np.testing.assert_array_equal(B, 0.)


def test_initial_epsilon_keeps_coupling():
    system = ModeSystem(k_max=4)
    traj = Trajectory('sinusoidal', epsilon=1e-3, omega=3*np.pi)
    state = dyn.initialEpsilon(system, traj)
    M0 = system.coupling(*traj.evaluate(0.))
    np.testing.assert_array_equal(state.eps, np.eye(4))
    np.testing.assert_allclose(state.eps_dot + 1j*np.diag(system.initial_frequencies), -M0.T)
    assert np.any(M0 != 0)


def random_matrices(rng, k, count):
    return [rng.normal(size=(k, k)) + 1j*rng.normal(size=(k, k)) for _ in range(count)]


def test_rhs_linear():
    rng = np.random.RandomState(11)
    system = ModeSystem(k_max=6)
    l, l_dot = 1.02, 0.04
    coeffs = dyn.coefficients(system, l, l_dot)
    M_dot = system.couplingRate(l, l_dot, -0.3)
    X1, Y1, X2, Y2 = random_matrices(rng, 6, 4)
    a, b = 0.7 - 0.2j, -1.3
    for rhs in (lambda X, Y: dyn.rhsXiEta(EvolutionState(0., X, Y), coeffs),
                lambda X, Y: dyn.rhsAB(X, Y, system, l, l_dot),
                lambda X, Y: (dyn.rhsEpsilon(SecondOrderState(0., X, Y), system, l, l_dot, M_dot),)):
        combined = rhs(a*X1 + b*X2, a*Y1 + b*Y2)
        for value, first, second in zip(combined, rhs(X1, Y1), rhs(X2, Y2)):
            np.testing.assert_allclose(value, a*first + b*second, rtol=1e-10, atol=1e-10)


def test_columns_evolve_independently():
    #xi_n^(m), eta_n^(m) for different initial modes m never mix
    rng = np.random.RandomState(5)
    system = ModeSystem(k_max=5)
    coeffs = dyn.coefficients(system, 0.98, -0.02)
    xi, eta = random_matrices(rng, 5, 2)
    dxi, deta = dyn.rhsXiEta(EvolutionState(0., xi, eta), coeffs)
    order = rng.permutation(5)
    pxi, peta = dyn.rhsXiEta(EvolutionState(0., xi[:, order], eta[:, order]), coeffs)
    np.testing.assert_allclose(pxi, dxi[:, order], rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(peta, deta[:, order], rtol=1e-12, atol=1e-12)
    xi[:, 2] = 0.
    eta[:, 2] = 0.
    zxi, zeta = dyn.rhsXiEta(EvolutionState(0., xi, eta), coeffs)
    np.testing.assert_array_equal(zxi[:, 2], 0.)
    np.testing.assert_array_equal(zeta[:, 2], 0.)
    np.testing.assert_allclose(np.delete(zxi, 2, axis=1), np.delete(dxi, 2, axis=1), rtol=1e-12, atol=1e-12)


def test_flow_linear_and_column_ordered():
    system = ModeSystem(k_max=5)
    propagator = XiEtaPropagator(system, Trajectory('sinusoidal', epsilon=1e-3, omega=2*np.pi))
    cfg = StepperConfig(abs_tol=1e-11, rel_tol=1e-11)
    y0 = propagator.initialState()
    order = np.random.RandomState(8).permutation(5)
    xi0, eta0 = propagator.unpack(0., y0)[1:]
    starts = [y0, 2*y0, flatten(xi0[:, order], eta0[:, order])]
    final = [propagator.unpack(3., list(integrate(propagator, y, 0., [3.], cfg))[-1][1]) for y in starts]
    np.testing.assert_allclose(final[1].xi, 2*final[0].xi, atol=1e-8)
    np.testing.assert_allclose(final[1].eta, 2*final[0].eta, atol=1e-8)
    np.testing.assert_allclose(final[2].xi, final[0].xi[:, order], atol=1e-8)
    np.testing.assert_allclose(final[2].eta, final[0].eta[:, order], atol=1e-8)
