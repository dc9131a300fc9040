#Long k_max = 60 and detuning runs, enabled with --runslow
import numpy as np
import pytest
from dce import Analytic
from dce.CavityRun import CavityRun
from dce.ConvergenceReport import ConvergenceReport, buildConvergenceReport
from dce.DetuningSweep import DetuningSweep
from dce.RunConfig import buildParameters

PROBES = [249.5, 250.]


@pytest.fixture(scope='module')
def omega3pi_runs():
    params = buildParameters(omega=3*np.pi, t_max=250., t_probe=PROBES, sweep_k_max=[30, 40, 50, 60], report_modes=20)
    return dict((k_max, CavityRun(params, k_max=k_max, save_to_file=False, verbose=False)) for k_max in (30, 40, 50, 60))


@pytest.mark.slow
def test_total_particle_number(omega3pi_runs):
    run = omega3pi_runs[60]
    assert run.complete
    assert run.spectrumAt(249.5).N_total == pytest.approx(0.5798959, abs=1e-4)
    assert run.spectrumAt(250.).N_total == pytest.approx(0.5822984, abs=1e-4)


@pytest.mark.slow
def test_cutoff_stability(omega3pi_runs):
    k_max_values = sorted(omega3pi_runs)
    spectra = [[(r.N_total, r.N_k[:20]) for r in map(omega3pi_runs[k].spectrumAt, PROBES)] for k in k_max_values]
    report = buildConvergenceReport(k_max_values, PROBES, spectra, 1e-5, 20)
    assert all(variation < 1e-5 for variation in report['total_variation'])


@pytest.mark.slow
def test_bogoliubov_residuals(omega3pi_runs):
    record = omega3pi_runs[60].spectrumAt(250.)
    assert record.max_abs_d <= 1e-4
    d = np.abs(record.d_k)
    assert np.mean(d[:10]) < np.mean(d[50:60])


@pytest.mark.slow
def test_energy_growth(omega3pi_runs):
    run = omega3pi_runs[60]
    late = run.times >= 25.
    expected = Analytic.predictE(1.5, 1e-3, run.times[late])
    np.testing.assert_allclose(run.energies[late], expected, rtol=5e-2)


@pytest.mark.slow
@pytest.mark.parametrize('n', [1.5, 2, 2.5, 3])
def test_short_time_totals(n):
    params = buildParameters(omega=2*np.pi*n, k_max=40, t_max=25.)
    run = CavityRun(params, save_to_file=False, verbose=False)
    for t in (10., 15., 20., 25.):
        assert run.spectrumAt(t).N_total == pytest.approx(Analytic.predictNTotal(n, 1e-3, t), rel=3e-2)


@pytest.mark.slow
def test_energy_growth_n2():
    run = CavityRun(buildParameters(omega=4*np.pi, k_max=60, t_max=250.), save_to_file=False, verbose=False)
    late = run.times >= 25.
    np.testing.assert_allclose(run.energies[late], Analytic.predictE(2, 1e-3, run.times[late]), rtol=5e-2)


@pytest.mark.slow
@pytest.mark.parametrize('delta_n', [0.001, 0.002])
def test_detuned_energy(delta_n):
    gamma = delta_n / 2e-3
    run = CavityRun(buildParameters(omega=2*np.pi*(2 + delta_n), k_max=40, t_max=250.), save_to_file=False, verbose=False)
    late = run.times >= 25.
    np.testing.assert_allclose(run.energies[late], Analytic.predictE(2, 1e-3, run.times[late], gamma), rtol=5e-2)


@pytest.mark.slow
def test_detuning_period():
    params = buildParameters(k_max=20, t_max=800., detuning=[(1, 0.002)])
    sweep = DetuningSweep(params, save_to_file=False, verbose=False)
    point = sweep.results[0]
    assert point.status == 'ok'
    assert point.period_error < 5e-2


@pytest.mark.slow
def test_unconverged_high_modes(tmp_path):
    params = buildParameters(omega=6*np.pi, t_max=250., sweep_k_max=[20, 40], report_modes=20, directory=str(tmp_path))
    with pytest.warns(UserWarning):
        report = ConvergenceReport(params, verbose=False).report
    assert any(k > 10 for _, k in report['unstable_modes'])


@pytest.mark.slow
def test_detuned_energy_oscillates():
    #delta_n = 0.005 at n = 2 puts gamma at 2.5, the energy oscillates with period t0
    run = CavityRun(buildParameters(omega=2*np.pi*2.005, k_max=40, t_max=250.), save_to_file=False, verbose=False)
    expected = Analytic.predictE(2, 1e-3, run.times, 2.5)
    assert Analytic.predictPeriod(2, 2.5, 1e-3) < run.times[-1]
    valid = expected >= 0.25 * expected.max()
    np.testing.assert_allclose(run.energies[valid], expected[valid], rtol=5e-2)
    assert run.energies[run.times == 250.][0] < 0.5 * np.max(run.energies)


@pytest.mark.slow
def test_unconverged_n_half_integer(tmp_path):
    params = buildParameters(omega=5*np.pi, t_max=250., sweep_k_max=[20, 40], report_modes=20, directory=str(tmp_path))
    with pytest.warns(UserWarning):
        report = ConvergenceReport(params, verbose=False).report
    assert report['unstable_modes']


@pytest.mark.slow
def test_energy_growth_n3_before_deviation():
    run = CavityRun(buildParameters(omega=6*np.pi, k_max=60, t_max=150.), save_to_file=False, verbose=False)
    window = run.times >= 25.
    np.testing.assert_allclose(run.energies[window], Analytic.predictE(3, 1e-3, run.times[window]), rtol=1e-1)
