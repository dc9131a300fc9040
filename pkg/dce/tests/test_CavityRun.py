import csv
import json
import numpy as np
import pytest
from dce import Analytic
from dce.CavityRun import CavityRun, runSingle
from dce.RunConfig import buildParameters
from dce.Trajectory import Trajectory


def read_rows(path):
    with open(path) as f:
        return list(csv.reader(f))


def test_static_run(tmp_path):
    params = buildParameters(kind='static', k_max=5, t_max=100., interval=5., directory=str(tmp_path), prefix='static')
    run = runSingle(params, verbose=False)
    assert run.complete
    rows = read_rows(run.files['csv'])
    assert rows[0] == ['t', 'N_total', 'E_total', 'max_abs_d', 'wall_moving_flag', 'N_1', 'N_2', 'N_3', 'N_4', 'N_5']
    assert len(rows) == 1 + 21
    for row in rows[1:]:
        assert all(abs(float(v)) <= 1e-12 for v in row[5:])
        assert row[4] == '0'
    with open(run.files['summary']) as f:
        summary = json.load(f)
    assert summary['complete'] is True
    assert summary['final']['N_total'] <= 1e-12


def test_overlay_columns(tmp_path):
    params = buildParameters(omega=2*np.pi, k_max=6, t_max=2., directory=str(tmp_path), report_modes=4)
    run = CavityRun(params, verbose=False)
    rows = read_rows(run.files['csv'])
    assert rows[0][-2:] == ['N_pred', 'E_pred']
    assert len(rows[0]) == 5 + 4 + 2
    last = rows[-1]
    assert float(last[0]) == 2.
    assert float(last[-2]) == pytest.approx(Analytic.predictNTotal(1, 1e-3, 2.))
    assert run.records[-1].wall_moving


def test_no_overlay_below_resonance(tmp_path):
    params = buildParameters(omega=0.5*np.pi, k_max=3, t_max=1., directory=str(tmp_path))
    run = CavityRun(params, verbose=False)
    assert 'N_pred' not in read_rows(run.files['csv'])[0]


def test_failure_keeps_rows(tmp_path):
    params = buildParameters(k_max=3, t_max=5., initial_step=1e-3, max_step=1e-3, max_steps=10,
        directory=str(tmp_path), prefix='broken')
    with pytest.warns(UserWarning):
        run = CavityRun(params, verbose=False)
    assert not run.complete
    assert 0. <= run.failure_time < 0.5
    rows = read_rows(run.files['csv'])
    assert len(rows) == 2
    assert float(rows[1][0]) == 0.
    with open(run.files['summary']) as f:
        summary = json.load(f)
    assert summary['complete'] is False
    assert summary['failure_time'] == pytest.approx(run.failure_time)


def test_deterministic_output(tmp_path):
    contents = []
    for name in ('a', 'b'):
        params = buildParameters(omega=3*np.pi, k_max=5, t_max=3., directory=str(tmp_path), prefix=name)
        run = CavityRun(params, verbose=False)
        with open(run.files['csv']) as f:
            contents.append(f.read())
    assert contents[0] == contents[1]


def test_in_memory_run():
    run = CavityRun(buildParameters(k_max=4, t_max=1.), save_to_file=False, verbose=False)
    assert run.files == {}
    np.testing.assert_allclose(run.times, [0., 0.5, 1.])
    assert run.spectrumAt(0.5) is run.records[1]
    assert run.spectrumAt(0.7) is None


def test_hdf5_round_trip(tmp_path):
    params = buildParameters(omega=2*np.pi, k_max=4, t_max=1., directory=str(tmp_path), hdf5=True,
        detuning=[(2, 0.001)])
    run = CavityRun(params, verbose=False)
    loaded = CavityRun.load(run.files['hdf5'])
    assert loaded.parameters == run.parameters
    assert loaded.complete
    np.testing.assert_array_equal(loaded.series['N_total'], run.totals)
    np.testing.assert_array_equal(loaded.final['B'], run.final_pair.B)


def test_resonant_spectrum():
    params = buildParameters(omega=4*np.pi, k_max=50, t_max=25.)
    run = CavityRun(params, save_to_file=False, verbose=False)
    N = run.records[-1].N_k
    assert N[0] == pytest.approx(4.62e-3, rel=2e-2)
    assert N[1] == pytest.approx(6.14e-3, rel=2e-2)
    assert N[2] == pytest.approx(4.59e-3, rel=2e-2)
    #uncoupled modes only pick up non-resonant terms of order epsilon^2, about 5e-6 here
    for k in (4, 8, 12):
        assert N[k - 1] < 5e-3 * N[1]
    assert run.records[-1].N_total == pytest.approx(Analytic.predictNTotal(2, 1e-3, 25.), rel=3e-2)


def write_table(tmp_path):
    path = tmp_path / 'wall.txt'
    np.savetxt(str(path), [[t, 1. + 0.01*t] for t in np.linspace(0., 2., 5)])
    return str(path)


def test_table_too_short(tmp_path):
    params = buildParameters(kind='tabulated', table_path=write_table(tmp_path), k_max=4, t_max=5., interval=0.5,
        directory=str(tmp_path / 'out'))
    with pytest.raises(ValueError):
        CavityRun(params, verbose=False)
    assert not (tmp_path / 'out').exists()


def test_table_end_stops_run(tmp_path, monkeypatch):
    #with the range check bypassed the run reaches the table end and ends like an integrator failure
    monkeypatch.setattr(Trajectory, 'coveredRange', lambda self: (0., np.inf))
    params = buildParameters(kind='tabulated', table_path=write_table(tmp_path), k_max=4, t_max=5., interval=0.5,
        directory=str(tmp_path), prefix='short')
    with pytest.warns(UserWarning):
        run = CavityRun(params, verbose=False)
    assert not run.complete
    assert run.failure_time > 2.
    assert 'table range' in run.failure_message
    assert run.records[-1].t == 2.
    with open(run.files['summary']) as f:
        summary = json.load(f)
    assert summary['complete'] is False
    assert summary['failure_time'] > 2.
    assert float(read_rows(run.files['csv'])[-1][0]) == 2.
