import json
import numpy as np
import pytest
from dce.ConvergenceReport import ConvergenceReport, buildConvergenceReport
from dce.RunConfig import buildParameters


def spectra(values):
    return [[(float(np.sum(v)), np.array(v))] for v in values]


def test_report_tables():
    data = spectra([[1., 0.5], [1. + 2e-5, 0.5], [1. + 2.1e-5, 0.5 + 1e-6]])
    report = buildConvergenceReport([20, 30, 40], [250.], data, threshold=1e-5)
    assert report['failed'] == []
    np.testing.assert_allclose(report['variation'][0], [2.1e-5, 1e-6])
    assert report['stable'][0] == [False, True]
    assert report['unstable_modes'] == [(250., 1)]
    assert report['total_variation'][0] == pytest.approx(2.2e-5)
    assert report['recommended_k_max'] == 30


def test_no_stable_cutoff():
    data = spectra([[1.], [1.1], [1.2]])
    assert buildConvergenceReport([10, 20, 30], [1.], data)['recommended_k_max'] is None


def test_failed_point():
    data = spectra([[1.], [1.]]) + [[None]]
    report = buildConvergenceReport([10, 20, 30], [1.], data)
    assert report['failed'] == [30]
    assert report['stable'][0] == [True]
    assert report['recommended_k_max'] == 10


def test_needs_two_values(tmp_path):
    with pytest.raises(ValueError):
        ConvergenceReport(buildParameters(sweep_k_max=[10], k_max=10), verbose=False)


def test_static_sweep(tmp_path):
    params = buildParameters(kind='static', sweep_k_max=[3, 5], t_max=2., directory=str(tmp_path), prefix='static')
    convergence = ConvergenceReport(params, verbose=False)
    report = convergence.report
    assert report['report_modes'] == 3
    assert all(report['stable'][0])
    assert report['recommended_k_max'] == 3
    assert not convergence.failed
    with open(convergence.files['summary']) as f:
        assert json.load(f)['recommended_k_max'] == 3
    assert (tmp_path / 'static_kmax5.csv').exists()
