from __future__ import print_function
from dce.ConvergenceReport import ConvergenceReport
from dce.RunConfig import loadParameters
import os

parameters = loadParameters(os.path.join(os.path.dirname(__file__), 'omega3pi.cfg'))
convergence = ConvergenceReport(parameters)

if convergence.report is not None:
    print('Recommended k_max: %s' % convergence.report['recommended_k_max'])
    for t, variation in zip(convergence.report['probe_times'], convergence.report['total_variation']):
        print('t = %g: N varies by %.2e across k_max' % (t, variation))
