from __future__ import print_function
from dce.DetuningSweep import DetuningSweep
from dce.RunConfig import loadParameters
import os

parameters = loadParameters(os.path.join(os.path.dirname(__file__), 'detuning.cfg'))
sweep = DetuningSweep(parameters)

if sweep.results is not None:
    for point in sweep.results:
        print('delta_n=%g gamma=%.2f %s period=%s (predicted %s)' % (point.delta_n, point.gamma, point.regime,
            point.period, point.predicted_period))
    print('Amplitude exponent alpha: %s' % sweep.alpha)
