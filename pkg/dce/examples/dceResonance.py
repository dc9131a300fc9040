from __future__ import print_function
from dce.CavityRun import CavityRun
from dce.RunConfig import buildParameters
import numpy as np

#omega = 4 pi, spectrum after 25 time units
parameters = buildParameters(omega=4*np.pi, k_max=50, t_max=25., report_modes=12, prefix='omega4pi')
run = CavityRun(parameters)

final = run.records[-1]
for k in range(1, 7):
    print('N_%d(%g) = %.4e' % (k, final.t, final.N_k[k - 1]))
print('Total: %.6e  Energy: %.6e  max|d_k|: %.2e' % (final.N_total, final.E_total, final.max_abs_d))
