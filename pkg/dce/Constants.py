"""
Integrator defaults
"""
ABS_TOL = 1e-8
REL_TOL = 1e-8
DEFAULT_METHOD = 'dop853'
METHODS = ['dop853', 'dopri5']
MAX_STEPS = 10000000 #per checkpoint segment
"""
End Integrator defaults
"""

TRAJECTORY_KINDS = ['static', 'sinusoidal', 'tabulated']
FORMULATIONS = ['xi_eta', 'bogoliubov', 'second_order']

DEFAULT_L0 = 1.0
DEFAULT_EPSILON = 1e-3
DEFAULT_K_MAX = 20
DEFAULT_T_MAX = 25.0
CHECKPOINT_INTERVAL = 0.5 #hits t = 249.5 and 250.0 exactly
MAX_REPORT_MODES = 20

STABILITY_THRESHOLD = 1e-5 #cut-off stability of single-mode particle numbers

SHORT_TIME_LIMIT = 0.1 #epsilon*pi*t below this counts as short time
SMALL_AMPLITUDE_LIMIT = 0.01
VELOCITY_TOLERANCE = 1e-12 #relative to l0*omega, below it the wall counts as resting

MINIMUM_DEPTH_FRACTION = 0.1 #fraction of max N(t) a sample must stay below to belong to a minimum

CSV_SUFFIX = '.csv'
SUMMARY_SUFFIX = '.json'
HDF5_SUFFIX = '.h5'
CONVERGENCE_FILE_NAME = 'convergence'
DETUNING_FILE_NAME = 'detuning'
