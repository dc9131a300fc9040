from __future__ import division
from __future__ import absolute_import
#Shared records for the cavity simulation
import collections
import collections.abc
import numpy as np


def namedtuple(typename, field_names, default_values=()):
    """
    Overwriting namedtuple class to use default arguments for variables not passed in at creation of object
    Can manually set default value for a variable; otherwise None will become default value
    """
    T = collections.namedtuple(typename, field_names)
    T.__new__.__defaults__ = (None,) * len(T._fields)

    if isinstance(default_values, collections.abc.Mapping):
        prototype = T(**default_values)
    else:
        prototype = T(*default_values)

    T.__new__.__defaults__ = tuple(prototype)
    return T


def identity(k_max):
    return np.eye(k_max, dtype=np.complex128)


def flatten(*matrices):
    """
    Stack complex matrices into one flat state vector
    """
    return np.concatenate([np.ravel(m) for m in matrices]).astype(np.complex128)


def unflatten(y, k_max, count=2):
    """
    Inverse of flatten for `count` square matrices of size k_max
    """
    size = k_max * k_max
    if y.size != count * size:
        raise ValueError('State of length %d does not hold %d matrices of size %d x %d' % (y.size, count, k_max, k_max))
    return [y[i*size:(i+1)*size].reshape(k_max, k_max) for i in range(count)]


EvolutionState = namedtuple('EvolutionState',
    ['t',   #Time of the state
    'xi',   #xi_n^(m): rows are modes n, columns the initial excitation m
    'eta'], #eta_n^(m), same layout
    {'t': 0.})


SecondOrderState = namedtuple('SecondOrderState',
    ['t',       #Time of the state
    'eps',      #epsilon_n^(m): rows are modes n, columns the initial excitation m
    'eps_dot'], #Time derivative of eps
    {'t': 0.})


CoefficientSet = namedtuple('CoefficientSet',
    ['a_plus',  #Diagonal a+_nn, length k_max
    'a_minus',  #Diagonal a-_nn, length k_max
    'c_plus',   #c+_nk, k_max x k_max
    'c_minus']) #c-_nk, k_max x k_max


BogoliubovPair = namedtuple('BogoliubovPair',
    ['t1',                  #Extraction time
    'A',                    #A_mn(t1), rows m (initial), columns n (final)
    'B',                    #B_mn(t1), same layout
    'delta_plus',           #Delta+_n(t1)
    'delta_minus',          #Delta-_n(t1)
    'final_frequencies',    #Omega_n^1 = Omega_n(t1)
    'wall_moving'],         #Wall velocity nonzero at t1 (matching problem)
    {'t1': 0.,
     'wall_moving': False})


BogoliubovResiduals = namedtuple('BogoliubovResiduals',
    ['d_k',             #1 - sum_m(|A_mk|^2 - |B_mk|^2)
    'max_abs_d',        #max_k |d_k|
    'max_offdiag_norm', #Largest off-diagonal entry of the first relation
    'max_anomalous'])   #Largest entry of the second relation


ObservableRecord = namedtuple('ObservableRecord',
    ['t',           #Extraction time
    'N_k',          #Particles per mode
    'N_total',      #Sum of N_k
    'E_total',      #Sum of Omega_k^1 N_k
    'd_k',          #Bogoliubov residuals per mode
    'max_abs_d',
    'max_offdiag',  #Largest off-diagonal residual of both relations
    'wall_moving',
    'N_pred',       #Analytic overlay, None when no prediction applies
    'E_pred'],
    {'wall_moving': False})


ResonancePrediction = namedtuple('ResonancePrediction',
    ['n',               #Resonance index, omega = 2 n pi / l0
    'delta_n',          #Detuning, omega = 2 pi (n + delta_n) / l0
    'epsilon',
    'gamma',            #delta_n / (n epsilon)
    't',
    'N_total',          #Short-time total particle number, None off resonance
    'E_total',          #Energy in the branch selected by gamma
    'short_time',       #epsilon pi t below Constants.SHORT_TIME_LIMIT
    'small_amplitude'], #epsilon below Constants.SMALL_AMPLITUDE_LIMIT
    {'delta_n': 0.,
     'gamma': 0.})
