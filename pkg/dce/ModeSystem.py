from __future__ import division
from __future__ import absolute_import
from builtins import object
import numpy as np
from . import Constants


class EigenBasis(object):
    """
    Instantaneous eigenfunctions phi_n(t, x) of -d^2/dx^2 on [0, l(t)] for one family of
    time-independent boundary conditions. A basis supplies the wavenumbers of the spectrum
    and the l-independent shape of the coupling matrix M_nm = (l_dot/l) * shape_nm.
    """

    def __init__(self, k_max):
        if k_max < 1:
            raise ValueError('Cut-off k_max must be at least 1, got %d' % k_max)
        self.k_max = int(k_max)
        self.indices = np.arange(1, self.k_max + 1)

    def wavenumbers(self, l):
        raise NotImplementedError

    def shape(self):
        raise NotImplementedError

    def eigenfunction(self, n, l, x):
        raise NotImplementedError

    def eigenfunctionRate(self, n, l, l_dot, x):
        raise NotImplementedError


class DirichletBasis(EigenBasis):
    """
    phi_n = sqrt(2/l) sin(n pi x / l), n = 1..k_max
    """

    def __init__(self, k_max):
        super(DirichletBasis, self).__init__(k_max)
        n = self.indices[:, np.newaxis].astype(np.float64)
        m = self.indices[np.newaxis, :].astype(np.float64)
        sign = np.where((n + m) % 2 == 0, 1., -1.)
        with np.errstate(divide='ignore', invalid='ignore'):
            shape = sign * 2 * n * m / (m**2 - n**2)
        np.fill_diagonal(shape, 0.)
        shape.flags.writeable = False
        self._shape = shape

    def wavenumbers(self, l):
        return self.indices * np.pi / l

    def shape(self):
        return self._shape

    def eigenfunction(self, n, l, x):
        return np.sqrt(2. / l) * np.sin(n * np.pi * x / l)

    def eigenfunctionRate(self, n, l, l_dot, x):
        #d/dt phi_n = l_dot * d/dl phi_n
        k = n * np.pi / l
        return -l_dot * np.sqrt(2. / l) * (np.sin(k * x) / (2 * l) + k * x * np.cos(k * x) / l)


class ModeSystem(object):
    """
    Truncated mode ladder of a scalar field with mass `mass` in a cavity of initial length l0.
    Attributes:
        k_max (int): number of modes kept
        mass (float): field mass, 0 for the massless field
        l0 (float): cavity length for t <= 0
        initial_frequencies (array): Omega_n^0
    """

    def __init__(self, k_max=Constants.DEFAULT_K_MAX, mass=0., l0=Constants.DEFAULT_L0, basis=None):
        if mass < 0:
            raise ValueError('Field mass must be non-negative, got %g' % mass)
        self.basis = basis if basis is not None else DirichletBasis(k_max)
        if self.basis.k_max != k_max:
            raise ValueError('Basis holds %d modes, system asked for %d' % (self.basis.k_max, k_max))
        self.k_max = int(k_max)
        self.mass = float(mass)
        self.l0 = float(l0)
        self.initial_frequencies = self.frequencies(self.l0)
        self.initial_frequencies.flags.writeable = False


    def frequencies(self, l):
        """
        Instantaneous eigenfrequencies Omega_n = sqrt(k_n(l)^2 + mass^2), n = 1..k_max
        """
        if l <= 0:
            raise ValueError('Cavity length must be positive, got %g' % l)
        k = self.basis.wavenumbers(l)
        if self.mass == 0:
            return k
        return np.sqrt(k**2 + self.mass**2)


    def frequencyRates(self, l, l_dot):
        """
        Time derivative of Omega_n for wavenumbers scaling as 1/l
        """
        omega = self.frequencies(l)
        k = self.basis.wavenumbers(l)
        return -k**2 * l_dot / (l * omega)


    def coupling(self, l, l_dot):
        """
        Coupling matrix M_nm = int phi_dot_n phi_m dx. The eigenfunctions do not depend on the mass,
        so the massless closed form is kept for massive fields.
        """
        if l <= 0:
            raise ValueError('Cavity length must be positive, got %g' % l)
        if l_dot == 0:
            return np.zeros((self.k_max, self.k_max))
        return (l_dot / l) * self.basis.shape()


    def couplingRate(self, l, l_dot, l_ddot):
        """
        dM/dt from d(l_dot/l)/dt = l_ddot/l - (l_dot/l)^2
        """
        if l <= 0:
            raise ValueError('Cavity length must be positive, got %g' % l)
        return (l_ddot / l - (l_dot / l)**2) * self.basis.shape()
