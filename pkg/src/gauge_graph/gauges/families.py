"""
Parametric gauge families.

All exponential-margin families below are symmetric in their arguments except
the asymmetric AD form, whose (theta, gamma) refer to the stored argument
order.
"""
import numpy as np

from ..utils import ParameterOutOfRange, DimensionMismatch
from ..numerics import invert_spd
from .margins import Margin
from .base import Gauge
from .coefficients import make_edge_coefficients

__all__ = ['LogisticGauge', 'GaussianExpGauge', 'InvertedLogisticGauge', 'SquareGauge', 'AsymmetricADGauge',
           'GaussianLaplaceGauge']


def _check_range(name, value, lo, hi, lo_closed=False, hi_closed=False):
    value = float(value)
    above = value >= lo if lo_closed else value > lo
    below = value <= hi if hi_closed else value < hi
    if not (above and below and np.isfinite(value)):
        interval = '{}{}, {}{}'.format('[' if lo_closed else '(', lo, hi, ']' if hi_closed else ')')
        raise ParameterOutOfRange('{} = {} outside {}'.format(name, value, interval),
                                  parameter=name, value=value, range=interval)
    return value

def _check_pairwise(dimension, family):
    if dimension != 2:
        raise DimensionMismatch('{} gauges are bivariate, got dimension {}'.format(family, dimension),
                                expected=2, dimension=dimension)


class _SymmetricGauge(Gauge):

    def _permuted(self, order):
        return self


class LogisticGauge(_SymmetricGauge):
    """g(x) = sum(x) / theta + (1 - d / theta) min(x); asymptotically dependent.

    >>> LogisticGauge(0.4)([1., 1.])
    1.0
    """
    family = 'logistic'

    def __init__(self, theta, dimension=2):
        if int(dimension) < 2:
            raise DimensionMismatch('logistic gauges need dimension >= 2', dimension=dimension)
        super(LogisticGauge, self).__init__(dimension, Margin.EXPONENTIAL)
        self.theta = _check_range('theta', theta, 0., 1.)

    @property
    def params(self):
        return {'theta': self.theta} if self.dimension == 2 else {'theta': self.theta, 'dimension': self.dimension}

    def _evaluate(self, x):
        return x.sum(axis=-1) / self.theta + (1. - self.dimension / self.theta) * x.min(axis=-1)

    def _marginal(self, indices, cfg):
        return LogisticGauge(self.theta, len(indices))

    def edge_coefficients(self, sign=1):
        if self.dimension != 2:
            return None
        return make_edge_coefficients(1., 0.)


class GaussianExpGauge(_SymmetricGauge):
    """Bivariate Gaussian copula in exponential margins."""
    family = 'gaussian'

    def __init__(self, rho):
        super(GaussianExpGauge, self).__init__(2, Margin.EXPONENTIAL)
        self.rho = _check_range('rho', rho, 0., 1., lo_closed=True)

    @property
    def params(self):
        return {'rho': self.rho}

    def _evaluate(self, x):
        x1, x2 = x[..., 0], x[..., 1]
        return (x1 + x2 - 2. * self.rho * np.sqrt(x1 * x2)) / (1. - self.rho ** 2)

    def edge_coefficients(self, sign=1):
        # rho = 0 is independence, g = x1 + x2 grows linearly off the contact point
        return make_edge_coefficients(self.rho ** 2, 0.5 if self.rho > 0 else 0.)


class InvertedLogisticGauge(_SymmetricGauge):
    family = 'inverted_logistic'

    def __init__(self, theta):
        super(InvertedLogisticGauge, self).__init__(2, Margin.EXPONENTIAL)
        self.theta = _check_range('theta', theta, 0., 1., hi_closed=True)

    @property
    def params(self):
        return {'theta': self.theta}

    def _evaluate(self, x):
        scale = x.max(axis=-1)
        safe = np.where(scale > 0, scale, 1.)
        ratio = x / safe[..., None]
        power = (ratio ** (1. / self.theta)).sum(axis=-1) ** self.theta
        return np.where(scale > 0, scale * power, 0.)

    def edge_coefficients(self, sign=1):
        return make_edge_coefficients(0., 1. - self.theta)


class SquareGauge(_SymmetricGauge):
    family = 'square'

    def __init__(self, theta):
        super(SquareGauge, self).__init__(2, Margin.EXPONENTIAL)
        self.theta = _check_range('theta', theta, 0., 1.)

    @property
    def params(self):
        return {'theta': self.theta}

    def _evaluate(self, x):
        x1, x2 = x[..., 0], x[..., 1]
        diff = np.abs(x1 - x2) / self.theta
        return np.maximum(diff, (x1 + x2) / (2. - self.theta))

    def edge_coefficients(self, sign=1):
        return make_edge_coefficients(1. - self.theta, 0.)


class AsymmetricADGauge(Gauge):
    """g(x1, x2) = x1 / theta + x2 / gamma + (1 - 1/theta - 1/gamma) min(x1, x2)"""
    family = 'asymmetric_ad'

    def __init__(self, theta, gamma):
        super(AsymmetricADGauge, self).__init__(2, Margin.EXPONENTIAL)
        self.theta = _check_range('theta', theta, 0., 1.)
        self.gamma = _check_range('gamma', gamma, 0., 1.)

    @property
    def params(self):
        return {'theta': self.theta, 'gamma': self.gamma}

    def swapped(self):
        return AsymmetricADGauge(self.gamma, self.theta)

    def _permuted(self, order):
        return self.swapped()

    def _evaluate(self, x):
        x1, x2 = x[..., 0], x[..., 1]
        return x1 / self.theta + x2 / self.gamma + (1. - 1. / self.theta - 1. / self.gamma) * np.minimum(x1, x2)

    def edge_coefficients(self, sign=1):
        return make_edge_coefficients(1., 0.)


class GaussianLaplaceGauge(Gauge):
    """g(x) = s^T Sigma^{-1} s with s_i = sgn(x_i) |x_i|^{1/2}, Laplace margins.

    The precision matrix is computed once.
    """
    family = 'gaussian_laplace'

    def __init__(self, correlation):
        correlation = np.array(correlation, dtype=float)
        if correlation.ndim != 2 or correlation.shape[0] != correlation.shape[1] or correlation.shape[0] < 2:
            raise DimensionMismatch('correlation must be a square matrix of size >= 2',
                                    shape=list(correlation.shape))
        if not np.allclose(np.diag(correlation), 1., rtol=0., atol=1e-12):
            raise ParameterOutOfRange('correlation matrix needs a unit diagonal', parameter='sigma',
                                      value=np.diag(correlation).tolist(), range='diag = 1')
        super(GaussianLaplaceGauge, self).__init__(correlation.shape[0], Margin.LAPLACE)
        self.precision = invert_spd(correlation)
        self.correlation = correlation

    @classmethod
    def from_rho(cls, rho):
        return cls([[1., rho], [rho, 1.]])

    @property
    def params(self):
        return {'sigma': self.correlation.tolist()}

    def _evaluate(self, x):
        s = np.sign(x) * np.sqrt(np.abs(x))
        return np.einsum('...i,ij,...j->...', s, self.precision, s)

    def _permuted(self, order):
        return self._marginal(order, None)

    def _marginal(self, indices, cfg):
        return GaussianLaplaceGauge(self.correlation[np.ix_(indices, indices)])

    def edge_coefficients(self, sign=1):
        if self.dimension != 2:
            return None
        rho = self.correlation[0, 1]
        alpha = np.sign(rho) * rho ** 2
        return make_edge_coefficients(alpha if sign > 0 else -alpha)
