import numpy as np

from ..utils import DimensionMismatch, EmptyKeptSet
from ..numerics import minimize_box, DEFAULT_MINIMIZER_CONFIG
from .margins import get_margin

__all__ = ['Gauge', 'CustomGauge', 'AbsoluteGauge', 'PermutedGauge', 'NumericMarginalGauge', 'check_indices']


def check_indices(indices, dimension):
    indices = [int(i) for i in indices]
    if len(indices) == 0:
        raise EmptyKeptSet('kept coordinate set is empty')
    if len(set(indices)) != len(indices) or not all(0 <= i < dimension for i in indices):
        raise DimensionMismatch('invalid coordinate indices {} for dimension {}'.format(indices, dimension),
                                indices=indices, dimension=dimension)
    return indices


class Gauge(object):
    """Continuous 1-homogeneous function with g(x) >= max |x_i| on the margin domain.

    Calling a gauge on an array of shape (..., d) evaluates it row-wise and
    returns an array of shape (...); a single point gives a float.
    """
    family = 'custom'

    def __init__(self, dimension, margin):
        self.dimension = int(dimension)
        self.margin = get_margin(margin)

    @property
    def params(self):
        return {}

    def _evaluate(self, x):
        raise NotImplementedError()

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if x.ndim == 0 or x.shape[-1] != self.dimension:
            raise DimensionMismatch('expected {} coordinates, got shape {}'.format(self.dimension, list(x.shape)),
                                    expected=self.dimension, shape=list(x.shape))
        self.margin.check_domain(x)
        values = self._evaluate(x)
        if x.ndim == 1:
            return float(values)
        return np.asarray(values, dtype=float)

    eval = __call__

    def marginal(self, indices, cfg=DEFAULT_MINIMIZER_CONFIG):
        """Gauge of the coordinates ``indices``, in that order."""
        indices = check_indices(indices, self.dimension)
        if len(indices) == 1:
            return AbsoluteGauge(self.margin)
        if sorted(indices) == list(range(self.dimension)):
            if indices == list(range(self.dimension)):
                return self
            return self._permuted(indices)
        return self._marginal(indices, cfg)

    def _permuted(self, order):
        return PermutedGauge(self, order)

    def _marginal(self, indices, cfg):
        return NumericMarginalGauge(self, indices, cfg)

    def edge_coefficients(self, sign=1):
        """closed-form edge coefficients of a 2-d gauge, conditioning on the first argument"""
        return None

    def to_spec(self):
        return {'family': self.family, 'params': self.params}

    def __eq__(self, other):
        return type(self) is type(other) and self.margin == other.margin and \
            self.dimension == other.dimension and _params_equal(self.params, other.params)

    def __ne__(self, other):
        return not self == other

    __hash__ = object.__hash__

    def __repr__(self):
        params = ', '.join('{}={}'.format(k, v) for k, v in sorted(self.params.items()))
        return '{}({})'.format(self.__class__.__name__, params)


def _params_equal(p1, p2):
    if set(p1) != set(p2):
        return False
    return all(np.array_equal(np.asarray(p1[k]), np.asarray(p2[k])) for k in p1)


class CustomGauge(Gauge):
    """User-supplied evaluator; admissibility is checked on demand with ``check_gauge_axioms``."""

    def __init__(self, evaluator, dimension, margin, vectorized=False, name='custom'):
        super(CustomGauge, self).__init__(dimension, margin)
        self.evaluator = evaluator
        self.vectorized = vectorized
        self.name = name

    def _evaluate(self, x):
        if self.vectorized:
            return np.asarray(self.evaluator(x), dtype=float)
        flat = x.reshape(-1, self.dimension)
        values = np.array([self.evaluator(p) for p in flat], dtype=float)
        return values.reshape(x.shape[:-1])

    def to_spec(self):
        return None

    def __eq__(self, other):
        return self is other

    __hash__ = object.__hash__

    def __repr__(self):
        return 'CustomGauge({}, dimension={}, margin={})'.format(self.name, self.dimension, self.margin)


class AbsoluteGauge(Gauge):
    """one-dimensional marginal gauge |x|"""
    family = 'absolute'

    def __init__(self, margin):
        super(AbsoluteGauge, self).__init__(1, margin)

    def _evaluate(self, x):
        return np.abs(x[..., 0])


class PermutedGauge(Gauge):

    def __init__(self, base, order):
        super(PermutedGauge, self).__init__(base.dimension, base.margin)
        self.base = base
        self.order = list(order)

    def _evaluate(self, y):
        x = np.empty_like(y)
        x[..., self.order] = y
        return self.base._evaluate(x)

    def to_spec(self):
        return None

    def __eq__(self, other):
        return isinstance(other, PermutedGauge) and self.base == other.base and self.order == other.order

    __hash__ = object.__hash__

    def __repr__(self):
        return 'PermutedGauge({!r}, order={})'.format(self.base, self.order)


class NumericMarginalGauge(Gauge):
    """Marginal of a gauge by minimizing over the other coordinates.

    The eliminated box is [0, U] (or [-U, U]) with U the gauge value at zero
    eliminated coordinates: no minimizer can exceed it since g >= |x_s|.
    """

    def __init__(self, base, indices, cfg=DEFAULT_MINIMIZER_CONFIG):
        super(NumericMarginalGauge, self).__init__(len(indices), base.margin)
        self.base = base
        self.kept = list(indices)
        self.eliminated = [i for i in range(base.dimension) if i not in self.kept]
        self.cfg = cfg

    def _fill(self, y, z):
        z = np.atleast_2d(z)
        x = np.zeros((len(z), self.base.dimension))
        x[:, self.kept] = y
        x[:, self.eliminated] = z
        return x

    def _evaluate_point(self, y):
        upper = float(self.base(self._fill(y, np.zeros(len(self.eliminated)))[0]))
        bounds = [self.margin.box(upper)] * len(self.eliminated)
        _, value = minimize_box(lambda z: self.base(self._fill(y, z)), bounds, self.cfg, vectorized=True)
        return value

    def _evaluate(self, x):
        flat = x.reshape(-1, self.dimension)
        values = np.array([self._evaluate_point(y) for y in flat])
        return values.reshape(x.shape[:-1])

    def to_spec(self):
        return None

    def __eq__(self, other):
        return self is other

    __hash__ = object.__hash__

    def __repr__(self):
        return 'NumericMarginalGauge({!r}, kept={})'.format(self.base, self.kept)
