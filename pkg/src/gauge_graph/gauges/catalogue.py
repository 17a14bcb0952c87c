from ..utils import ParameterOutOfRange, DimensionMismatch
from .families import LogisticGauge, GaussianExpGauge, InvertedLogisticGauge, SquareGauge, AsymmetricADGauge, \
    GaussianLaplaceGauge, _check_pairwise

__all__ = ['GAUGE_FAMILIES', 'make_gauge']

GAUGE_FAMILIES = {
    'logistic': ['theta'],
    'gaussian': ['rho'],
    'inverted_logistic': ['theta'],
    'square': ['theta'],
    'asymmetric_ad': ['theta', 'gamma'],
    'gaussian_laplace': ['sigma'],
}
FAMILY_ALIASES = {'gaussian_exp': 'gaussian', 'invlog': 'inverted_logistic', 'ad': 'asymmetric_ad'}


def _require(params, names, family):
    missing = [n for n in names if n not in params]
    if missing:
        raise ParameterOutOfRange('{} gauge is missing parameter {}'.format(family, missing[0]),
                                  parameter=missing[0], family=family)

def _reject_unknown(params, allowed, family):
    unknown = sorted(set(params) - set(allowed))
    if unknown:
        raise ParameterOutOfRange('{} gauge has no parameter {}'.format(family, unknown[0]),
                                  parameter=unknown[0], family=family, allowed=sorted(allowed))

def make_gauge(family, params=None, dimension=None):
    """Build a catalogue gauge from its family name and parameters.

    Parameters
    ----------
    family : str
        one of ``GAUGE_FAMILIES``
    params : dict
        family parameters; ``gaussian_laplace`` takes the correlation matrix
        ``sigma`` or, in two dimensions, a scalar ``rho``
    dimension : int, optional
        expected dimension, usually the clique size

    Returns
    -------
    Gauge

    Raises
    ------
    ParameterOutOfRange, NotPositiveDefinite, DimensionMismatch
    """
    params = dict(params or {})
    family = FAMILY_ALIASES.get(str(family).lower(), str(family).lower())
    if family not in GAUGE_FAMILIES:
        raise ParameterOutOfRange('unknown gauge family {!r}'.format(family), parameter='family',
                                  value=family, allowed=sorted(GAUGE_FAMILIES))

    if family == 'logistic':
        _reject_unknown(params, ['theta', 'dimension'], family)
        _require(params, ['theta'], family)
        d = int(params.get('dimension', dimension or 2))
        if dimension is not None and d != dimension:
            raise DimensionMismatch('logistic dimension {} does not match {}'.format(d, dimension),
                                    expected=dimension, dimension=d)
        return LogisticGauge(params['theta'], d)

    if family == 'gaussian_laplace':
        _reject_unknown(params, ['sigma', 'rho'], family)
        if 'rho' in params:
            gauge = GaussianLaplaceGauge.from_rho(params['rho'])
        else:
            _require(params, ['sigma'], family)
            gauge = GaussianLaplaceGauge(params['sigma'])
        if dimension is not None and gauge.dimension != dimension:
            raise DimensionMismatch('correlation matrix of size {} for dimension {}'.format(gauge.dimension, dimension),
                                    expected=dimension, dimension=gauge.dimension)
        return gauge

    names = GAUGE_FAMILIES[family]
    _reject_unknown(params, names, family)
    _require(params, names, family)
    if dimension is not None:
        _check_pairwise(dimension, family)
    if family == 'gaussian':
        return GaussianExpGauge(params['rho'])
    if family == 'inverted_logistic':
        return InvertedLogisticGauge(params['theta'])
    if family == 'square':
        return SquareGauge(params['theta'])
    return AsymmetricADGauge(params['theta'], params['gamma'])
