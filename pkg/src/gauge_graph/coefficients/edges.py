"""
Per-edge coefficients feeding the path recurrences.

Catalogue gauges contribute their closed forms; any other bivariate gauge is
measured numerically on the clique's bivariate marginal.
"""

from ..gauges import make_edge_coefficients, EdgeCoefficients
from ..numerics import DEFAULT_MINIMIZER_CONFIG, DEFAULT_SLOPE_CONFIG

__all__ = ['edge_alpha_of', 'edge_coefficients_of', 'path_edge_coefficients']


def _lookup(edge_data, key):
    if edge_data is None or key not in edge_data:
        return None
    return edge_data[key]

def edge_alpha_of(model, u, v, sign=1, edge_data=None, cfg=DEFAULT_MINIMIZER_CONFIG):
    """alpha of x_v given an extreme of x_u with the given sign"""
    given = _lookup(edge_data, (u, v, sign)) if not model.margin.is_exponential else None
    if given is None:
        given = _lookup(edge_data, (u, v))
    if given is not None:
        return float(given.alpha if isinstance(given, EdgeCoefficients) else given)
    gauge = model.edge_gauge(u, v)
    coefficients = gauge.edge_coefficients(sign)
    if coefficients is not None:
        return coefficients.alpha
    from .alpha import edge_alpha
    return edge_alpha(gauge, sign, cfg).value

def edge_coefficients_of(model, u, v, edge_data=None, cfg=DEFAULT_MINIMIZER_CONFIG, slope_cfg=DEFAULT_SLOPE_CONFIG):
    """(alpha, beta, sigma) of the edge u -> v under exponential margins"""
    given = _lookup(edge_data, (u, v))
    if given is not None:
        if isinstance(given, EdgeCoefficients):
            return given
        return make_edge_coefficients(*given)
    gauge = model.edge_gauge(u, v)
    coefficients = gauge.edge_coefficients(1)
    if coefficients is not None and coefficients.beta is not None:
        return coefficients
    from .alpha import edge_alpha
    from .beta import edge_beta
    alpha = coefficients.alpha if coefficients is not None else edge_alpha(gauge, 1, cfg).value
    return make_edge_coefficients(alpha, edge_beta(gauge, alpha, slope_cfg).value)

def path_edge_coefficients(model, i, j, edge_data=None, cfg=DEFAULT_MINIMIZER_CONFIG,
                           slope_cfg=DEFAULT_SLOPE_CONFIG):
    return [edge_coefficients_of(model, u, v, edge_data, cfg, slope_cfg)
            for u, v in model.graph.chain_reduction(i, j)]
