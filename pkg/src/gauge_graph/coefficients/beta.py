import numpy as np

from ..utils import LOGGER, NotSupported, DimensionMismatch, ParameterOutOfRange, TooFewPoints, ALPHA_ZERO_TOLERANCE
from ..numerics import fit_loglog_slope, DEFAULT_MINIMIZER_CONFIG, DEFAULT_SLOPE_CONFIG
from .results import BetaResult, NUMERIC_FIT, RECURRENCE
from .edges import path_edge_coefficients

__all__ = ['edge_beta', 'beta_path', 'beta_step', 'beta_fold', 'beta_max_shortcut', 'beta_product_shortcut']

# fit windows shift up by this factor while too few values clear the floor, up to WINDOW_CAP
WINDOW_SHIFT = 10.
WINDOW_CAP = 1.


def edge_beta(g, alpha, cfg=DEFAULT_SLOPE_CONFIG):
    """Scale coefficient from the regular-variation index of x -> g(1, alpha + x) - 1.

    Fits below sigma = 1 are clamped to beta = 0. When too few values of
    ``g(1, alpha + x) - 1`` clear ``value_floor`` (very flat contacts such as
    ``InvertedLogisticGauge(0.2)``), the window is shifted up by decades, with
    a warning, as long as ``x_max`` stays within ``WINDOW_CAP``.
    """
    if not g.margin.is_exponential:
        raise NotSupported('beta coefficients are only defined under exponential margins', margin=str(g.margin))
    if g.dimension != 2:
        raise DimensionMismatch('edge_beta needs a bivariate gauge', dimension=g.dimension, expected=2)

    def f(xs):
        xs = np.asarray(xs, dtype=float)
        return g(np.stack([np.ones_like(xs), alpha + xs], axis=-1)) - 1.

    window = cfg
    while True:
        try:
            fit = fit_loglog_slope(f, window, vectorized=True)
            break
        except TooFewPoints as e:
            if window.x_max * WINDOW_SHIFT > WINDOW_CAP * (1. + 1e-12):
                raise
            window = window._replace(x_min=window.x_min * WINDOW_SHIFT, x_max=window.x_max * WINDOW_SHIFT)
            LOGGER.warning('edge_beta: {}, shifting the fit window to [{:.0e}, {:.0e}]'.format(
                e, window.x_min, window.x_max))
    sigma = fit.sigma
    if sigma < 1.:
        LOGGER.warning('fitted sigma {:.4f} < 1, clamping beta to 0'.format(sigma))
        sigma = 1.
    return BetaResult(1. - 1. / sigma, sigma, NUMERIC_FIT, fit.r2, fit.points_used, fit.low_quality)

#######################################

def _is_zero(alpha):
    return abs(alpha) <= ALPHA_ZERO_TOLERANCE

def beta_step(alpha_prev, beta_prev, alpha_edge, beta_edge):
    """beta_{j|i} from (alpha, beta) of the penultimate vertex given i and of the last edge"""
    zero_prev, zero_edge = _is_zero(alpha_prev), _is_zero(alpha_edge)
    if not zero_prev and not zero_edge:
        return max(beta_prev, beta_edge)
    if zero_prev and not zero_edge:
        return beta_prev
    if zero_edge and not zero_prev:
        return beta_edge
    return beta_prev * beta_edge

def beta_fold(edges):
    """Fold (alpha, beta) along a path of EdgeCoefficients; returns (alpha, beta)."""
    alpha, beta = edges[0].alpha, edges[0].beta
    for edge in edges[1:]:
        beta = beta_step(alpha, beta, edge.alpha, edge.beta)
        alpha = alpha * edge.alpha
    return alpha, beta

def beta_max_shortcut(edges):
    """max of edge betas when every edge alpha is positive, else None"""
    if all(not _is_zero(e.alpha) for e in edges):
        return max(e.beta for e in edges)
    return None

def beta_product_shortcut(edges):
    """product of edge betas when every edge alpha is zero, else None"""
    if all(_is_zero(e.alpha) for e in edges):
        return float(np.prod([e.beta for e in edges]))
    return None

def beta_path(model, i, j, edge_data=None, cfg=DEFAULT_MINIMIZER_CONFIG, slope_cfg=DEFAULT_SLOPE_CONFIG):
    """Scale coefficient beta_{j|i} by the path recurrence.

    Parameters
    ----------
    model : Model
        exponential margins
    i, j : vertex
    edge_data : dict, optional
        (u, v) to EdgeCoefficients or an (alpha, beta) pair; edges not listed
        use closed forms or numeric fits of their bivariate gauges

    Returns
    -------
    BetaResult
    """
    if not model.margin.is_exponential:
        raise NotSupported('beta coefficients are only defined under exponential margins', margin=str(model.margin))
    edges = path_edge_coefficients(model, i, j, edge_data, cfg, slope_cfg)
    for (u, v), edge in zip(model.graph.chain_reduction(i, j), edges):
        if edge.beta is None or not 0. <= edge.beta < 1.:
            raise ParameterOutOfRange('edge ({}, {}) has beta {} outside [0, 1)'.format(u, v, edge.beta),
                                      parameter='beta', edge=[u, v], value=edge.beta)
    _, beta = beta_fold(edges)
    return BetaResult(float(beta), 1. / (1. - beta), RECURRENCE)
