"""
Conditional-extremes location coefficients.

Numerically, alpha is the rightmost global minimizer of y -> g(+-1, y) on the
unit interval of the margin; through the graph it is the product of edge
coefficients along the shortest path, with a sign recursion under Laplace
margins.
"""
from collections import OrderedDict

import numpy as np

from ..utils import LOGGER, ContactValueNotOne, DimensionMismatch, NotSupported, ALPHA_ZERO_TOLERANCE
from ..numerics import minimize_box, rightmost_minimizer_1d, DEFAULT_MINIMIZER_CONFIG
from ..models import pairwise_marginal
from .results import AlphaResult, NUMERIC, RECURRENCE, parse_sign, sign_symbol
from .edges import edge_alpha_of

__all__ = ['edge_alpha', 'alpha_path', 'alpha_path_signed', 'alpha_vector', 'alpha_table', 'gaussian_path_alpha']

MAX_EXTENSION_SWEEPS = 20


def _check_contact(value, cfg, **details):
    if abs(value - 1.) > cfg.contact_tolerance:
        raise ContactValueNotOne('minimum {:.12g} differs from one, the gauge is not admissible'.format(value),
                                 contact_value=value, tolerance=cfg.contact_tolerance, **details)

def edge_alpha(g, cond_sign='+', cfg=DEFAULT_MINIMIZER_CONFIG):
    """Rightmost minimizer of y -> g(sign, y), checked to reach one.

    >>> from gauge_graph.gauges import GaussianExpGauge
    >>> round(edge_alpha(GaussianExpGauge(0.6)).value, 6)
    0.36
    """
    if g.dimension != 2:
        raise DimensionMismatch('edge_alpha needs a bivariate gauge', dimension=g.dimension, expected=2)
    sign = parse_sign(cond_sign)
    if sign < 0 and g.margin.is_exponential:
        raise NotSupported('conditioning on a negative extreme needs Laplace margins', margin=str(g.margin))

    def f(ys):
        ys = np.asarray(ys, dtype=float)
        return g(np.stack([np.full_like(ys, float(sign)), ys], axis=-1))

    y, value = rightmost_minimizer_1d(f, g.margin.unit_interval(), cfg, vectorized=True)
    _check_contact(value, cfg, contact=[float(sign), y])
    return AlphaResult(float(y), sign_symbol(sign), NUMERIC, float(value))

def _path_edges(model, i, j):
    return model.graph.chain_reduction(i, j)

def alpha_path(model, i, j, edge_data=None, cfg=DEFAULT_MINIMIZER_CONFIG):
    """Product of edge alphas along the shortest path, exponential margins.

    ``edge_data`` optionally maps (u, v) to an edge alpha or EdgeCoefficients;
    other edges use the closed forms of catalogue gauges or a numeric fit.
    """
    if not model.margin.is_exponential:
        raise NotSupported('alpha_path works on exponential margins, use alpha_path_signed', margin=str(model.margin))
    value = 1.
    for u, v in _path_edges(model, i, j):
        a = edge_alpha_of(model, u, v, 1, edge_data, cfg)
        if abs(a) <= ALPHA_ZERO_TOLERANCE:
            return AlphaResult(0., sign_symbol(1), RECURRENCE, 1.)
        value *= a
    return AlphaResult(float(value), sign_symbol(1), RECURRENCE, 1.)

def alpha_path_signed(model, i, j, cond_sign='+', edge_data=None, cfg=DEFAULT_MINIMIZER_CONFIG):
    """Signed alpha along the shortest path, Laplace margins.

    The magnitude is the product of edge magnitudes; each edge is conditioned
    on the sign that the previous vertex takes (zero counts as positive).
    ``edge_data`` may map (u, v, sign) to a signed edge alpha.
    """
    if model.margin.is_exponential:
        raise NotSupported('alpha_path_signed works on Laplace margins, use alpha_path', margin=str(model.margin))
    start = parse_sign(cond_sign)
    sign, magnitude = start, 1.
    edges = _path_edges(model, i, j)
    for k, (u, v) in enumerate(edges):
        a = edge_alpha_of(model, u, v, sign, edge_data, cfg)
        if abs(a) <= ALPHA_ZERO_TOLERANCE:
            return AlphaResult(0., sign_symbol(start), RECURRENCE, 1.)
        if k == len(edges) - 1:
            return AlphaResult(float(magnitude * a), sign_symbol(start), RECURRENCE, 1.)
        magnitude *= abs(a)
        sign = 1 if a >= 0 else -1

def gaussian_path_alpha(rhos):
    """sgn(prod rho) (prod rho)^2, the signed alpha along a Gaussian-Laplace chain"""
    product = float(np.prod(rhos))
    return float(np.sign(product) * product ** 2)

def alpha_vector(model, i, cond_sign='+', cfg=DEFAULT_MINIMIZER_CONFIG):
    """Alpha of every other vertex given an extreme of vertex ``i``.

    The joint gauge is minimized with x_i pinned at the sign, then every
    coordinate is moved to the rightmost minimizer of its slice until nothing
    moves.

    Returns
    -------
    OrderedDict
        vertex to AlphaResult, in vertex order
    """
    sign = parse_sign(cond_sign)
    if sign < 0 and model.margin.is_exponential:
        raise NotSupported('conditioning on a negative extreme needs Laplace margins', margin=str(model.margin))
    column = model.graph.index(i)
    others = [k for k in range(model.dimension) if k != column]
    interval = model.margin.unit_interval()

    def joint(z):
        z = np.atleast_2d(z)
        x = np.zeros((len(z), model.dimension))
        x[:, column] = sign
        x[:, others] = z
        return model._joint(x)

    z, value = minimize_box(joint, [interval] * len(others), cfg, vectorized=True)
    z = np.array(z, dtype=float)
    for sweep in range(MAX_EXTENSION_SWEEPS):
        moved = False
        for k in range(len(others)):
            def slice_fn(ys, k=k):
                points = np.repeat(z[None, :], len(np.atleast_1d(ys)), axis=0)
                points[:, k] = ys
                return joint(points)
            y, fy = rightmost_minimizer_1d(slice_fn, interval, cfg, vectorized=True)
            if fy <= value + cfg.contact_tolerance and abs(y - z[k]) > cfg.step_tolerance * 1e3:
                z[k], value, moved = y, min(value, fy), True
        if not moved:
            break
    value = float(joint(z)[0])
    LOGGER.debug('alpha_vector({}): {} after {} sweeps, contact {:.12g}'.format(i, z, sweep + 1, value))
    _check_contact(value, cfg, vertex=i)
    return OrderedDict((model.vertices[c], AlphaResult(float(y), sign_symbol(sign), NUMERIC, value))
                       for c, y in zip(others, z))

def alpha_table(model, method='recurrence', cfg=DEFAULT_MINIMIZER_CONFIG):
    """alpha_{j|i} for every ordered pair, keyed (i, j)"""
    table = OrderedDict()
    for i in model.vertices:
        for j in model.vertices:
            if i == j:
                continue
            if method == 'recurrence':
                if model.margin.is_exponential:
                    table[i, j] = alpha_path(model, i, j, cfg=cfg)
                else:
                    table[i, j] = alpha_path_signed(model, i, j, cfg=cfg)
            else:
                table[i, j] = edge_alpha(pairwise_marginal(model, i, j, cfg), '+', cfg)
    return table
