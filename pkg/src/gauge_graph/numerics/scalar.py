import numpy as np
from scipy.optimize import curve_fit
from scipy.stats import linregress

from ..utils import LOGGER, NonFiniteObjective, InvalidConfig
from .config import DEFAULT_MINIMIZER_CONFIG, check_minimizer_config
from .minimize import golden_section

__all__ = ['rightmost_minimizer_1d']

# a real plateau edge lifts f this many bands above the minimum within one plateau width
EDGE_RISE = 1e6
# excess window sampled right of a rounding plateau: from EXCESS_FLOOR bands up to
# EXCESS_CEILING relative to max(1, |m|)
EXCESS_FLOOR = 1e4
EXCESS_CEILING = 1e-7
OFFSET_RATIO = 2. ** 0.25
MIN_EXCESS_POINTS = 5


def _evaluate_1d(f, ys, vectorized):
    ys = np.asarray(ys, dtype=float)
    if vectorized:
        values = np.asarray(f(ys), dtype=float).reshape(-1)
    else:
        values = np.array([f(y) for y in ys], dtype=float)
    bad = ~np.isfinite(values)
    if np.any(bad):
        index = int(np.argmax(bad))
        raise NonFiniteObjective('objective is not finite inside the interval',
                                 point=float(ys[index]), value=str(values[index]))
    return values

def _candidate_minima(values, cfg):
    """Indices of discrete local minima worth refining, closest to the minimum first."""
    n = len(values)
    m = values.min()
    slack = np.max(np.abs(np.diff(values))) if n > 1 else 0.
    candidates = []
    for i in range(n):
        left, right = values[max(i - 1, 0)], values[min(i + 1, n - 1)]
        if values[i] > left or values[i] > right:
            continue
        if 0 < i < n - 1 and values[i] == left == right:
            # plateau interior
            continue
        if values[i] <= m + slack:
            candidates.append(i)
    candidates.sort(key=lambda i: (values[i], i))
    return candidates[:cfg.multistart_count]

def _bisect_edge(scalar_f, inside, outside, threshold, cfg):
    """Boundary of the sublevel set ``{f <= threshold}`` between an inside and an outside point."""
    a, b = inside, outside
    for _ in range(cfg.refine_iterations):
        if abs(b - a) <= cfg.step_tolerance * max(1., abs(a)):
            break
        mid = 0.5 * (a + b)
        if scalar_f(mid) <= threshold:
            a = mid
        else:
            b = mid
    return a

def _plateau_left_end(scalar_f, ys, values, right_end, threshold, cfg):
    outside = ys[(ys < right_end) & (values > threshold)]
    if len(outside) == 0:
        return float(ys[0])
    return _bisect_edge(scalar_f, right_end, float(outside[-1]), threshold, cfg)

def _power_law_root(ys, excess, lower, upper, start, noise):
    """Root ``y0`` of ``excess ~ c * (y - y0)**p``, fitted in log space with ``lower <= y0 <= upper``.

    ``noise`` is the absolute rounding error of the excess, so each log value is
    weighted by its relative error ``noise / excess``.
    """
    log_excess = np.log(excess)
    model = lambda y, log_c, p, y0: log_c + p * np.log(y - y0)
    guess = linregress(np.log(ys - start), log_excess)
    p0 = [guess.intercept, float(np.clip(guess.slope, 0.2, 50.)), start]
    try:
        params, _ = curve_fit(model, ys, log_excess, p0=p0, sigma=noise / excess,
                              bounds=([-np.inf, 0.1, lower], [np.inf, 100., upper]))
    except (RuntimeError, ValueError) as e:
        LOGGER.debug('power law fit of the excess failed: {}'.format(e))
        return None
    return float(params[2])

def _rounding_contact(f, a, b, hi, m, band, vectorized):
    """Contact hidden in a flat stretch ``[a, b]`` of computed minima, None for a real plateau.

    Right of a real plateau f leaves the rounding band at once. Right of a
    plateau made by rounding, the excess ``f - m`` grows like ``c (y - y0)^p``
    from a contact ``y0`` inside it.
    """
    width = b - a
    if b + width > hi:
        return None
    n = int(np.floor(np.log((hi - b) / width) / np.log(OFFSET_RATIO))) + 1
    ys = b + width * OFFSET_RATIO ** np.arange(n)
    ys = ys[ys <= hi]
    excess = _evaluate_1d(f, ys, vectorized) - m
    if excess[0] > EDGE_RISE * band:
        return None
    keep = (excess >= EXCESS_FLOOR * band) & (excess <= EXCESS_CEILING * max(1., abs(m)))
    if np.count_nonzero(keep) < MIN_EXCESS_POINTS:
        LOGGER.debug('flat minimum [{:.6g}, {:.6g}]: only {} excess samples to fit'.format(
            a, b, np.count_nonzero(keep)))
        return None
    noise = np.spacing(max(1., abs(m)))
    y0 = _power_law_root(ys[keep], excess[keep], a - width, b, a, noise)
    return None if y0 is None else float(np.clip(y0, a, b))

def rightmost_minimizer_1d(f, interval, cfg=DEFAULT_MINIMIZER_CONFIG, vectorized=False):
    """Largest argument attaining the global minimum of ``f`` on ``interval``.

    A dense scan locates the basins, each promising basin is refined by
    golden-section search, and the right boundary of the sublevel set
    ``{f <= m + plateau_tolerance * max(1, |m|)}`` is located by bisection.

    A flat minimum wider than ``plateau_width`` is either a real plateau,
    whose right end is returned, or a contact so flat that ``f`` rounds to
    its minimum around it (``g(1, y) = 1 + O(y^5)`` for instance). The two are
    told apart by how fast ``f`` rises right of the stretch, and the contact
    of the second kind is recovered from a power law fit of that rise.

    Returns
    -------
    tuple
        (y*, f(y*))
    """
    check_minimizer_config(cfg)
    lo, hi = float(interval[0]), float(interval[1])
    if hi < lo:
        raise InvalidConfig('interval needs lo <= hi', interval=[lo, hi])
    scalar_f = lambda y: float(_evaluate_1d(f, [y], vectorized)[0])
    if hi == lo:
        return lo, scalar_f(lo)

    ys = np.linspace(lo, hi, cfg.grid_points_per_dim)
    values = _evaluate_1d(f, ys, vectorized)

    refined = []
    for i in _candidate_minima(values, cfg):
        a, b = ys[max(i - 1, 0)], ys[min(i + 1, len(ys) - 1)]
        refined.append(golden_section(scalar_f, a, b, cfg.refine_iterations, tol=cfg.step_tolerance))
    m = min([float(values.min())] + [v for _, v in refined])
    band = cfg.plateau_tolerance * max(1., abs(m))
    threshold = m + band

    inside = [y for y, v in zip(ys, values) if v <= threshold] + [y for y, v in refined if v <= threshold]
    anchor = max(inside)
    right = ys[ys > anchor]
    y = float(anchor) if len(right) == 0 else _bisect_edge(scalar_f, anchor, float(right[0]), threshold, cfg)

    inner = y - cfg.plateau_width
    if inner > lo and scalar_f(inner) <= threshold:
        left = _plateau_left_end(scalar_f, ys, values, y, threshold, cfg)
        contact = _rounding_contact(f, left, y, hi, m, band, vectorized)
        if contact is not None:
            LOGGER.debug('rightmost_minimizer_1d: flat minimum [{:.6g}, {:.6g}] is rounding, contact {:.12g}'.format(
                left, y, contact))
            y = contact
    fy = scalar_f(y)
    LOGGER.debug('rightmost_minimizer_1d: y* = {:.12g}, f = {:.12g}, grid min {:.12g}'.format(y, fy, values.min()))
    return y, fy
