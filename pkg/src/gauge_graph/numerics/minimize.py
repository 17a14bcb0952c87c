"""
Bounded derivative-free minimization: dense-grid seeding followed by local
refinement from the best, mutually distinct, grid cells.
"""
import numpy as np
from scipy.optimize import minimize

from ..utils import LOGGER, NonFiniteObjective, DimensionMismatch, InvalidConfig
from .config import DEFAULT_MINIMIZER_CONFIG, check_minimizer_config

__all__ = ['minimize_box', 'golden_section', 'compass_search', 'evaluate_points', 'dense_grid']

GOLDEN_RATIO_INV = (np.sqrt(5.) - 1.) / 2.
# how far down the sorted grid we look for distinct seeds
SEED_SCAN_FACTOR = 50


def evaluate_points(f, points, vectorized=False):
    """Evaluate ``f`` on the rows of ``points`` and reject non-finite values."""
    points = np.asarray(points, dtype=float)
    if vectorized:
        values = np.asarray(f(points), dtype=float).reshape(-1)
    else:
        values = np.array([f(p) for p in points], dtype=float)
    bad = ~np.isfinite(values)
    if np.any(bad):
        index = int(np.argmax(bad))
        raise NonFiniteObjective('objective is not finite inside the box',
                                 point=points[index].tolist(), value=str(values[index]))
    return values

def _scalar(f, vectorized):
    if vectorized:
        return lambda z: float(evaluate_points(f, np.atleast_2d(z), True)[0])
    return lambda z: float(evaluate_points(f, np.atleast_2d(z), False)[0])

def _check_bounds(bounds):
    bounds = np.asarray(bounds, dtype=float)
    if bounds.size == 0:
        raise DimensionMismatch('bounds must be nonempty')
    bounds = bounds.reshape(-1, 2)
    if np.any(bounds[:, 0] > bounds[:, 1]):
        raise InvalidConfig('every bound needs lo <= hi', bounds=bounds.tolist())
    return bounds[:, 0].copy(), bounds[:, 1].copy()

def _grid_size(cfg, dim):
    # the size cap never thins a grid below three points per axis
    n = int(np.floor(cfg.max_grid_size ** (1. / dim) + 1e-9))
    return max(3, min(cfg.grid_points_per_dim, n))

def dense_grid(lower, upper, n):
    axes = [np.linspace(lo, hi, n) for lo, hi in zip(lower, upper)]
    mesh = np.meshgrid(*axes, indexing='ij')
    return np.stack([m.ravel() for m in mesh], axis=-1)

#######################################

def golden_section(f, lo, hi, iterations, tol=0.):
    """Golden-section search of a scalar function on [lo, hi].

    Returns the better of the two interior points when the bracket closes.
    """
    c = hi - GOLDEN_RATIO_INV * (hi - lo)
    d = lo + GOLDEN_RATIO_INV * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(iterations):
        if hi - lo <= tol:
            break
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN_RATIO_INV * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN_RATIO_INV * (hi - lo)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)

def _compass_directions(dim):
    eye = np.eye(dim)
    directions = [eye, -eye]
    # diagonal moves follow valleys along kinks like min(x_i, x_j)
    if 2 <= dim <= 8:
        for i in range(dim):
            for j in range(i + 1, dim):
                for si, sj in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
                    v = np.zeros(dim)
                    v[i], v[j] = si, sj
                    directions.append(v[None, :])
    return np.vstack(directions)

def compass_search(f, x0, f0, lower, upper, scale, cfg=DEFAULT_MINIMIZER_CONFIG, vectorized=False):
    """Pattern search with shrinking steps; every poll is one batch evaluation.

    ``scale`` holds the per-coordinate initial step.
    """
    directions = _compass_directions(len(x0)) * np.asarray(scale, dtype=float)
    x, fx = np.array(x0, dtype=float), float(f0)
    step = 0.5
    max_polls = SEED_SCAN_FACTOR * cfg.refine_iterations
    for _ in range(max_polls):
        if step * np.max(np.abs(scale)) <= cfg.step_tolerance:
            break
        candidates = np.clip(x + step * directions, lower, upper)
        values = evaluate_points(f, candidates, vectorized)
        j = int(np.argmin(values))
        if values[j] < fx:
            x, fx = candidates[j], float(values[j])
        else:
            step *= 0.5
    return x, fx

def _refine(f, x0, f0, lower, upper, spacing, cfg, vectorized):
    scalar_f = _scalar(f, vectorized)
    if len(x0) == 1:
        lo = max(lower[0], x0[0] - spacing[0])
        hi = min(upper[0], x0[0] + spacing[0])
        y, fy = golden_section(lambda t: scalar_f(np.array([t])), lo, hi, cfg.refine_iterations,
                               tol=cfg.step_tolerance)
        if fy < f0:
            return np.array([y]), fy
        return np.array(x0, dtype=float), f0

    x, fx = np.array(x0, dtype=float), f0
    dim = len(x0)
    simplex = [x.copy()]
    for i in range(dim):
        vertex = x.copy()
        vertex[i] = x[i] + spacing[i] if x[i] + spacing[i] <= upper[i] else x[i] - spacing[i]
        simplex.append(vertex)
    result = minimize(scalar_f, x, method='Nelder-Mead', bounds=list(zip(lower, upper)),
                      options=dict(initial_simplex=np.array(simplex), maxfev=200 * dim,
                                   xatol=cfg.step_tolerance, fatol=0.01 * cfg.tolerance))
    if np.isfinite(result.fun) and result.fun < fx:
        x, fx = np.clip(result.x, lower, upper), float(result.fun)
        fx = scalar_f(x)
    return compass_search(f, x, fx, lower, upper, spacing, cfg, vectorized)

def minimize_box(f, bounds, cfg=DEFAULT_MINIMIZER_CONFIG, vectorized=False):
    """Minimize ``f`` over a box.

    Parameters
    ----------
    f : callable
        objective on a point of the box; with ``vectorized=True`` it takes an
        (n, k) array and returns n values
    bounds : list of [lo, hi]
    cfg : MinimizerConfig
    vectorized : bool

    Returns
    -------
    tuple
        (argmin as ndarray, minimum value)
    """
    check_minimizer_config(cfg)
    lower, upper = _check_bounds(bounds)
    dim = len(lower)
    n = _grid_size(cfg, dim)
    points = dense_grid(lower, upper, n)
    values = evaluate_points(f, points, vectorized)

    order = np.argsort(values, kind='stable')
    best_x, best_f = points[order[0]].copy(), float(values[order[0]])
    spacing = np.where(upper > lower, (upper - lower) / (n - 1), 0.)
    if not np.any(spacing > 0):
        return best_x, best_f

    seeds = []
    cells = np.array(np.unravel_index(order[:SEED_SCAN_FACTOR * cfg.multistart_count], (n,) * dim)).T
    for rank, cell in enumerate(cells):
        if len(seeds) >= cfg.multistart_count:
            break
        if any(np.max(np.abs(cell - s)) <= 1 for s in seeds):
            continue
        seeds.append(cell)
        index = order[rank]
        x, fx = _refine(f, points[index], float(values[index]), lower, upper, spacing, cfg, vectorized)
        if fx < best_f:
            best_x, best_f = x, fx
    LOGGER.debug('minimize_box: dim {}, grid {}^{}, {} seeds, min {:.3e}'.format(dim, n, dim, len(seeds), best_f))
    return np.asarray(best_x, dtype=float), float(best_f)
