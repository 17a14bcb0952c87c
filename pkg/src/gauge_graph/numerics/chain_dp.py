"""
Min-sum dynamic programme over the interior vertices of a chain.

The chain ``v_0 - v_1 - ... - v_m`` has fixed end values and ``m - 1`` free
interior values. Every interior vertex is discretized on a rung of grid
values; a forward sweep propagates the best cost to every vertex of the next
rung together with its predecessor, the minimizing path is recovered by
backtracking, and all rungs are then zoomed around the incumbent path.
"""
from collections import namedtuple

import numpy as np

from ..utils import LOGGER, NonFiniteObjective
from .config import DEFAULT_MINIMIZER_CONFIG, check_minimizer_config

__all__ = ['ChainSolution', 'chain_minimize']

# number of grid spacings kept on each side of the incumbent when zooming
ZOOM_SPAN = 8

ChainSolution = namedtuple('ChainSolution', ['values', 'interior', 'levels'])


def _forward(edge_fns, first, last, rungs, subtract):
    """One sweep over the ladder; returns path costs and the argmin path indices."""
    n_points, n_interior, _ = rungs.shape
    cost = edge_fns[0](first[:, None], rungs[:, 0, :]) - subtract(rungs[:, 0, :])
    predecessors = []
    for k in range(1, n_interior):
        total = cost[:, :, None] + edge_fns[k](rungs[:, k - 1, :, None], rungs[:, k, None, :])
        pred = np.argmin(total, axis=1)
        cost = np.take_along_axis(total, pred[:, None, :], axis=1)[:, 0, :] - subtract(rungs[:, k, :])
        predecessors.append(pred)
    final = cost + edge_fns[-1](rungs[:, -1, :], last[:, None])
    if not np.all(np.isfinite(final)):
        raise NonFiniteObjective('chain objective is not finite')

    rows = np.arange(n_points)
    path = np.zeros((n_points, n_interior), dtype=int)
    path[:, -1] = np.argmin(final, axis=1)
    values = final[rows, path[:, -1]]
    for k in range(n_interior - 1, 0, -1):
        path[:, k - 1] = predecessors[k - 1][rows, path[:, k]]
    return values, path

def chain_minimize(edge_fns, first, last, lower, upper, cfg=DEFAULT_MINIMIZER_CONFIG, subtract=np.abs):
    """Minimize ``sum_k e_k(t_{k-1}, t_k) - sum_interior subtract(t_k)`` over the interior values.

    Parameters
    ----------
    edge_fns : list of callables
        ``m`` broadcasting edge costs ``e_k(u, v)``, m >= 2
    first, last : array_like, shape (P,)
        end values, one chain problem per entry
    lower, upper : array_like, shape (P,)
        box of every interior value
    cfg : MinimizerConfig
        ``grid_points_per_dim`` rung size, ``refine_iterations`` zoom levels,
        ``step_tolerance`` final grid spacing
    subtract : callable
        separator correction, ``abs`` for the joint gauge

    Returns
    -------
    ChainSolution
        minimal values (P,), minimizing interior values (P, m - 1) and the
        number of zoom levels used
    """
    assert len(edge_fns) >= 2
    check_minimizer_config(cfg)
    first = np.asarray(first, dtype=float).reshape(-1)
    last = np.asarray(last, dtype=float).reshape(-1)
    n_points, n_interior = len(first), len(edge_fns) - 1
    lower = np.broadcast_to(np.asarray(lower, dtype=float).reshape(-1, 1), (n_points, n_interior))
    upper = np.broadcast_to(np.asarray(upper, dtype=float).reshape(-1, 1), (n_points, n_interior))

    size = cfg.grid_points_per_dim | 1
    unit = np.linspace(0., 1., size)
    lo, hi = lower.copy(), upper.copy()
    best_values = np.full(n_points, np.inf)
    best_interior = lower.copy()
    rows = np.arange(n_points)[:, None]
    level = 0
    for level in range(1, cfg.refine_iterations + 1):
        rungs = lo[:, :, None] + (hi - lo)[:, :, None] * unit
        values, path = _forward(edge_fns, first, last, rungs, subtract)
        interior = rungs[rows, np.arange(n_interior)[None, :], path]
        improved = values < best_values
        best_values[improved] = values[improved]
        best_interior[improved] = interior[improved]

        spacing = (hi - lo) / (size - 1)
        if np.max(spacing / np.maximum(1., upper - lower)) <= cfg.step_tolerance:
            break
        half = ZOOM_SPAN * spacing
        lo = np.maximum(lower, best_interior - half)
        hi = np.minimum(upper, best_interior + half)
    LOGGER.debug('chain_minimize: {} problems, {} interior, {} zoom levels'.format(n_points, n_interior, level))
    return ChainSolution(best_values, best_interior, level)
