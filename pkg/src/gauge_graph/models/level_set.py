import numpy as np

from ..utils import get_rng, sample_simplex, sample_sup_sphere, write_csv_rows
from .model import Model

__all__ = ['level_set_point', 'sample_level_set', 'write_points_csv']


def _as_gauge(g):
    return g.as_gauge() if isinstance(g, Model) else g

def level_set_point(g, w):
    """the point of the unit level set in direction ``w``"""
    g = _as_gauge(g)
    w = np.asarray(w, dtype=float)
    return w / g(w)

def _planar_directions(n, margin):
    if margin.is_exponential:
        s = np.linspace(0., 1., n)
        return np.stack([1. - s, s], axis=-1)
    phi = 2. * np.pi * np.arange(n) / n
    w = np.stack([np.cos(phi), np.sin(phi)], axis=-1)
    return w / np.max(np.abs(w), axis=-1, keepdims=True)

def sample_level_set(g, n, seed=0):
    """Points ``w / g(w)`` on the boundary of the unit level set.

    Directions are uniform on the unit simplex (exponential margins) or on the
    unit sup-norm sphere (Laplace margins). In two dimensions they are evenly
    spaced instead and the points come out in angular order.

    Parameters
    ----------
    g : Gauge or Model
    n : int
    seed : int
        seed of the direction sampler in three or more dimensions

    Returns
    -------
    ndarray
        shape (n, d)
    """
    assert n >= 1
    g = _as_gauge(g)
    if g.dimension == 2:
        directions = _planar_directions(n, g.margin)
    elif g.margin.is_exponential:
        directions = sample_simplex(n, g.dimension, get_rng(seed))
    else:
        directions = sample_sup_sphere(n, g.dimension, get_rng(seed))
    points = directions / np.asarray(g(directions), dtype=float)[:, None]
    if g.dimension == 2:
        angles = np.arctan2(points[:, 1], points[:, 0])
        points = points[np.argsort(angles, kind='stable')]
    return points

def write_points_csv(points, stream=None):
    """level-set CSV: header ``x1,...,xd`` and one row per point"""
    points = np.atleast_2d(points)
    header = ['x{}'.format(k + 1) for k in range(points.shape[1])]
    return write_csv_rows(header, points.tolist(), stream)
