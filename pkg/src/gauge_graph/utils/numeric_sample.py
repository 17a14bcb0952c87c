import numpy as np

from .shared_const import EXPONENTIAL

__all__ = ['get_rng', 'sample_simplex', 'sample_sup_sphere', 'sample_domain_points']


def get_rng(seed=0):
    """seeded generator, all sampling in the package goes through here"""
    return np.random.default_rng(None if seed is None else seed % (2**32))

def sample_simplex(n, dim, rng):
    """n points uniform on the unit simplex {w >= 0, sum w = 1}"""
    return rng.dirichlet(np.ones(dim), size=n)

def sample_sup_sphere(n, dim, rng):
    """n points uniform on the unit sup-norm sphere {max |w_i| = 1}"""
    points = rng.uniform(-1., 1., size=(n, dim))
    face = rng.integers(dim, size=n)
    sign = np.where(rng.uniform(size=n) < 0.5, -1., 1.)
    points[np.arange(n), face] = sign
    return points

def sample_domain_points(n, dim, margin, rng, scale_range=(0.1, 10.)):
    """random points of the margin domain with spread-out magnitudes"""
    if margin == EXPONENTIAL:
        directions = rng.uniform(0., 1., size=(n, dim))
    else:
        directions = rng.uniform(-1., 1., size=(n, dim))
    scales = np.exp(rng.uniform(np.log(scale_range[0]), np.log(scale_range[1]), size=(n, 1)))
    return directions * scales
