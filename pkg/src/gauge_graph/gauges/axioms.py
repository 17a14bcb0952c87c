from collections import namedtuple

import numpy as np

from ..utils import get_rng, sample_domain_points

__all__ = ['AxiomReport', 'check_gauge_axioms']

AxiomReport = namedtuple('AxiomReport', ['passed', 'homogeneity_defect', 'lower_bound_violation', 'n_rays', 'tol'])


def check_gauge_axioms(g, n_rays=1000, tol=1e-9, seed=0):
    """Check 1-homogeneity and max-domination on random points of the margin domain.

    Failures are reported, never raised.
    """
    assert n_rays >= 1 and tol > 0
    points = sample_domain_points(n_rays, g.dimension, g.margin.value, get_rng(seed))
    values = np.asarray(g(points), dtype=float)
    doubled = np.asarray(g(2. * points), dtype=float)
    homogeneity = float(np.max(np.abs(doubled - 2. * values)))
    lower_bound = float(np.max(np.maximum(0., np.max(np.abs(points), axis=-1) - values)))
    passed = homogeneity <= tol and lower_bound <= tol
    return AxiomReport(passed, homogeneity, lower_bound, n_rays, tol)
