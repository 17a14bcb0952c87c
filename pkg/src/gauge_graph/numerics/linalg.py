import numpy as np
from scipy.linalg import cho_factor, cho_solve, LinAlgError

from ..utils import NotPositiveDefinite, DimensionMismatch, SYMMETRY_TOLERANCE, MAX_SPD_DIM

__all__ = ['invert_spd']


def _check_symmetric(m):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch('matrix must be square', shape=list(m.shape))
    if m.shape[0] > MAX_SPD_DIM:
        raise DimensionMismatch('matrix dimension exceeds {}'.format(MAX_SPD_DIM), shape=list(m.shape))
    if not np.allclose(m, m.T, rtol=0., atol=SYMMETRY_TOLERANCE):
        raise NotPositiveDefinite('matrix is not symmetric', max_asymmetry=float(np.max(np.abs(m - m.T))))

def invert_spd(m):
    """Inverse of a symmetric positive definite matrix through its Cholesky factor.

    Parameters
    ----------
    m : array_like
        square symmetric matrix, dimension at most 32

    Returns
    -------
    ndarray
        the inverse, symmetrized

    Raises
    ------
    NotPositiveDefinite
        when the factorization fails
    """
    m = np.array(m, dtype=float)
    _check_symmetric(m)
    try:
        factor = cho_factor(m, lower=True, check_finite=True)
    except (LinAlgError, ValueError) as e:
        raise NotPositiveDefinite('matrix is not positive definite: {}'.format(e))
    inverse = cho_solve(factor, np.eye(m.shape[0]))
    return 0.5 * (inverse + inverse.T)
