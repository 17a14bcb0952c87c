from collections import namedtuple

__all__ = ['EdgeCoefficients', 'make_edge_coefficients']

EdgeCoefficients = namedtuple('EdgeCoefficients', ['alpha', 'beta', 'sigma'])


def make_edge_coefficients(alpha, beta=None):
    """edge (alpha, beta) with sigma = 1 / (1 - beta); beta is None where it is undefined"""
    sigma = None if beta is None else 1. / (1. - beta)
    return EdgeCoefficients(float(alpha), None if beta is None else float(beta), sigma)
