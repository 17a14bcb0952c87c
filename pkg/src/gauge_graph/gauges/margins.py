from enum import Enum

import numpy as np

from ..utils import DomainViolation, MarginMismatch, EXPONENTIAL, LAPLACE

__all__ = ['Margin', 'get_margin']


class Margin(Enum):
    """Standardized marginal scale of every coordinate."""
    EXPONENTIAL = EXPONENTIAL
    LAPLACE = LAPLACE

    @property
    def is_exponential(self):
        return self is Margin.EXPONENTIAL

    def box(self, bound):
        """search interval [0, bound] or [-bound, bound]"""
        return (0., bound) if self.is_exponential else (-bound, bound)

    def unit_interval(self):
        return self.box(1.)

    def check_domain(self, x):
        if self.is_exponential:
            x = np.asarray(x)
            if np.any(x < 0):
                raise DomainViolation('negative coordinate under exponential margins',
                                      value=float(np.min(x)))

    def __str__(self):
        return self.value

def get_margin(margin):
    if isinstance(margin, Margin):
        return margin
    try:
        return Margin(str(margin).lower())
    except ValueError:
        raise MarginMismatch('unknown margin {!r}'.format(margin), margin=str(margin),
                             allowed=[m.value for m in Margin])
