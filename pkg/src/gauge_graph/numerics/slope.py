from collections import namedtuple

import numpy as np
from scipy.stats import linregress

from ..utils import LOGGER, TooFewPoints, NegativeValue, NonFiniteObjective
from .config import DEFAULT_SLOPE_CONFIG, check_slope_config

__all__ = ['SlopeFit', 'fit_loglog_slope', 'MIN_FIT_POINTS']

MIN_FIT_POINTS = 5

SlopeFit = namedtuple('SlopeFit', ['sigma', 'r2', 'points_used', 'low_quality'])


def fit_loglog_slope(f, cfg=DEFAULT_SLOPE_CONFIG, vectorized=False):
    """Index of regular variation of ``f`` at 0+ from a log-log least-squares fit.

    ``f`` is sampled on a geometric grid of ``[x_min, x_max]``; values at or
    below ``value_floor`` are dropped before fitting.

    Returns
    -------
    SlopeFit
        slope sigma, coefficient of determination, number of points used and
        whether r2 fell under ``min_r2``
    """
    check_slope_config(cfg)
    xs = np.geomspace(cfg.x_min, cfg.x_max, cfg.points)
    if vectorized:
        values = np.asarray(f(xs), dtype=float).reshape(-1)
    else:
        values = np.array([f(x) for x in xs], dtype=float)
    if not np.all(np.isfinite(values)):
        raise NonFiniteObjective('slope target is not finite', x=xs[~np.isfinite(values)].tolist())
    if np.any(values < -cfg.value_floor):
        raise NegativeValue('slope target is negative, the contact coordinate is overestimated',
                            x=float(xs[np.argmax(values < -cfg.value_floor)]), value=float(values.min()))

    keep = values > cfg.value_floor
    if np.count_nonzero(keep) < MIN_FIT_POINTS:
        raise TooFewPoints('only {} values above the floor'.format(int(np.count_nonzero(keep))),
                           points_used=int(np.count_nonzero(keep)), value_floor=cfg.value_floor)
    fit = linregress(np.log(xs[keep]), np.log(values[keep]))
    r2 = float(fit.rvalue ** 2)
    low_quality = r2 < cfg.min_r2
    if low_quality:
        LOGGER.warning('log-log slope fit has r2 = {:.4f} < {}'.format(r2, cfg.min_r2))
    return SlopeFit(float(fit.slope), r2, int(np.count_nonzero(keep)), low_quality)
