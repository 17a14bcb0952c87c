from collections import namedtuple

from ..utils import InvalidConfig

__all__ = ['MinimizerConfig', 'SlopeFitConfig', 'DEFAULT_MINIMIZER_CONFIG', 'DEFAULT_SLOPE_CONFIG',
           'check_minimizer_config', 'check_slope_config']

MinimizerConfig = namedtuple('MinimizerConfig', ['grid_points_per_dim', 'refine_iterations', 'tolerance',
                                                 'multistart_count', 'max_grid_size', 'plateau_tolerance',
                                                 'step_tolerance', 'contact_tolerance', 'plateau_width'],
                             defaults=[41, 60, 1e-8, 8, 20000, 1e-15, 1e-13, 1e-6, 1e-7])
"""Settings shared by every minimizer.

``tolerance`` is the value tolerance of ``minimize_box``; ``plateau_tolerance`` is the
(relative) width of the sublevel set used for rightmost-minimizer decisions, a few ulps
at one; a flat minimum wider than ``plateau_width`` is checked for being a rounding
artifact; ``contact_tolerance`` is the admissible deviation of a contact value from one.
"""

SlopeFitConfig = namedtuple('SlopeFitConfig', ['x_max', 'x_min', 'points', 'value_floor', 'min_r2'],
                            defaults=[1e-2, 1e-5, 25, 1e-12, 0.99])

DEFAULT_MINIMIZER_CONFIG = MinimizerConfig()
DEFAULT_SLOPE_CONFIG = SlopeFitConfig()


def check_minimizer_config(cfg):
    if cfg.grid_points_per_dim < 3:
        raise InvalidConfig('grid_points_per_dim must be at least 3', field='grid_points_per_dim',
                            value=cfg.grid_points_per_dim)
    for name in ['tolerance', 'plateau_tolerance', 'step_tolerance', 'contact_tolerance', 'plateau_width']:
        if not getattr(cfg, name) > 0:
            raise InvalidConfig('{} must be positive'.format(name), field=name, value=getattr(cfg, name))
    for name in ['refine_iterations', 'multistart_count', 'max_grid_size']:
        if getattr(cfg, name) < 1:
            raise InvalidConfig('{} must be at least 1'.format(name), field=name, value=getattr(cfg, name))
    return cfg

def check_slope_config(cfg):
    if not 0 < cfg.x_min < cfg.x_max:
        raise InvalidConfig('need 0 < x_min < x_max', field='x_min', x_min=cfg.x_min, x_max=cfg.x_max)
    if cfg.points < 5:
        raise InvalidConfig('points must be at least 5', field='points', value=cfg.points)
    if cfg.value_floor < 0:
        raise InvalidConfig('value_floor must be non-negative', field='value_floor', value=cfg.value_floor)
    return cfg
