__title__ = 'gauge_graph'
__description__ = 'geometric extremal graphical models on block graphs: joint gauges, marginal gauges, conditional extremes coefficients and extreme directions.'
__url__ = 'https://github.com/yijiangh/gauge_graph'
__version__ = '0.1.0'
__author__ = 'Yijiang Huang'
__author_email__ = 'yijiangh@mit.edu'
__license__ = 'MIT license'
__copyright__ = 'Copyright 2026 Yijiang Huang'

__all__ = ['__author__', '__author_email__', '__copyright__', '__description__', '__license__', '__title__', '__url__', '__version__']
