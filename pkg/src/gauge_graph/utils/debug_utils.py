import os
import logging

from .shared_const import THREADS_ENV_VAR

__all__ = ['get_logger', 'LOGGER', 'get_worker_count']


def get_logger(name):
    logger = logging.getLogger(name)

    try:
        from colorlog import ColoredFormatter
        formatter = ColoredFormatter("%(log_color)s%(levelname)-8s%(reset)s %(message)s",
                                     datefmt=None,
                                     reset=True,
                                     log_colors={'DEBUG': 'cyan', 'INFO': 'green',
                                                 'WARNING': 'yellow',
                                                 'ERROR': 'red', 'CRITICAL': 'red',
                                                 }
                                     )
    except ImportError:
        formatter = logging.Formatter('[%(levelname)s] %(message)s')

    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    logger.setLevel(logging.INFO)

    return logger

LOGGER = get_logger('gauge_graph')

#######################################

def get_worker_count(default=None):
    """Number of worker threads for independent evaluations.

    ``GAUGE_GRAPH_THREADS`` caps the count; invalid values are ignored with a warning.
    """
    count = default or min(8, os.cpu_count() or 1)
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return count
    try:
        cap = int(raw)
    except ValueError:
        LOGGER.warning('Ignoring {}={!r}: not an integer.'.format(THREADS_ENV_VAR, raw))
        return count
    if cap < 1:
        LOGGER.warning('Ignoring {}={}: must be positive.'.format(THREADS_ENV_VAR, cap))
        return count
    return min(count, cap)
