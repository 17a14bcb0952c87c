import logging
import pytest
from gauge_graph import LOGGER
LOGGER.setLevel(logging.DEBUG)

from fixtures import *

def pytest_addoption(parser):
    parser.addoption('--print_debug', action='store_true', help='print out info')

@pytest.fixture
def print_debug(request):
    return request.config.getoption("--print_debug")
