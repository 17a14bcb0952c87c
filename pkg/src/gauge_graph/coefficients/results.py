from collections import namedtuple

from ..utils import NotSupported

__all__ = ['PLUS', 'MINUS', 'RECURRENCE', 'NUMERIC', 'NUMERIC_FIT', 'AlphaResult', 'BetaResult', 'parse_sign',
           'sign_symbol']

PLUS, MINUS = '+', '-'
RECURRENCE, NUMERIC, NUMERIC_FIT = 'recurrence', 'numeric', 'numeric_fit'

AlphaResult = namedtuple('AlphaResult', ['value', 'conditioning_sign', 'method', 'contact_value'])

BetaResult = namedtuple('BetaResult', ['value', 'sigma', 'method', 'fit_r2', 'points_used', 'low_quality'],
                        defaults=[None, None, False])


def parse_sign(sign):
    """+1 or -1 from '+', '-', 'plus', 'minus' or a number"""
    if isinstance(sign, str):
        key = sign.strip().lower()
        if key in ('+', 'plus', '+1', '1'):
            return 1
        if key in ('-', 'minus', '-1'):
            return -1
        raise NotSupported('unknown conditioning sign {!r}'.format(sign), sign=sign)
    return 1 if sign >= 0 else -1

def sign_symbol(sign):
    return PLUS if parse_sign(sign) > 0 else MINUS
