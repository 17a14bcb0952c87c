"""
Error kinds raised on invalid user data.

Every error is a ``ValueError`` so callers that only care about bad input can
keep catching that. The structured ``details`` travel to the command line as
the machine-readable error report.
"""

__all__ = [
    'GaugeGraphError',
    'ParameterOutOfRange', 'NotPositiveDefinite', 'DomainViolation', 'DimensionMismatch', 'MarginMismatch',
    'NotConnected', 'SeparatorNotSingleton', 'NotDecomposable', 'SameVertex', 'UnknownVertex', 'InvalidClique',
    'NonFiniteObjective', 'TooFewPoints', 'NegativeValue', 'InvalidConfig',
    'MissingCliqueGauge', 'EmptyKeptSet',
    'ContactValueNotOne', 'NotSupported',
    'EmptySubset', 'DimensionTooLarge', 'SeparatorsIncluded', 'NotATree', 'NotAllAD',
    'ParseError',
]


class GaugeGraphError(ValueError):

    def __init__(self, message, **details):
        super(GaugeGraphError, self).__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        return {'error': self.__class__.__name__,
                'message': self.message,
                'details': {k: _jsonable(v) for k, v in self.details.items()}}


def _jsonable(value):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    if hasattr(value, 'tolist'):
        return value.tolist()
    return value

# gauges
class ParameterOutOfRange(GaugeGraphError): pass
class NotPositiveDefinite(GaugeGraphError): pass
class DomainViolation(GaugeGraphError): pass
class DimensionMismatch(GaugeGraphError): pass
class MarginMismatch(GaugeGraphError): pass

# graphs
class NotConnected(GaugeGraphError): pass
class SeparatorNotSingleton(GaugeGraphError): pass
class NotDecomposable(GaugeGraphError): pass
class SameVertex(GaugeGraphError): pass
class UnknownVertex(GaugeGraphError): pass
class InvalidClique(GaugeGraphError): pass

# numerics
class NonFiniteObjective(GaugeGraphError): pass
class TooFewPoints(GaugeGraphError): pass
class NegativeValue(GaugeGraphError): pass
class InvalidConfig(GaugeGraphError): pass

# models
class MissingCliqueGauge(GaugeGraphError): pass
class EmptyKeptSet(GaugeGraphError): pass

# coefficients
class ContactValueNotOne(GaugeGraphError): pass
class NotSupported(GaugeGraphError): pass

# joint extremes
class EmptySubset(GaugeGraphError): pass
class DimensionTooLarge(GaugeGraphError): pass
class SeparatorsIncluded(GaugeGraphError): pass
class NotATree(GaugeGraphError): pass
class NotAllAD(GaugeGraphError): pass

# model files
class ParseError(GaugeGraphError):
    """Model file problem, addressed by ``line``/``column`` or by ``field`` path."""
    pass
