"""
JSON model files.

A model file names its vertices with string labels, lists the cliques by
label and gives each clique a catalogue gauge::

    {"margin": "exponential",
     "vertices": ["1", "2", "3"],
     "cliques": [{"vertices": ["1", "2"], "gauge": {"family": "logistic", "params": {"theta": 0.4}}},
                 {"vertices": ["2", "3"], "gauge": {"family": "gaussian", "params": {"rho": 0.6}}}]}

Labels are sorted lexicographically and vertex ``k`` of the parsed model is
the ``k``-th label.
"""
import os
import json
from collections import namedtuple
from typing import Annotated, Any, Dict, List

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, ValidationError, field_validator

from ..utils import GaugeGraphError, ParseError, read, dumps_json, LAPLACE, EXPONENTIAL
from ..gauges import make_gauge
from ..graphs import build_block_graph
from ..models import assemble_model, serialize_model

__all__ = ['GaugeSpec', 'CliqueSpec', 'ModelSpecDocument', 'LabelledModel', 'parse_model_file',
           'serialize_model_file', 'load_model_file', 'EXAMPLE_DIRECTORY', 'list_examples', 'example_path',
           'load_example', 'load_model_source']

EXAMPLE_DIRECTORY = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir, 'data'))

LabelledModel = namedtuple('LabelledModel', ['model', 'labels'])


def _as_labels(values):
    # integer labels are accepted and read as their decimal string
    if isinstance(values, list):
        return [str(v) if isinstance(v, int) and not isinstance(v, bool) else v for v in values]
    return values

Labels = Annotated[List[str], BeforeValidator(_as_labels)]


class GaugeSpec(BaseModel):
    model_config = ConfigDict(extra='forbid')

    family: str
    params: Dict[str, Any] = Field(default_factory=dict)


class CliqueSpec(BaseModel):
    model_config = ConfigDict(extra='forbid')

    vertices: Labels
    gauge: GaugeSpec


class ModelSpecDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    margin: str
    vertices: Labels
    cliques: List[CliqueSpec]

    @field_validator('margin')
    @classmethod
    def known_margin(cls, value):
        value = value.strip().lower()
        if value not in (EXPONENTIAL, LAPLACE):
            raise ValueError('margin must be {!r} or {!r}'.format(EXPONENTIAL, LAPLACE))
        return value

    @field_validator('vertices')
    @classmethod
    def distinct_labels(cls, value):
        if not value:
            raise ValueError('at least one vertex is required')
        repeated = sorted({v for v in value if value.count(v) > 1})
        if repeated:
            raise ValueError('repeated vertex label {!r}'.format(repeated[0]))
        return value

#######################################

def _field_path(loc):
    path = ''
    for part in loc:
        path += '[{}]'.format(part) if isinstance(part, int) else ('.' if path else '') + str(part)
    return path

def _surface(error, field):
    """re-raise a model error with the file field it came from"""
    error.details.setdefault('field', field)
    error.message = '{}: {}'.format(field, error.message)
    error.args = (error.message,)
    return error

def parse_model_file(text):
    """Parse model file text into a :class:`LabelledModel`.

    Raises
    ------
    ParseError
        malformed JSON (with ``line`` and ``column``), schema violations and
        unknown labels (with the ``field`` path)
    GaugeGraphError
        graph and gauge errors, with the ``field`` path of the offending entry
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError('invalid JSON at line {} column {}: {}'.format(e.lineno, e.colno, e.msg),
                         line=e.lineno, column=e.colno)
    try:
        document = ModelSpecDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = _field_path(first['loc'])
        raise ParseError('{}: {}'.format(field or 'document', first['msg']), field=field,
                         error_count=e.error_count())

    labels = tuple(sorted(document.vertices))
    index = {label: k for k, label in enumerate(labels)}
    for c, clique in enumerate(document.cliques):
        for v, label in enumerate(clique.vertices):
            if label not in index:
                raise ParseError('clique {} references unknown vertex {!r}'.format(c, label),
                                 field='cliques[{}].vertices[{}]'.format(c, v), vertex=label)
    used = {label for clique in document.cliques for label in clique.vertices}
    unused = [label for label in labels if label not in used]
    if unused:
        raise ParseError('vertex {!r} belongs to no clique'.format(unused[0]), field='vertices', vertex=unused[0])

    cliques = [tuple(index[label] for label in clique.vertices) for clique in document.cliques]
    try:
        graph = build_block_graph(cliques)
    except GaugeGraphError as e:
        raise _surface(e, 'cliques')
    gauges = {}
    for c, (clique, spec) in enumerate(zip(cliques, document.cliques)):
        try:
            gauges[clique] = make_gauge(spec.gauge.family, spec.gauge.params, len(clique))
        except GaugeGraphError as e:
            raise _surface(e, 'cliques[{}].gauge'.format(c))
    try:
        model = assemble_model(graph, gauges, document.margin)
    except GaugeGraphError as e:
        raise _surface(e, 'cliques')
    return LabelledModel(model, labels)

def serialize_model_file(model, labels=None):
    """Model file text for ``model``; inverse of :func:`parse_model_file`.

    Without ``labels`` the vertices are written as zero-padded numbers, so
    that their lexicographic order is the vertex order.
    """
    if labels is None:
        width = len(str(max(model.vertices)))
        labels = [str(v).zfill(width) for v in model.vertices]
    label_of = dict(zip(model.vertices, labels))
    data = serialize_model(model)
    return dumps_json({
        'margin': data['margin'],
        'vertices': [label_of[v] for v in data['vertices']],
        'cliques': [{'vertices': [label_of[v] for v in c['vertices']], 'gauge': c['gauge']}
                    for c in data['cliques']],
    })

def load_model_file(path):
    return parse_model_file(read(path))

#######################################

def list_examples():
    return sorted(os.path.splitext(name)[0] for name in os.listdir(EXAMPLE_DIRECTORY) if name.endswith('.json'))

def example_path(name):
    return os.path.join(EXAMPLE_DIRECTORY, '{}.json'.format(name))

def load_example(name):
    """one of the bundled model files, by name"""
    if name not in list_examples():
        raise ParseError('no bundled example {!r}'.format(name), example=name, available=list_examples())
    return load_model_file(example_path(name))

def load_model_source(source):
    """a model file path, or the name of a bundled example"""
    if os.path.isfile(source):
        return load_model_file(source)
    return load_example(source)
