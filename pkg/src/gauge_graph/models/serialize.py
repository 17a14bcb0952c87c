from ..utils import NotSupported
from ..gauges import make_gauge, get_margin
from ..graphs import build_block_graph
from .model import assemble_model

__all__ = ['serialize_model', 'model_from_dict']


def serialize_model(model):
    """Plain-data description of a model built from catalogue gauges."""
    cliques = []
    for clique in model.graph.cliques:
        spec = model.clique_gauges[clique].to_spec()
        if spec is None:
            raise NotSupported('clique {} has a gauge without a catalogue description'.format(list(clique)),
                               clique=list(clique))
        cliques.append({'vertices': list(clique), 'gauge': spec})
    return {'margin': model.margin.value, 'vertices': list(model.vertices), 'cliques': cliques}

def model_from_dict(data):
    """Inverse of :func:`serialize_model`."""
    cliques = [tuple(c['vertices']) for c in data['cliques']]
    gauges = {tuple(c['vertices']): make_gauge(c['gauge']['family'], c['gauge'].get('params'), len(c['vertices']))
              for c in data['cliques']}
    return assemble_model(build_block_graph(cliques), gauges, get_margin(data['margin']))
