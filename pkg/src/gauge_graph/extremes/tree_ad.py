from collections import namedtuple

from ..utils import NotATree, NotAllAD
from ..gauges import AsymmetricADGauge

__all__ = ['TreeADMarginal', 'tree_ad_marginal', 'tree_ad_gauge']

TreeADMarginal = namedtuple('TreeADMarginal', ['theta_eff', 'gamma_eff', 'path'])


def tree_ad_marginal(model, k, l):
    """Closed-form pairwise marginal of a tree of asymmetric AD edges.

    Each edge is oriented along the path from ``k`` to ``l``; the marginal is
    again asymmetric AD with the largest theta and the largest gamma on the path.
    """
    if not model.graph.is_tree:
        raise NotATree('tree marginal needs cliques of size two',
                       cliques=[list(c) for c in model.graph.cliques if len(c) != 2])
    not_ad = [list(c) for c, g in model.clique_gauges.items() if not isinstance(g, AsymmetricADGauge)]
    if not_ad:
        raise NotAllAD('cliques {} do not carry asymmetric AD gauges'.format(not_ad), cliques=not_ad)
    path = model.graph.shortest_path(k, l)
    oriented = [model.edge_gauge(u, v) for u, v in model.graph.chain_reduction(k, l)]
    return TreeADMarginal(max(g.theta for g in oriented), max(g.gamma for g in oriented), path.vertices)

def tree_ad_gauge(result):
    return AsymmetricADGauge(result.theta_eff, result.gamma_eff)
