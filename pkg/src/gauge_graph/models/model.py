import threading

import numpy as np

from ..utils import DimensionMismatch, MarginMismatch, MissingCliqueGauge, InvalidClique
from ..gauges import Gauge, get_margin

__all__ = ['Model', 'JointGauge', 'assemble_model', 'eval_joint']


class Model(object):
    """Block graph with one gauge per clique.

    The joint gauge is ``sum_C g_C(x_C) - sum_D |x_D|``; points are indexed by
    the sorted vertex tuple of the graph.
    """

    def __init__(self, graph, clique_gauges, margin):
        self.graph = graph
        self.margin = get_margin(margin)
        self.clique_gauges = {clique: clique_gauges[clique] for clique in graph.cliques}
        self._clique_columns = [[graph.index(v) for v in clique] for clique in graph.cliques]
        self._separator_columns = [graph.index(v) for v in graph.separators]
        self._pairwise_cache = {}
        self._cache_lock = threading.Lock()

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def dimension(self):
        return self.graph.dimension

    def gauge_of(self, clique):
        return self.clique_gauges[tuple(clique)]

    def edge_gauge(self, u, v):
        """bivariate gauge of (x_u, x_v) for adjacent u, v, in that argument order"""
        clique = self.graph.clique_of(u, v)
        return self.clique_gauges[clique].marginal([clique.index(u), clique.index(v)])

    def _joint(self, x):
        total = np.zeros(x.shape[:-1])
        for clique, columns in zip(self.graph.cliques, self._clique_columns):
            total = total + self.clique_gauges[clique]._evaluate(x[..., columns])
        if self._separator_columns:
            total = total - np.abs(x[..., self._separator_columns]).sum(axis=-1)
        return total

    def eval_joint(self, x):
        x = np.asarray(x, dtype=float)
        if x.ndim == 0 or x.shape[-1] != self.dimension:
            raise DimensionMismatch('expected {} coordinates, got shape {}'.format(self.dimension, list(x.shape)),
                                    expected=self.dimension, shape=list(x.shape))
        self.margin.check_domain(x)
        values = self._joint(x)
        if x.ndim == 1:
            return float(values)
        return values

    __call__ = eval_joint

    def as_gauge(self):
        return JointGauge(self)

    def cached_pairwise(self, key, factory):
        """write-once cache of composed pairwise evaluators"""
        with self._cache_lock:
            if key not in self._pairwise_cache:
                self._pairwise_cache[key] = factory()
            return self._pairwise_cache[key]

    def __eq__(self, other):
        return isinstance(other, Model) and self.margin == other.margin and self.graph == other.graph and \
            all(self.clique_gauges[c] == other.clique_gauges[c] for c in self.graph.cliques)

    def __ne__(self, other):
        return not self == other

    __hash__ = object.__hash__

    def __repr__(self):
        return 'Model(margin={}, cliques={})'.format(self.margin, list(self.graph.cliques))


class JointGauge(Gauge):
    """the joint gauge of a model as a :class:`Gauge`"""
    family = 'joint'

    def __init__(self, model):
        super(JointGauge, self).__init__(model.dimension, model.margin)
        self.model = model

    def _evaluate(self, x):
        return self.model._joint(x)

    def to_spec(self):
        return None

    def __eq__(self, other):
        return isinstance(other, JointGauge) and self.model == other.model

    __hash__ = object.__hash__

#######################################

def _match_gauge(clique, gauges):
    for key, gauge in gauges.items():
        if set(key) != set(clique):
            continue
        if isinstance(key, (tuple, list)) and tuple(key) != tuple(clique):
            # realign the gauge arguments with the stored clique order
            return gauge.marginal([list(key).index(v) for v in clique])
        return gauge
    raise MissingCliqueGauge('no gauge for clique {}'.format(list(clique)), clique=list(clique))

def assemble_model(graph, gauges, margin):
    """Attach clique gauges to a block graph.

    Parameters
    ----------
    graph : BlockGraph
    gauges : dict
        clique (tuple or frozenset of vertices) to Gauge; a tuple key gives
        the argument order of its gauge
    margin : Margin or str

    Returns
    -------
    Model

    Raises
    ------
    MissingCliqueGauge, DimensionMismatch, MarginMismatch
    """
    margin = get_margin(margin)
    cliques = {frozenset(c) for c in graph.cliques}
    for key in gauges:
        if frozenset(key) not in cliques:
            raise InvalidClique('gauge given for {} which is not a clique'.format(sorted(key)), clique=sorted(key))
    matched = {}
    for clique in graph.cliques:
        gauge = _match_gauge(clique, gauges)
        if gauge.dimension != len(clique):
            raise DimensionMismatch('gauge of dimension {} for clique {}'.format(gauge.dimension, list(clique)),
                                    clique=list(clique), expected=len(clique), dimension=gauge.dimension)
        if gauge.margin != margin:
            raise MarginMismatch('{} gauge on clique {} in a {} model'.format(gauge.margin, list(clique), margin),
                                 clique=list(clique), gauge_margin=str(gauge.margin), model_margin=str(margin))
        matched[clique] = gauge
    return Model(graph, matched, margin)

def eval_joint(model, x):
    """Joint gauge of ``model`` at ``x``.

    >>> from gauge_graph.graphs import build_block_graph
    >>> from gauge_graph.gauges import LogisticGauge, GaussianExpGauge
    >>> m = assemble_model(build_block_graph([(1, 2), (2, 3)]),
    ...                    {(1, 2): LogisticGauge(0.4), (2, 3): GaussianExpGauge(0.6)}, 'exponential')
    >>> round(eval_joint(m, [1., 1., 0.36]), 12)
    1.0
    """
    return model.eval_joint(x)
