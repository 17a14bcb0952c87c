"""
Marginal gauges of a model.

Numeric elimination minimizes the joint gauge over the dropped coordinates
in one box search. Chain composition follows the shortest path between two
vertices, where only the bivariate clique marginals along the path matter,
and eliminates the interior path vertices with a chain dynamic programme.
"""
import numpy as np

from ..utils import EmptyKeptSet, SameVertex
from ..gauges import Gauge
from ..numerics import minimize_box, chain_minimize, DEFAULT_MINIMIZER_CONFIG

__all__ = ['NUMERIC_ELIMINATION', 'CHAIN_COMPOSITION', 'MarginalGauge', 'EliminatedGauge', 'ChainGauge',
           'marginal_gauge', 'pairwise_marginal']

NUMERIC_ELIMINATION = 'numeric_elimination'
CHAIN_COMPOSITION = 'chain_composition'


class MarginalGauge(Gauge):
    family = 'marginal'
    method = None

    def __init__(self, base, kept, cfg=DEFAULT_MINIMIZER_CONFIG):
        super(MarginalGauge, self).__init__(len(kept), base.margin)
        self.base = base
        self.kept = tuple(kept)
        self.cfg = cfg

    def to_spec(self):
        return None

    def __eq__(self, other):
        return self is other

    __hash__ = object.__hash__

    def __repr__(self):
        return '{}(kept={}, method={})'.format(self.__class__.__name__, list(self.kept), self.method)


class EliminatedGauge(MarginalGauge):
    method = NUMERIC_ELIMINATION

    def __init__(self, base, kept, cfg=DEFAULT_MINIMIZER_CONFIG):
        super(EliminatedGauge, self).__init__(base, kept, cfg)
        self._kept_columns = [base.graph.index(v) for v in self.kept]
        self._eliminated_columns = [i for i in range(base.dimension) if i not in self._kept_columns]

    def _fill(self, y, z):
        z = np.atleast_2d(z)
        x = np.zeros((len(z), self.base.dimension))
        x[:, self._kept_columns] = y
        x[:, self._eliminated_columns] = z
        return x

    def _evaluate_point(self, y):
        at_zero = float(self.base._joint(self._fill(y, np.zeros(len(self._eliminated_columns))))[0])
        if not self._eliminated_columns:
            return at_zero
        # g >= |x_s| for every eliminated s, so the minimizer lies in the box
        bounds = [self.margin.box(at_zero)] * len(self._eliminated_columns)
        _, value = minimize_box(lambda z: self.base._joint(self._fill(y, z)), bounds, self.cfg, vectorized=True)
        return value

    def _evaluate(self, x):
        flat = x.reshape(-1, self.dimension)
        values = np.array([self._evaluate_point(y) for y in flat])
        return values.reshape(x.shape[:-1])


def _edge_fn(gauge):
    return lambda u, v: gauge._evaluate(np.stack(np.broadcast_arrays(u, v), axis=-1))


class ChainGauge(MarginalGauge):
    """Pairwise marginal along the chain of bivariate edge gauges between two vertices."""
    method = CHAIN_COMPOSITION

    def __init__(self, base, i, j, cfg=DEFAULT_MINIMIZER_CONFIG):
        super(ChainGauge, self).__init__(base, (i, j), cfg)
        self.chain = base.graph.chain_reduction(i, j)
        self.edge_gauges = [base.edge_gauge(u, v) for u, v in self.chain]
        self._edge_fns = [_edge_fn(g) for g in self.edge_gauges]

    def _evaluate(self, x):
        flat = x.reshape(-1, 2)
        if len(self.edge_gauges) == 1:
            return self.edge_gauges[0]._evaluate(flat).reshape(x.shape[:-1])
        first, last = flat[:, 0], flat[:, 1]
        zeros = np.zeros_like(first)
        # objective at zero interior values bounds every interior |t|
        upper = self._edge_fns[0](first, zeros) + self._edge_fns[-1](zeros, last)
        lower, upper = self.margin.box(upper)
        solution = chain_minimize(self._edge_fns, first, last, lower * np.ones_like(upper), upper, self.cfg)
        return solution.values.reshape(x.shape[:-1])

#######################################

def marginal_gauge(model, kept, cfg=DEFAULT_MINIMIZER_CONFIG):
    """Marginal gauge of the vertices ``kept`` by numeric elimination of all others."""
    kept = list(kept)
    if not kept:
        raise EmptyKeptSet('kept vertex set is empty')
    for v in kept:
        model.graph.check_vertex(v)
    return EliminatedGauge(model, kept, cfg)

def pairwise_marginal(model, i, j, cfg=DEFAULT_MINIMIZER_CONFIG):
    """Bivariate marginal gauge of (x_i, x_j) by chain composition.

    Adjacent vertices get their clique's bivariate gauge directly; composed
    gauges are cached on the model per (i, j).
    """
    model.graph.check_vertex(i)
    model.graph.check_vertex(j)
    if i == j:
        raise SameVertex('pairwise marginal needs two distinct vertices', vertex=i)
    if model.graph.shortest_path(i, j).length == 1:
        return model.edge_gauge(i, j)
    return model.cached_pairwise((i, j, cfg), lambda: ChainGauge(model, i, j, cfg))
