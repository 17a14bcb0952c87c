from collections import namedtuple, deque

from ..utils import LOGGER, get_pairs, NotConnected, SeparatorNotSingleton, NotDecomposable, SameVertex, \
    UnknownVertex, InvalidClique
from .graph import AdjacencyGraph

__all__ = ['Path', 'BlockGraph', 'build_block_graph', 'shortest_path', 'chain_reduction']

Path = namedtuple('Path', ['vertices', 'length'])


class BlockGraph(object):
    """Decomposable graph whose separators are single vertices.

    ``cliques`` are stored in a running-intersection order, each clique keeping
    the vertex order it was given in (the argument order of its gauge);
    ``separators[k]`` is the vertex clique ``k + 1`` shares with its predecessors.
    Use :func:`build_block_graph` to construct one.
    """

    def __init__(self, cliques, separators):
        self.cliques = tuple(tuple(c) for c in cliques)
        self.separators = tuple(separators)
        self.vertices = tuple(sorted(set().union(*[set(c) for c in self.cliques])))
        self._adjacency = AdjacencyGraph(self.cliques)

    @property
    def dimension(self):
        return len(self.vertices)

    @property
    def is_tree(self):
        return all(len(c) == 2 for c in self.cliques)

    @property
    def is_chain(self):
        return self.is_tree and all(len(self.neighbors(v)) <= 2 for v in self.vertices)

    def check_vertex(self, v):
        if v not in self._adjacency:
            raise UnknownVertex('vertex {} is not in the graph'.format(v), vertex=v)
        return v

    def index(self, v):
        """position of ``v`` in the sorted vertex tuple"""
        self.check_vertex(v)
        return self.vertices.index(v)

    def neighbors(self, v):
        return self._adjacency.neighbors(self.check_vertex(v))

    def clique_of(self, u, v):
        """the unique clique containing both ends of an edge"""
        for clique in self.cliques:
            if u in clique and v in clique:
                return clique
        raise UnknownVertex('{} and {} are not adjacent'.format(u, v), vertices=[u, v])

    def shortest_path(self, i, j):
        self.check_vertex(i)
        self.check_vertex(j)
        if i == j:
            raise SameVertex('path endpoints coincide', vertex=i)
        vertices, _ = self._adjacency.shortest_path(i, j)
        return Path(tuple(vertices), len(vertices) - 1)

    def chain_reduction(self, i, j):
        return get_pairs(self.shortest_path(i, j).vertices)

    def hop_distances(self, i):
        return self._adjacency.bfs_distances(self.check_vertex(i))

    def __eq__(self, other):
        return isinstance(other, BlockGraph) and self.cliques == other.cliques and \
            self.separators == other.separators

    def __ne__(self, other):
        return not self == other

    __hash__ = object.__hash__

    def __repr__(self):
        return 'BlockGraph(cliques={}, separators={})'.format(list(self.cliques), list(self.separators))

#######################################

def _check_cliques(cliques):
    if len(cliques) == 0:
        raise InvalidClique('at least one clique is required')
    for index, clique in enumerate(cliques):
        if len(clique) < 2:
            raise InvalidClique('clique {} has fewer than two vertices'.format(list(clique)),
                                clique=list(clique), index=index)
        if len(set(clique)) != len(clique):
            raise InvalidClique('clique {} repeats a vertex'.format(list(clique)), clique=list(clique), index=index)

def _check_connected(cliques):
    """cliques sharing a vertex are adjacent; one component is required"""
    reached, queue = {0}, deque([0])
    while queue:
        current = queue.popleft()
        for k, clique in enumerate(cliques):
            if k not in reached and set(clique) & set(cliques[current]):
                reached.add(k)
                queue.append(k)
    if len(reached) != len(cliques):
        missing = [list(cliques[k]) for k in range(len(cliques)) if k not in reached]
        raise NotConnected('cliques form more than one component', unreachable=missing)

def _maximum_cardinality_order(cliques):
    """Maximum cardinality search over cliques.

    Starts from the clique holding the smallest vertex and repeatedly takes the
    clique sharing the most vertices with those already visited; ties go to
    the smallest sorted clique so the order does not depend on the input order.
    """
    key = lambda c: tuple(sorted(c))
    remaining = sorted(cliques, key=key)
    start = min(remaining, key=lambda c: (min(c), key(c)))
    order, seen = [start], set(start)
    remaining.remove(start)
    while remaining:
        best = max(remaining, key=lambda c: (len(seen & set(c)), [-v for v in key(c)]))
        remaining.remove(best)
        order.append(best)
        seen |= set(best)
    return order

def build_block_graph(cliques):
    """Validate a clique list and order it by running intersection.

    Parameters
    ----------
    cliques : list of sequences of int
        maximal cliques; the vertex order inside each clique is kept

    Returns
    -------
    BlockGraph

    Raises
    ------
    InvalidClique, NotConnected, NotDecomposable, SeparatorNotSingleton
    """
    cliques = [tuple(c) for c in cliques]
    _check_cliques(cliques)
    _check_connected(cliques)

    order = _maximum_cardinality_order(cliques)
    separators, seen = [], set(order[0])
    for k, clique in enumerate(order[1:], 1):
        shared = seen & set(clique)
        if not any(shared <= set(order[j]) for j in range(k)):
            raise NotDecomposable('no running intersection order: {} meets earlier cliques in {}'.format(
                list(clique), sorted(shared)), clique=list(clique), intersection=sorted(shared))
        if len(shared) != 1:
            raise SeparatorNotSingleton('clique {} is separated by {}'.format(list(clique), sorted(shared)),
                                        clique=list(clique), intersection=sorted(shared))
        separators.append(next(iter(shared)))
        seen |= set(clique)
    LOGGER.debug('block graph: cliques {}, separators {}'.format(order, separators))
    return BlockGraph(order, separators)

def shortest_path(graph, i, j):
    """Unique shortest path between two distinct vertices.

    >>> shortest_path(build_block_graph([(1, 2, 3), (3, 4), (4, 5), (4, 6), (6, 7, 8, 9)]), 1, 9)
    Path(vertices=(1, 3, 4, 6, 9), length=4)
    """
    return graph.shortest_path(i, j)

def chain_reduction(graph, i, j):
    """Edges (v_{k-1}, v_k) of the chain along the shortest path from i to j."""
    return graph.chain_reduction(i, j)
