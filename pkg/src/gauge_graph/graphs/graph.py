"""
Vertex-adjacency graph of a block graph.

Every pair of vertices sharing a clique is joined by an undirected unit-cost
edge labelled with that clique's index. Shortest paths come from Dijkstra's
search, and a breadth-first search gives an independent distance oracle.
"""
from collections import namedtuple, deque
from collections.abc import Mapping
from heapq import heappush, heappop
from itertools import combinations

__all__ = ['Vertex', 'Edge', 'AdjacencyGraph']


class Vertex(object):

    def __init__(self, value):
        self.value = value
        self.edges = []

    def __repr__(self):
        return self.__class__.__name__ + '(' + str(self.value) + ')'


class Edge(object):
    """directed half of an undirected edge; ``clique`` labels the clique it runs through"""

    def __init__(self, v1, v2, clique, cost):
        self.v1, self.v2 = v1, v2
        self.v1.edges.append(self)
        self.clique = clique
        self.cost = cost

    def __repr__(self):
        return self.__class__.__name__ + '(' + str(self.v1.value) + ' - ' + str(self.v2.value) + ')'

SearchNode = namedtuple('SearchNode', ['cost', 'edge'])


class AdjacencyGraph(Mapping, object):

    def __init__(self, cliques=()):
        self.vertices = {}
        for index, clique in enumerate(cliques):
            self.connect_clique(clique, index)

    def __getitem__(self, value):
        return self.vertices[value]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def add(self, value):
        if value not in self:
            self.vertices[value] = Vertex(value)
        return self.vertices[value]

    def connect_clique(self, clique, index, cost=1):
        for value in clique:
            self.add(value)
        for u, v in combinations(clique, 2):
            Edge(self[u], self[v], index, cost)
            Edge(self[v], self[u], index, cost)

    def neighbors(self, value):
        return sorted({edge.v2.value for edge in self[value].edges})

    def shortest_path(self, value1, value2):
        """(vertex values, clique labels) of a cheapest path, None when unreachable"""
        if value1 not in self or value2 not in self:
            return None

        start, goal = self[value1], self[value2]
        # vertex values break cost ties so the heap never compares Vertex objects
        queue = [(0, start.value)]
        nodes, processed = {start: SearchNode(0, None)}, set()

        def retrace(v):
            edge = nodes[v].edge
            if edge is None:
                return [v.value], []
            vertices, cliques = retrace(edge.v1)
            return vertices + [v.value], cliques + [edge.clique]

        while queue:
            _, value = heappop(queue)
            cv = self[value]
            if cv in processed:
                continue
            processed.add(cv)
            if cv is goal:
                return retrace(cv)
            for edge in cv.edges:
                cost = nodes[cv].cost + edge.cost
                if edge.v2 not in nodes or cost < nodes[edge.v2].cost:
                    nodes[edge.v2] = SearchNode(cost, edge)
                    heappush(queue, (cost, edge.v2.value))
        return None

    def bfs_distances(self, source):
        """hop distance from ``source`` to every reachable vertex"""
        distances = {source: 0}
        queue = deque([source])
        while queue:
            current = queue.popleft()
            for value in self.neighbors(current):
                if value not in distances:
                    distances[value] = distances[current] + 1
                    queue.append(value)
        return distances
