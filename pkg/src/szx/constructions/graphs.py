"""Simple undirected graphs and the two local graph transformations.

Vertices are ``0 .. order-1``.  The text format is the vertex count on the
first line followed by one ``u v`` edge per line.

>>> g = Graph.from_edges(3, [(0, 1), (1, 2)])
>>> sorted(local_complement(g, 1).edge_list())
[(0, 1), (0, 2), (1, 2)]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError, ParseError
from ..f2linalg import F2Matrix

__all__ = [
    "Graph",
    "local_complement",
    "pivot",
    "parse_graph",
    "all_graphs",
    "random_graph",
    "bipartite_graph",
]


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset

    def __post_init__(self):
        if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 1:
            raise ParameterError(f"a graph needs at least one vertex, got order {self.order!r}")
        clean = set()
        for e in self.edges:
            pair = frozenset(e)
            if len(pair) != 2:
                raise ParameterError(f"self-loop or malformed edge {tuple(e)!r}")
            if any(not 0 <= v < self.order for v in pair):
                raise ParameterError(f"edge {tuple(sorted(pair))} leaves the vertex range 0..{self.order - 1}")
            clean.add(pair)
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, order: int, edges) -> "Graph":
        return cls(order, frozenset(frozenset(e) for e in edges))

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def neighbours(self, u: int) -> list[int]:
        self._check_vertex(u)
        return sorted(v for e in self.edges if u in e for v in e if v != u)

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.order, self.order), dtype=np.uint8)
        for u, v in self.edge_list():
            adj[u, v] = adj[v, u] = 1
        return adj

    def induced(self, keep) -> "Graph":
        """Subgraph on ``keep`` (in the given order), relabelled ``0..len(keep)-1``."""
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edge_list() if u in index and v in index]
        return Graph.from_edges(len(keep), edges)

    def to_text(self) -> str:
        return f"{self.order}\n" + "".join(f"{u} {v}\n" for u, v in self.edge_list())

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.order:
            raise ParameterError(f"vertex {u} not in graph of order {self.order}")


def local_complement(g: Graph, u: int) -> Graph:
    """Complement the edges inside the neighbourhood of ``u``."""
    nb = g.neighbours(u)
    edges = set(g.edges)
    for v, w in itertools.combinations(nb, 2):
        edges ^= {frozenset((v, w))}
    return Graph(g.order, frozenset(edges))


def pivot(g: Graph, u: int, v: int) -> Graph:
    """Pivot along the edge ``uv``: toggle edges between the three neighbourhood
    classes, then exchange the labels ``u`` and ``v``."""
    g._check_vertex(u)
    g._check_vertex(v)
    if not g.has_edge(u, v):
        raise ParameterError(f"pivot needs an edge, but {u} and {v} are not adjacent")
    nu, nv = set(g.neighbours(u)) - {v}, set(g.neighbours(v)) - {u}
    classes = [nu - nv, nv - nu, nu & nv]
    edges = set(g.edges)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for a in classes[i]:
            for b in classes[j]:
                edges ^= {frozenset((a, b))}
    swap = {u: v, v: u}
    relabelled = {frozenset(swap.get(x, x) for x in e) for e in edges}
    return Graph(g.order, frozenset(relabelled))


def parse_graph(text: str) -> Graph:
    """Parse the vertex-count-then-edges format; ``#`` lines are comments."""
    lines = [(i, line) for i, line in enumerate(text.splitlines(), start=1) if line.strip() and not line.strip().startswith("#")]
    if not lines:
        raise ParseError("empty graph file", 1, 1)
    lineno, first = lines[0]
    try:
        order = int(first.strip())
    except ValueError:
        raise ParseError(f"expected the vertex count, found {first.strip()!r}", lineno, 1) from None
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v', found {line.strip()!r}", lineno, 1)
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return Graph.from_edges(order, edges)
    except ParameterError as exc:
        raise ParseError(str(exc), lineno, 1) from None


def all_graphs(order: int):
    """Every labelled simple graph on ``order`` vertices."""
    pairs = list(itertools.combinations(range(order), 2))
    for mask in range(2 ** len(pairs)):
        yield Graph.from_edges(order, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng: np.random.Generator, order: int, p: float = 0.5) -> Graph:
    pairs = itertools.combinations(range(order), 2)
    return Graph.from_edges(order, [e for e in pairs if rng.random() < p])


def bipartite_graph(gamma: F2Matrix) -> Graph:
    """Columns become vertices ``0..n-1`` and rows ``n..n+m-1``."""
    m, n = gamma.shape
    return Graph.from_edges(n + m, [(j, n + i) for i in range(m) for j in range(n) if gamma[i, j]])
