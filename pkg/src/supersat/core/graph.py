"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency rows."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from supersat.core.errors import (
    DuplicateEdge,
    EdgeAbsent,
    OutOfRange,
    PreconditionViolated,
    SelfLoop,
)

if TYPE_CHECKING:
    import networkx as nx

Edge = tuple[int, int]


@dataclass(frozen=True, slots=True)
class EdgeList:
    """Canonical edge list: pairs (u, v) with u < v, sorted, no duplicates."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        """Check bounds and canonical order."""
        previous: Edge | None = None
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                msg = f"edge ({u}, {v}) is not a canonical pair below n={self.n}"
                raise OutOfRange(msg)
            if previous == (u, v):
                msg = f"edge ({u}, {v}) given twice"
                raise DuplicateEdge(msg)
            if previous is not None and (u, v) < previous:
                msg = f"edge ({u}, {v}) breaks lexicographic order"
                raise PreconditionViolated(msg)
            previous = (u, v)


class Graph:
    """Undirected simple graph.

    Row ``i`` of the adjacency is a Python ``int`` whose bit ``j`` is set
    exactly when ``ij`` is an edge. Instances never change after construction,
    so they can be shared freely between workers.
    """

    __slots__ = ("_m", "_n", "_rows")

    def __init__(self, n: int, rows: Sequence[int]) -> None:
        """Wrap adjacency rows that are already symmetric and loop-free.

        Use ``from_edges`` for untrusted input.
        """
        if n < 0 or len(rows) != n:
            msg = f"expected {n} adjacency rows, got {len(rows)}"
            raise OutOfRange(msg)
        self._n = n
        self._rows = tuple(rows)
        self._m = sum(row.bit_count() for row in self._rows) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from an edge sequence.

        Raises:
            OutOfRange: An endpoint is not in [0, n).
            SelfLoop: An edge (u, u) was given.
            DuplicateEdge: An unordered pair appears twice.

        """
        if n < 0:
            msg = f"vertex count must be nonnegative, got {n}"
            raise OutOfRange(msg)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                msg = f"edge ({u}, {v}) has an endpoint outside [0, {n})"
                raise OutOfRange(msg)
            if u == v:
                msg = f"self-loop at vertex {u}"
                raise SelfLoop(msg)
            if rows[u] >> v & 1:
                msg = f"edge ({min(u, v)}, {max(u, v)}) given twice"
                raise DuplicateEdge(msg)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless graph on n vertices."""
        return cls(n, [0] * n)

    @property
    def n(self) -> int:
        """Vertex count."""
        return self._n

    @property
    def m(self) -> int:
        """Edge count."""
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitsets."""
        return self._rows

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            msg = f"vertex {v} outside [0, {self._n})"
            raise OutOfRange(msg)

    def degree(self, v: int) -> int:
        """Degree of vertex v."""
        self._check_vertex(v)
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        """Degrees of all vertices in index order."""
        return [row.bit_count() for row in self._rows]

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of v in increasing order."""
        self._check_vertex(v)
        return list(iter_bits(self._rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        """Whether uv is an edge."""
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [
            (u, v)
            for u, row in enumerate(self._rows)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def iter_non_edges(self) -> Iterator[Edge]:
        """Pairs u < v that are not edges, in lexicographic order."""
        for u in range(self._n):
            for v in range(u + 1, self._n):
                if not self._rows[u] >> v & 1:
                    yield u, v

    def to_edge_list(self) -> EdgeList:
        """Canonical edge-list view."""
        return EdgeList(self._n, tuple(self.edges()))

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy with uv added."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            msg = f"self-loop at vertex {u}"
            raise SelfLoop(msg)
        if self._rows[u] >> v & 1:
            msg = f"edge ({min(u, v)}, {max(u, v)}) already present"
            raise DuplicateEdge(msg)
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        """Copy with uv removed."""
        if not self.has_edge(u, v):
            msg = f"edge ({min(u, v)}, {max(u, v)}) is not in the graph"
            raise EdgeAbsent(msg)
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows)

    def disjoint_union(self, other: "Graph") -> "Graph":
        """Vertices of ``other`` are shifted up by ``self.n``."""
        shift = self._n
        return Graph(
            self._n + other.n,
            [*self._rows, *(row << shift for row in other.rows)],
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            msg = "relabelling must be a permutation of the vertices"
            raise OutOfRange(msg)
        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            image = 0
            for u in iter_bits(row):
                image |= 1 << perm[u]
            rows[perm[v]] = image
        return Graph(self._n, rows)

    def induced_degrees(self, vertices: Iterable[int]) -> list[int]:
        """Degree of each listed vertex inside the subgraph they induce."""
        vertex_list = list(vertices)
        mask = 0
        for v in vertex_list:
            mask |= 1 << v
        return [(self._rows[v] & mask).bit_count() for v in vertex_list]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix."""
        matrix = np.zeros((self._n, self._n), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def to_networkx(self) -> "nx.Graph":
        """networkx view with nodes inserted in index order."""
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other.n and self._rows == other.rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph from an edge sequence; see ``Graph.from_edges``."""
    return Graph.from_edges(n, edges)


def graph_from_edge_list(edge_list: EdgeList) -> Graph:
    """Graph with exactly the edges of a canonical edge list."""
    return Graph.from_edges(edge_list.n, edge_list.edges)


def degree(g: Graph, v: int) -> int:
    """Degree of v in g."""
    return g.degree(v)


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Sample G(n, p) deterministically from ``seed``."""
    if not 0.0 <= p <= 1.0:
        msg = f"edge probability must lie in [0, 1], got {p}"
        raise OutOfRange(msg)
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    us, vs = np.nonzero(upper)
    return Graph.from_edges(n, zip(us.tolist(), vs.tolist(), strict=True))
