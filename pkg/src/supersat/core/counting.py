"""Exact triangle and bowtie counting.

A bowtie is two triangles sharing exactly one vertex, the centre. Counts are
of unlabeled copies. The production path works per vertex::

    bowties = sum_v [ C(t(v), 2) - sum_{u in N(v)} C(t(uv), 2) ]

where ``t(v)`` is the number of triangles through ``v`` and ``t(uv)`` the
number through the edge ``uv``: all pairs of triangles at ``v`` minus the
pairs that also share a second vertex.
"""

from collections.abc import Iterator
from enum import Enum
from itertools import combinations
from math import comb

from pydantic import BaseModel, field_serializer

from supersat.core.graph import Edge, Graph, iter_bits


class CountMethod(str, Enum):
    """Bowtie counting strategy."""

    FORMULA = "formula"
    NAIVE = "naive"


class CountReport(BaseModel):
    """Triangle and bowtie tallies of one graph."""

    triangles: int
    bowties: int
    per_vertex_triangles: list[int] | None = None
    per_edge_triangles: dict[Edge, int] | None = None

    @field_serializer("per_edge_triangles")
    def _serialize_edges(
        self, value: dict[Edge, int] | None
    ) -> list[list[int]] | None:
        if value is None:
            return None
        return [[u, v, t] for (u, v), t in sorted(value.items())]


class BowtieTypes(BaseModel):
    """Bowties split by how their within-part edges sit in a bipartition.

    ``type1``: two disjoint edges inside one part. ``type2``: two adjacent
    edges inside one part. ``type3``: one edge inside each part. Anything
    else (a triangle spanned by a single part, say) lands in ``other``.
    """

    type1: int = 0
    type2: int = 0
    type3: int = 0
    other: int = 0

    @property
    def total(self) -> int:
        """All bowties."""
        return self.type1 + self.type2 + self.type3 + self.other


def _edge_triangles(g: Graph) -> dict[Edge, int]:
    rows = g.rows
    return {(u, v): (rows[u] & rows[v]).bit_count() for u, v in g.edges()}


def _vertex_triangles(g: Graph, per_edge: dict[Edge, int]) -> list[int]:
    doubled = [0] * g.n
    for (u, v), t in per_edge.items():
        doubled[u] += t
        doubled[v] += t
    return [t // 2 for t in doubled]


def count_triangles(g: Graph) -> CountReport:
    """Triangles with per-vertex and per-edge tallies.

    The bowtie field is filled as well since it costs one extra pass.
    """
    per_edge = _edge_triangles(g)
    per_vertex = _vertex_triangles(g, per_edge)
    return CountReport(
        triangles=sum(per_vertex) // 3,
        bowties=_bowties_from_tallies(per_vertex, per_edge),
        per_vertex_triangles=per_vertex,
        per_edge_triangles=per_edge,
    )


def _bowties_from_tallies(per_vertex: list[int], per_edge: dict[Edge, int]) -> int:
    total = sum(comb(t, 2) for t in per_vertex)
    # each edge term is subtracted once at either endpoint
    total -= 2 * sum(comb(t, 2) for t in per_edge.values())
    return total


def count_bowties(g: Graph, method: CountMethod = CountMethod.FORMULA) -> int:
    """Number of bowtie copies in g."""
    if method is CountMethod.NAIVE:
        return count_bowties_naive(g)
    per_edge = _edge_triangles(g)
    return _bowties_from_tallies(_vertex_triangles(g, per_edge), per_edge)


def count_bowties_naive(g: Graph) -> int:
    """Reference count over all 5-vertex subsets.

    A copy on a fixed 5-set is determined by its centre and by how the other
    four vertices pair up into the two triangles.
    """
    rows = g.rows
    total = 0
    for subset in combinations(range(g.n), 5):
        for centre in subset:
            others = [v for v in subset if v != centre]
            if (rows[centre] & _mask(others)).bit_count() != 4:
                continue
            x, y, z, w = others
            for (a, b), (c, d) in (((x, y), (z, w)), ((x, z), (y, w)), ((x, w), (y, z))):
                if rows[a] >> b & 1 and rows[c] >> d & 1:
                    total += 1
    return total


def _mask(vertices: list[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bowties_containing_edge(g: Graph, u: int, v: int) -> int:
    """Bowties destroyed by deleting uv.

    Raises:
        EdgeAbsent: uv is not an edge of g.

    """
    without = g.without_edge(u, v)
    return count_bowties(g) - count_bowties(without)


def iter_bowties(g: Graph) -> Iterator[tuple[int, Edge, Edge]]:
    """Yield every copy once as (centre, (x, y), (z, w)).

    The two wing pairs are each sorted and listed in lexicographic order.
    """
    rows = g.rows
    for centre in range(g.n):
        wings = [
            (x, y)
            for x in iter_bits(rows[centre])
            for y in iter_bits(rows[centre] & rows[x])
            if x < y
        ]
        for first, second in combinations(wings, 2):
            if len({*first, *second}) == 4:
                yield centre, first, second


def classify_bowties(g: Graph, part1: set[int] | frozenset[int]) -> BowtieTypes:
    """Split bowties by the placement of their within-part edges.

    ``part1`` is one side of the bipartition; every other vertex is in part 2.
    """
    counts = {"type1": 0, "type2": 0, "type3": 0, "other": 0}
    for centre, (x, y), (z, w) in iter_bowties(g):
        inside = [
            edge
            for edge in ((centre, x), (centre, y), (x, y), (centre, z), (centre, w), (z, w))
            if (edge[0] in part1) == (edge[1] in part1)
        ]
        counts[_bowtie_type(inside, part1)] += 1
    return BowtieTypes(**counts)


def _bowtie_type(inside: list[Edge], part1: set[int] | frozenset[int]) -> str:
    if len(inside) != 2:
        return "other"
    (a, b), (c, d) = inside
    if (a in part1) != (c in part1):
        return "type3"
    if {a, b} & {c, d}:
        return "type2"
    return "type1"
