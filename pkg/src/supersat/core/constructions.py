"""Explicit graph families.

Turán graphs, the bowtie-free extremal graphs, the surplus construction used
for the quadratic upper bound, triangle-free graphs with two prescribed
degrees, and the complete bipartite graph with triangle-free parts (``H*``).

Vertex labels are deterministic: blocks are laid out in the order they are
declared, so repeated builds are byte-identical.
"""

from enum import Enum
from functools import lru_cache
from itertools import combinations

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from supersat.core.config import VERBOSITY_DEBUG, log
from supersat.core.errors import (
    PreconditionViolated,
    TooSmall,
    Unrealizable,
    UnrealizableReason,
)
from supersat.core.graph import Graph, iter_bits

# Parts up to this size fall back to exhaustive search when no closed-form
# construction applies.
SEARCH_PART_LIMIT = 10


class ExtremalVariant(str, Enum):
    """Which part of T2(n) receives the extra edge."""

    LARGER = "larger"
    SMALLER = "smaller"


class DegreeProfile(BaseModel):
    """``alpha`` vertices of degree ``a`` and ``beta`` of degree ``b``."""

    model_config = ConfigDict(frozen=True)

    alpha: int = Field(ge=0)
    a: int = Field(ge=0)
    beta: int = Field(ge=0)
    b: int = Field(ge=0)

    @property
    def order(self) -> int:
        """Vertex count."""
        return self.alpha + self.beta

    @property
    def degree_sum(self) -> int:
        """Twice the edge count."""
        return self.alpha * self.a + self.beta * self.b

    def swapped(self) -> "DegreeProfile":
        """The same profile with the two classes exchanged."""
        return DegreeProfile(alpha=self.beta, a=self.b, beta=self.alpha, b=self.a)


class PartitionSpec(BaseModel):
    """Two-part vertex split with a target within-part degree per vertex.

    Vertices ``0..v1-1`` form part 1 and ``v1..v1+v2-1`` part 2; ``phi``
    lists the within-part degrees in that order.
    """

    model_config = ConfigDict(frozen=True)

    v1: int = Field(ge=0)
    v2: int = Field(ge=0)
    phi: tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "PartitionSpec":
        if len(self.phi) != self.v1 + self.v2:
            msg = f"phi has {len(self.phi)} entries for {self.v1 + self.v2} vertices"
            raise PreconditionViolated(msg)
        if any(d < 0 for d in self.phi):
            msg = "within-part degrees must be nonnegative"
            raise PreconditionViolated(msg)
        for index, degrees in enumerate((self.part1, self.part2), start=1):
            if sum(degrees) % 2:
                msg = f"part {index} degree sum {sum(degrees)} is odd"
                raise PreconditionViolated(msg)
        return self

    @property
    def n(self) -> int:
        """Vertex count."""
        return self.v1 + self.v2

    @property
    def part1(self) -> tuple[int, ...]:
        """Within-part degrees of part 1."""
        return self.phi[: self.v1]

    @property
    def part2(self) -> tuple[int, ...]:
        """Within-part degrees of part 2."""
        return self.phi[self.v1 :]

    @property
    def b1(self) -> int:
        """Edges inside part 1."""
        return sum(self.part1) // 2

    @property
    def b2(self) -> int:
        """Edges inside part 2."""
        return sum(self.part2) // 2

    @property
    def within_density_cap(self) -> bool:
        """Whether ``b_i <= v_i**2 / 16`` holds in both parts."""
        return 16 * self.b1 <= self.v1**2 and 16 * self.b2 <= self.v2**2


def near_regular_degrees(v: int, b: int) -> list[int]:
    """Degrees in {floor(2b/v), ceil(2b/v)} summing to 2b, larger ones first."""
    if v == 0:
        if b:
            msg = f"cannot place {b} edges on an empty part"
            raise PreconditionViolated(msg)
        return []
    low, high_count = divmod(2 * b, v)
    return [low + 1] * high_count + [low] * (v - high_count)


def partition_spec(v1: int, v2: int, b1: int, b2: int) -> PartitionSpec:
    """Spec whose parts carry the near-regular rounding of b1 and b2 edges."""
    return PartitionSpec(
        v1=v1,
        v2=v2,
        phi=(*near_regular_degrees(v1, b1), *near_regular_degrees(v2, b2)),
    )


def turan(r: int, n: int) -> Graph:
    """Complete r-partite graph on n vertices with near-equal parts.

    Larger parts come first.
    """
    if r < 1 or n < 0:
        msg = f"need r >= 1 and n >= 0, got r={r}, n={n}"
        raise PreconditionViolated(msg)
    return _complete_multipartite(_part_sizes(r, n))


def _part_sizes(r: int, n: int) -> list[int]:
    base, extra = divmod(n, r)
    return [base + 1] * extra + [base] * (r - extra)


def _complete_multipartite(sizes: list[int]) -> Graph:
    n = sum(sizes)
    everyone = (1 << n) - 1
    rows: list[int] = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        rows.extend([everyone & ~block] * size)
        start += size
    return Graph(n, rows)


def ex_bowtie(n: int) -> int:
    """Maximum edge count of a bowtie-free graph on n >= 5 vertices."""
    if n < 5:
        msg = f"the bowtie Turán number is only established for n >= 5, got {n}"
        raise TooSmall(msg)
    return n * n // 4 + 1


def extremal_bowtie_free(
    n: int, variant: ExtremalVariant = ExtremalVariant.LARGER
) -> Graph:
    """T2(n) plus one edge inside the chosen part."""
    ex_bowtie(n)
    larger = (n + 1) // 2
    base = turan(2, n)
    if variant is ExtremalVariant.LARGER:
        return base.with_edge(0, 1)
    return base.with_edge(larger, larger + 1)


def upper_bound_graph(n: int, q: int) -> Graph:
    """T2(n) with q+1 extra edges spread evenly between two quarter-size sets.

    ``W1`` and ``W2`` are the first two blocks of ``n // 4`` vertices of the
    larger part. Vertices of larger ``W``-degree come first in each block.

    Raises:
        TooSmall: n < 5.
        Unrealizable: ``(q+1) // (n // 4) >= n // 4``.

    """
    ex_bowtie(n)
    if q < 0:
        msg = f"surplus must be nonnegative, got {q}"
        raise PreconditionViolated(msg)
    quarter = n // 4
    low, high_count = divmod(q + 1, quarter)
    if low >= quarter:
        msg = f"{q + 1} edges do not fit between two sets of {quarter} vertices"
        raise Unrealizable(msg, UnrealizableReason.DENSITY)

    between = trifree_even(low, high_count, quarter - high_count)
    rows = list(turan(2, n).rows)
    for u, v in between.edges():
        # both blocks start at 0 in the larger part, so labels carry over
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def trifree_even(d: int, i: int, m: int) -> Graph:
    """Bipartite graph with 2i vertices of degree d+1 and 2m of degree d.

    Sides are ``0..s-1`` and ``s..2s-1`` with ``s = i + m``. Vertex ``j`` is
    joined to ``s + j`` when ``j < i``, and to ``s + (j + l) mod s`` for
    every shift ``1 <= l <= d``.
    """
    if min(d, i, m) < 0:
        msg = f"parameters must be nonnegative, got d={d}, i={i}, m={m}"
        raise PreconditionViolated(msg)
    side = i + m
    if d >= side:
        msg = f"need d < i + m, got d={d}, i + m={side}"
        raise PreconditionViolated(msg)

    edges = [(j, side + j) for j in range(i)]
    edges.extend(
        (j, side + (j + shift) % side) for shift in range(1, d + 1) for j in range(side)
    )
    return Graph.from_edges(2 * side, edges)


def trifree_odd(k: int, m: int) -> Graph:
    """Triangle-free graph with 4k vertices of degree k and one of degree 2m.

    Vertex 0 is the special vertex ``u``; blocks ``U1..U4`` of size k follow.
    Removing ``u`` leaves a bipartite graph with sides ``U1+U4`` and
    ``U2+U3``, and ``u`` only sees ``U1`` and ``U3`` at indices ``j < m``
    where the ``U1``-``U3`` matching is absent.
    """
    if not k >= m >= 0:
        msg = f"need k >= m >= 0, got k={k}, m={m}"
        raise PreconditionViolated(msg)

    def block(t: int, j: int) -> int:
        return 1 + (t - 1) * k + j

    edges: list[tuple[int, int]] = []
    for j in range(m):
        edges.extend([(0, block(1, j)), (0, block(3, j))])
    edges.extend((block(1, j), block(3, j)) for j in range(m, k))
    edges.extend((block(2, j), block(4, j)) for j in range(k))
    for low, high in ((1, 2), (3, 4)):
        edges.extend(
            (block(low, j), block(high, h))
            for j in range(k)
            for h in range(k)
            if j != h
        )
    return Graph.from_edges(4 * k + 1, edges)


def trifree_regular(v: int, r: int) -> Graph:
    """Triangle-free r-regular graph on v vertices.

    Even v uses a balanced bipartite graph. Odd v uses a circulant whose
    distances lie strictly between v/3 and v/2; sums of two such distances
    fall outside that window modulo v, so no triangle closes.

    Raises:
        Unrealizable: odd degree sum (parity) or too few distances (density).

    """
    if r == 0 or v == 0:
        return Graph.empty(v)
    if v * r % 2:
        msg = f"{v} vertices of degree {r} have an odd degree sum"
        raise Unrealizable(msg, UnrealizableReason.PARITY)
    if v % 2 == 0:
        half = v // 2
        if r < half:
            return trifree_even(r, 0, half)
        if r == half:
            return _complete_multipartite([half, half])
        msg = f"degree {r} exceeds half of {v} vertices"
        raise Unrealizable(msg, UnrealizableReason.DENSITY)

    distances = list(range(v // 3 + 1, (v + 1) // 2))
    if r // 2 > len(distances):
        msg = f"only {len(distances)} sum-free distances for degree {r} on {v} vertices"
        raise Unrealizable(msg, UnrealizableReason.DENSITY)
    edges = [
        (x, (x + s) % v) for s in distances[: r // 2] for x in range(v)
    ]
    return Graph.from_edges(v, edges)


def realize_trifree(profile: DegreeProfile, *, strict: bool = True) -> Graph:
    """Triangle-free graph with ``alpha`` vertices of degree ``a`` and ``beta`` of degree ``b``.

    Handles ``|a - b| = 1`` by the two-degree constructions, and ``a = b``
    (or an empty class) by ``trifree_regular``. When one class is odd and
    neither odd-core construction has room, the degrees are split into two
    sides of equal sum and realized as a bipartite graph. In strict mode the
    density condition ``3a + 3b < alpha + beta - 1`` is enforced up front.

    Raises:
        Unrealizable: reason ``parity``, ``density`` or ``unsupported``.

    """
    if profile.degree_sum % 2:
        msg = f"profile {_describe(profile)} has an odd degree sum"
        raise Unrealizable(msg, UnrealizableReason.PARITY)
    if profile.beta == 0 or profile.a == profile.b:
        return trifree_regular(profile.order, profile.a)
    if profile.alpha == 0:
        return trifree_regular(profile.order, profile.b)
    if abs(profile.a - profile.b) != 1:
        msg = f"profile {_describe(profile)} has degrees more than one apart"
        raise Unrealizable(msg, UnrealizableReason.UNSUPPORTED)
    if strict and not 3 * (profile.a + profile.b) < profile.order - 1:
        msg = f"profile {_describe(profile)} is too dense for the construction"
        raise Unrealizable(msg, UnrealizableReason.DENSITY)

    if profile.alpha % 2 == 0 and profile.beta % 2 == 0:
        return _even_classes(profile)

    # Exactly one class is odd; orient it as alpha, which forces a even.
    odd = profile if profile.alpha % 2 else profile.swapped()
    for build in (_odd_via_regular_core, _odd_via_mixed_core, _bipartite_two_degree):
        graph = build(odd)
        if graph is not None:
            return graph

    msg = f"profile {_describe(profile)} is outside the constructive cases"
    raise Unrealizable(msg, UnrealizableReason.UNSUPPORTED)


def _describe(profile: DegreeProfile) -> str:
    return f"({profile.alpha},{profile.a},{profile.beta},{profile.b})"


def _even_classes(profile: DegreeProfile) -> Graph:
    """Two-degree graph with both class sizes even."""
    high, low = (
        (profile, profile.swapped()) if profile.a > profile.b else (profile.swapped(), profile)
    )
    # high.alpha vertices of degree low.a + 1 and low.alpha of degree low.a
    i, m, d = high.alpha // 2, low.alpha // 2, low.a
    if d >= i + m:
        msg = f"profile {_describe(profile)} needs degree {d} below {i + m}"
        raise Unrealizable(msg, UnrealizableReason.DENSITY)
    return trifree_even(d, i, m)


def _odd_via_regular_core(odd: DegreeProfile) -> Graph | None:
    """An a-regular block on 4a+1 vertices next to an even two-degree graph."""
    rest = odd.alpha - 4 * odd.a - 1
    if rest < 0:
        return None
    core = trifree_odd(odd.a, odd.a // 2)
    try:
        tail = _even_or_regular(DegreeProfile(alpha=rest, a=odd.a, beta=odd.beta, b=odd.b))
    except Unrealizable:
        return None
    return core.disjoint_union(tail)


def _odd_via_mixed_core(odd: DegreeProfile) -> Graph | None:
    """4b vertices of degree b plus one of degree a, next to an even graph."""
    rest = odd.beta - 4 * odd.b
    if rest < 0 or odd.b < odd.a // 2:
        return None
    core = trifree_odd(odd.b, odd.a // 2)
    try:
        tail = _even_or_regular(
            DegreeProfile(alpha=odd.alpha - 1, a=odd.a, beta=rest, b=odd.b)
        )
    except Unrealizable:
        return None
    return core.disjoint_union(tail)


def _even_or_regular(profile: DegreeProfile) -> Graph:
    if profile.alpha == 0:
        return trifree_regular(profile.beta, profile.b)
    if profile.beta == 0:
        return trifree_regular(profile.alpha, profile.a)
    return _even_classes(profile)


def _bipartite_two_degree(profile: DegreeProfile) -> Graph | None:
    """Havel-Hakimi bipartite realization over a side split with equal degree sums.

    Splits are tried with the most balanced side sizes first. Bipartite
    Havel-Hakimi succeeds exactly when the split is realizable, so the
    degrees are checked afterwards and failing splits are skipped.
    """
    half = profile.degree_sum // 2
    splits = sorted(
        (
            (x_a, x_b)
            for x_a in range(profile.alpha + 1)
            for x_b in range(profile.beta + 1)
            if x_a * profile.a + x_b * profile.b == half
        ),
        key=lambda split: (abs(2 * sum(split) - profile.order), split),
    )
    for x_a, x_b in splits:
        side = [profile.a] * x_a + [profile.b] * x_b
        other = [profile.a] * (profile.alpha - x_a) + [profile.b] * (profile.beta - x_b)
        if max(side, default=0) > len(other) or max(other, default=0) > len(side):
            continue
        realized = nx.bipartite.havel_hakimi_graph(side, other, create_using=nx.Graph)
        if [realized.degree(v) for v in range(profile.order)] != side + other:
            continue
        log(f"profile {_describe(profile)} split {x_a},{x_b} realized bipartite", VERBOSITY_DEBUG)
        return Graph.from_edges(profile.order, realized.edges())
    return None


def search_trifree(degrees: list[int]) -> Graph | None:
    """Exhaustive search for a triangle-free graph with the given degrees.

    Vertices are completed in index order; each one picks its missing
    neighbours among later vertices in lexicographic order, so the first
    graph found is deterministic. Returns ``None`` when none exists.
    """
    n = len(degrees)
    total = sum(degrees)
    if total % 2 or any(d >= max(n, 1) for d in degrees) or total // 2 > n * n // 4:
        return None

    rows = [0] * n
    residual = list(degrees)

    def extend(u: int) -> bool:
        while u < n and residual[u] == 0:
            u += 1
        if u == n:
            return True
        candidates = [w for w in range(u + 1, n) if residual[w] > 0 and not rows[u] & rows[w]]
        for chosen in combinations(candidates, residual[u]):
            need = residual[u]
            for w in chosen:
                rows[u] |= 1 << w
                rows[w] |= 1 << u
                residual[w] -= 1
            residual[u] = 0
            if extend(u + 1):
                return True
            residual[u] = need
            for w in chosen:
                rows[u] &= ~(1 << w)
                rows[w] &= ~(1 << u)
                residual[w] += 1
        return False

    if not extend(0):
        return None
    return Graph(n, rows)


@lru_cache(maxsize=4096)
def realize_part(v: int, b: int) -> Graph:
    """Triangle-free graph on v vertices with the near-regular rounding of b edges.

    Vertex degrees follow ``near_regular_degrees(v, b)``: larger degrees on
    the lowest labels.

    Raises:
        Unrealizable: Neither a construction nor the small-part search applies.

    """
    degrees = near_regular_degrees(v, b)
    if b == 0:
        return Graph.empty(v)
    low = degrees[-1]
    high_count = degrees.count(low + 1)
    profile = DegreeProfile(alpha=high_count, a=low + 1, beta=v - high_count, b=low)
    try:
        graph = realize_trifree(profile, strict=False)
    except Unrealizable as e:
        if v > SEARCH_PART_LIMIT:
            raise
        log(f"searching part v={v}, b={b}: {e.message}", VERBOSITY_DEBUG)
        found = search_trifree(degrees)
        if found is None:
            raise
        return found
    return _sort_by_degree(graph)


def _sort_by_degree(g: Graph) -> Graph:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return g.relabel(perm)


def part_realizable(v: int, b: int) -> bool:
    """Whether ``realize_part(v, b)`` succeeds."""
    try:
        realize_part(v, b)
    except (Unrealizable, PreconditionViolated):
        return False
    return True


def build_hstar(spec: PartitionSpec) -> Graph:
    """Complete bipartite graph between the parts plus a triangle-free graph in each.

    Each part receives the near-regular rounding of its edge count. Vertices
    are ranked by ``phi`` (stable), and the larger rounded degrees go to the
    higher-ranked vertices, so a near-regular ``phi`` is reproduced exactly.
    """
    n = spec.n
    rows = list(_complete_multipartite([spec.v1, spec.v2]).rows)
    for offset, degrees, b in ((0, spec.part1, spec.b1), (spec.v1, spec.part2, spec.b2)):
        part = realize_part(len(degrees), b)
        ranking = sorted(range(len(degrees)), key=lambda v: -degrees[v])
        for position, row in enumerate(part.rows):
            target = offset + ranking[position]
            for neighbour_position in iter_bits(row):
                rows[target] |= 1 << (offset + ranking[neighbour_position])
    return Graph(n, rows)
