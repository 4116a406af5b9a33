"""Exhaustive ground truth for tiny graphs.

Graphs with a fixed number of edges are enumerated as lexicographic
combinations of the vertex pairs. The search space is split into shards by
the first chosen pair; every shard is searched independently against the
same starting bound, so the optimum, the witnesses and the number of graphs
examined do not depend on how many workers run.

Two prunings are available, both switchable off for audit runs:

* bowtie bound: the bowtie count never drops when an edge is added, so a
  partial graph already above the bound cannot complete to anything better;
* first-vertex symmetry: every graph has a relabelling in which vertex 0 has
  maximum degree, and degrees only grow along a branch, so branches where
  another vertex overtakes vertex 0 after its pairs are decided can be cut
  without losing any isomorphism class.
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from itertools import combinations, permutations, product
from math import comb

from pydantic import BaseModel
from rich.progress import Progress, SpinnerColumn, TextColumn

from supersat.core.config import VERBOSITY_BASIC, current_verbosity, err_console, log
from supersat.core.constructions import ExtremalVariant, ex_bowtie, extremal_bowtie_free
from supersat.core.counting import BowtieTypes, classify_bowties, count_bowties
from supersat.core.errors import (
    BudgetExceeded,
    PreconditionViolated,
    SupersatError,
    TooLarge,
)
from supersat.core.graph import Graph
from supersat.core.graph_io import write_graph6

DEFAULT_MAX_N = 8
DEFAULT_UNIQUENESS_MAX_N = 7
DEFAULT_BUDGET = 100_000_000
DEFAULT_WITNESS_CAP = 10
# On five vertices K4 plus a pendant edge is a third extremal graph.
UNIQUENESS_FROM_N = 6


class OracleReport(BaseModel):
    """Outcome of one exhaustive search."""

    n: int
    q: int | None = None
    edges: int
    optimum: int
    witness_graphs: list[list[tuple[int, int]]]
    witness_types: list[BowtieTypes] | None = None
    graphs_examined: int
    shards: int
    prune: bool
    symmetry: bool
    wall_time: float


class IsomorphismClass(BaseModel):
    """One bucket of extremal graphs."""

    graph6: str
    edges: list[tuple[int, int]]
    labelled_found: int
    turan_plus_edge: bool


class UniquenessReport(BaseModel):
    """All bowtie-free graphs with the maximum edge count, up to isomorphism."""

    n: int
    ex: int
    classes: list[IsomorphismClass]
    graphs_examined: int
    wall_time: float

    @property
    def all_turan_plus_edge(self) -> bool:
        """Whether every class is T2(n) with one added edge."""
        return all(iso.turan_plus_edge for iso in self.classes)

    @property
    def uniqueness_expected(self) -> bool:
        """Whether only T2(n) plus an edge can be extremal at this n."""
        return self.n >= UNIQUENESS_FROM_N


@dataclass
class SearchSettings:
    """Knobs shared by every oracle entry point."""

    max_n: int = DEFAULT_MAX_N
    budget: int = DEFAULT_BUDGET
    witness_cap: int | None = DEFAULT_WITNESS_CAP
    prune: bool = True
    symmetry: bool = True
    workers: int = 1


@dataclass
class ShardResult:
    """Best count inside one shard, with the graphs attaining it."""

    best: int | None = None
    witnesses: list[tuple[int, ...]] = field(default_factory=list)
    examined: int = 0


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """All pairs u < v in lexicographic order."""
    return list(combinations(range(n), 2))


def scan_shard(
    n: int,
    k: int,
    first: int,
    bound: int | None,
    witness_cap: int | None,
    *,
    prune: bool,
    symmetry: bool,
) -> ShardResult:
    """Search graphs with k edges whose smallest pair index is ``first``.

    Only graphs with at most ``bound`` bowties are reported when a bound is
    given. Witnesses are adjacency row tuples in discovery order.
    """
    pairs = vertex_pairs(n)
    slots = len(pairs)
    zero_slots = n - 1
    result = ShardResult()
    rows = [0] * n
    degrees = [0] * n

    def limit() -> int | None:
        if result.best is None:
            return bound
        if bound is None:
            return result.best
        return min(bound, result.best)

    def add(index: int) -> None:
        u, v = pairs[index]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        degrees[u] += 1
        degrees[v] += 1

    def remove(index: int) -> None:
        u, v = pairs[index]
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        degrees[u] -= 1
        degrees[v] -= 1

    def violates_symmetry(index: int) -> bool:
        if not symmetry or index < zero_slots:
            return False
        u, v = pairs[index]
        return max(degrees[u], degrees[v]) > degrees[0]

    def leaf() -> None:
        result.examined += 1
        if symmetry and degrees[0] < max(degrees):
            return
        count = count_bowties(Graph(n, rows))
        cap = limit()
        if cap is not None and count > cap:
            return
        if result.best is None or count < result.best:
            result.best = count
            result.witnesses = []
        if witness_cap is None or len(result.witnesses) < witness_cap:
            result.witnesses.append(tuple(rows))

    def descend(index: int, remaining: int) -> None:
        if remaining == 0:
            leaf()
            return
        for nxt in range(index, slots - remaining + 1):
            add(nxt)
            if violates_symmetry(nxt) or (
                prune and _above(count_bowties(Graph(n, rows)), limit())
            ):
                remove(nxt)
                continue
            descend(nxt + 1, remaining - 1)
            remove(nxt)

    if k == 0:
        if first == 0:
            leaf()
        return result
    add(first)
    if not violates_symmetry(first) and not (
        prune and _above(count_bowties(Graph(n, rows)), limit())
    ):
        descend(first + 1, k - 1)
    remove(first)
    return result


def _above(count: int, cap: int | None) -> bool:
    return cap is not None and count > cap


def search_edge_count(
    n: int, k: int, settings: SearchSettings, bound: int | None = None
) -> tuple[int | None, list[Graph], int, int]:
    """Minimum bowtie count over graphs with n vertices and k edges.

    Returns ``(optimum, witnesses, examined, shards)``; the optimum is
    ``None`` when no graph stays within ``bound``.

    Raises:
        TooLarge: n above ``settings.max_n``.
        BudgetExceeded: More than ``settings.budget`` candidate graphs.

    """
    if n > settings.max_n:
        msg = f"n={n} is above the exhaustive cap of {settings.max_n}"
        raise TooLarge(msg)
    slots = comb(n, 2)
    if not 0 <= k <= slots:
        msg = f"{k} edges do not fit on {n} vertices"
        raise PreconditionViolated(msg)
    candidates = comb(slots, k)
    if candidates > settings.budget:
        msg = f"{candidates} graphs exceed the budget of {settings.budget}"
        raise BudgetExceeded(msg)

    firsts = list(range(slots - k + 1)) if k else [0]
    args = [(n, k, first, bound, settings.witness_cap) for first in firsts]
    flags = {"prune": settings.prune, "symmetry": settings.symmetry}
    results = _run_shards(args, flags, settings.workers, f"n={n}, m={k}")

    optimum: int | None = None
    for shard in results:
        if shard.best is not None and (optimum is None or shard.best < optimum):
            optimum = shard.best
    witnesses: list[Graph] = []
    for shard in results:
        if shard.best != optimum:
            continue
        for rows in shard.witnesses:
            if settings.witness_cap is not None and len(witnesses) >= settings.witness_cap:
                break
            witnesses.append(Graph(n, rows))
    examined = sum(shard.examined for shard in results)
    log(f"n={n}, m={k}: optimum {optimum}, {examined} graphs in {len(firsts)} shards")
    return optimum, witnesses, examined, len(firsts)


def _run_shards(
    args: list[tuple], flags: dict[str, bool], workers: int, label: str
) -> list[ShardResult]:
    show = current_verbosity() >= VERBOSITY_BASIC
    results: list[ShardResult | None] = [None] * len(args)
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=err_console,
        disable=not show,
    ) as progress:
        task = progress.add_task(f"Searching {label}", total=len(args))
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = {
                    pool.submit(scan_shard, *arg, **flags): index
                    for index, arg in enumerate(args)
                }
                for future in as_completed(futures):
                    results[futures[future]] = future.result()
                    progress.advance(task)
        else:
            for index, arg in enumerate(args):
                results[index] = scan_shard(*arg, **flags)
                progress.advance(task)
        progress.update(task, description=f"✅ Searched {label}")
    return [result for result in results if result is not None]


def ex_exact(n: int, settings: SearchSettings | None = None) -> OracleReport:
    """Largest edge count of a bowtie-free graph on n vertices, by exhaustion."""
    settings = settings or SearchSettings()
    if n > settings.max_n:
        msg = f"n={n} is above the exhaustive cap of {settings.max_n}"
        raise TooLarge(msg)
    started = time.perf_counter()
    slots = comb(n, 2)
    best_k = -1
    best_witnesses: list[Graph] = []
    examined = 0
    shards = 0
    # T2(n) is bipartite, so floor(n^2/4) edges are always achievable.
    for k in range(n * n // 4, slots + 1):
        optimum, witnesses, seen, used = search_edge_count(n, k, settings, bound=0)
        examined += seen
        shards += used
        if optimum is None:
            break
        best_k, best_witnesses = k, witnesses
    return OracleReport(
        n=n,
        edges=best_k,
        optimum=best_k,
        witness_graphs=[g.edges() for g in best_witnesses],
        graphs_examined=examined,
        shards=shards,
        prune=settings.prune,
        symmetry=settings.symmetry,
        wall_time=time.perf_counter() - started,
    )


def h_exact(
    n: int, q: int, settings: SearchSettings | None = None, bound: int | None = None
) -> OracleReport:
    """Minimum bowtie count over graphs with n vertices and ex(n) + q edges.

    ``bound`` is an optional known upper bound (a constructed graph's count);
    it only speeds the search up.
    """
    settings = settings or SearchSettings()
    k = ex_bowtie(n) + q
    if n > settings.max_n:
        msg = f"n={n} is above the exhaustive cap of {settings.max_n}"
        raise TooLarge(msg)
    if bound is None and settings.prune:
        bound = optimizer_bound(n, q)
    started = time.perf_counter()
    optimum, witnesses, examined, shards = search_edge_count(n, k, settings, bound)
    if optimum is None:
        msg = f"bound {bound} is below the true minimum for n={n}, q={q}"
        raise PreconditionViolated(msg)
    return OracleReport(
        n=n,
        q=q,
        edges=k,
        optimum=optimum,
        witness_graphs=[g.edges() for g in witnesses],
        witness_types=[classify_bowties(g, best_bipartition(g)) for g in witnesses],
        graphs_examined=examined,
        shards=shards,
        prune=settings.prune,
        symmetry=settings.symmetry,
        wall_time=time.perf_counter() - started,
    )


def optimizer_bound(n: int, q: int) -> int | None:
    """Bowtie count of the realised optimizer witness, or None when there is none."""
    from supersat.core.optimizer import minimize_f, realize_witness

    try:
        return count_bowties(realize_witness(minimize_f(n, q)))
    except SupersatError as e:
        log(f"no starting bound for n={n}, q={q}: {e.message}")
        return None


def best_bipartition(g: Graph) -> frozenset[int]:
    """Side containing vertex 0 of a cut with the fewest edges inside the parts."""
    best: tuple[int, int] | None = None
    for mask in range(1 << max(g.n - 1, 0)):
        side = (mask << 1) | 1
        inside = sum(
            1 for u, v in g.edges() if (side >> u & 1) == (side >> v & 1)
        )
        if best is None or inside < best[0]:
            best = (inside, side)
    side = best[1] if best else 1
    return frozenset(v for v in range(g.n) if side >> v & 1)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism invariant code of g.

    Vertices are coloured by iterated neighbourhood refinement; the code is
    the smallest adjacency encoding over all orderings that keep the colour
    classes in order.
    """
    colors = _refine(g)
    classes = [
        [v for v in range(g.n) if colors[v] == color] for color in sorted(set(colors))
    ]
    best: tuple[int, ...] | None = None
    for arrangement in product(*(permutations(cls) for cls in classes)):
        order = [v for block in arrangement for v in block]
        position = {v: index for index, v in enumerate(order)}
        code = tuple(
            sum(1 << position[w] for w in g.neighbors(v)) for v in order
        )
        if best is None or code < best:
            best = code
    return best or ()


def _refine(g: Graph) -> list[int]:
    colors = g.degrees()
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def extremal_uniqueness(
    n: int, settings: SearchSettings | None = None
) -> UniquenessReport:
    """Isomorphism classes of bowtie-free graphs with the maximum edge count."""
    settings = settings or SearchSettings(max_n=DEFAULT_UNIQUENESS_MAX_N)
    cap = min(settings.max_n, DEFAULT_UNIQUENESS_MAX_N)
    if n > cap:
        msg = f"uniqueness check is capped at n={cap}"
        raise TooLarge(msg)
    ex_bowtie(n)
    started = time.perf_counter()
    ex = ex_exact(n, replace(settings, witness_cap=1)).optimum
    everything = replace(settings, witness_cap=None)
    _, graphs, examined, _ = search_edge_count(n, ex, everything, bound=0)

    reference = {
        canonical_form(extremal_bowtie_free(n, variant)) for variant in ExtremalVariant
    }
    buckets: dict[tuple[int, ...], list[Graph]] = {}
    for graph in graphs:
        buckets.setdefault(canonical_form(graph), []).append(graph)

    classes = [
        IsomorphismClass(
            graph6=write_graph6(members[0]).decode("ascii").strip(),
            edges=members[0].edges(),
            labelled_found=len(members),
            turan_plus_edge=code in reference,
        )
        for code, members in sorted(buckets.items())
    ]
    return UniquenessReport(
        n=n,
        ex=ex,
        classes=classes,
        graphs_examined=examined,
        wall_time=time.perf_counter() - started,
    )
