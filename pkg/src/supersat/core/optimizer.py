"""Exact minimisation of the bowtie count over T2(n) plus near-regular parts.

Part sizes are ``ceil(n/2) + a`` and ``floor(n/2) - a``. Every ``(a, b1)``
cell is scored in closed form; degree sequences are always the near-regular
rounding, which minimises ``sum C(d, 2)`` for a fixed edge count.
Each part holds at most ``floor(v^2/4)`` edges, the most a triangle-free
graph on v vertices can have.
"""

from concurrent.futures import ProcessPoolExecutor
from math import comb

from pydantic import BaseModel

from supersat.core.config import VERBOSITY_DETAILED, log
from supersat.core.constructions import (
    PartitionSpec,
    build_hstar,
    ex_bowtie,
    part_realizable,
    partition_spec,
)
from supersat.core.counting import BowtieTypes, count_bowties
from supersat.core.errors import (
    Infeasible,
    PreconditionViolated,
    Unrealizable,
    UnrealizableReason,
)
from supersat.core.formulas import f_terms
from supersat.core.graph import Graph

# (value, |a|, a, b1): smaller is better
CellKey = tuple[int, int, int, int]


class SearchResult(BaseModel):
    """Minimum of f over the searched family and the cell attaining it."""

    n: int
    q: int
    min_value: int
    witness: PartitionSpec
    a: int
    v1: int
    v2: int
    b1: int
    b2: int
    realizable: bool
    cells_examined: int
    terms: BowtieTypes


def near_regular_pair_sum(v: int, b: int) -> int:
    """``sum_j C(d_j, 2)`` for the near-regular rounding of b edges on v vertices."""
    if v == 0:
        return 0
    low, high_count = divmod(2 * b, v)
    return high_count * comb(low + 1, 2) + (v - high_count) * comb(low, 2)


def cell_value(n: int, v1: int, v2: int, b1: int, b2: int) -> int:
    """f for near-regular parts, without materialising the degree list."""
    value = 2 * (n - 4) * b1 * b2
    for v, b, other in ((v1, b1, v2), (v2, b2, v1)):
        value += near_regular_pair_sum(v, b) * other * (other - 2) + comb(b, 2) * other
    return value


def _scan_offset(n: int, q: int, a: int) -> tuple[CellKey | None, int]:
    """Best cell for a single offset and the number of cells scored."""
    v1 = (n + 1) // 2 + a
    v2 = n // 2 - a
    if v1 < 0 or v2 < 0:
        return None, 0
    total = ex_bowtie(n) + q - v1 * v2
    if total < 0:
        return None, 0
    # f only counts the family while both parts can stay triangle-free
    low = max(0, total - v2 * v2 // 4)
    high = min(total, v1 * v1 // 4)
    best: CellKey | None = None
    examined = 0
    for b1 in range(low, high + 1):
        examined += 1
        key = (cell_value(n, v1, v2, b1, total - b1), abs(a), a, b1)
        if best is None or key < best:
            best = key
    return best, examined


def minimize_f(n: int, q: int, max_offset: int = 2, workers: int = 1) -> SearchResult:
    """Minimum of f over offsets ``|a| <= max_offset`` and all edge splits.

    Ties go to the smallest ``|a|``, then the smallest ``a``, then the
    smallest ``b1``; the answer does not depend on ``workers``.

    Raises:
        TooSmall: n < 5.
        Infeasible: No offset can hold the required edges.

    """
    ex = ex_bowtie(n)
    if q < 0 or max_offset < 0:
        msg = f"need q >= 0 and max_offset >= 0, got q={q}, max_offset={max_offset}"
        raise PreconditionViolated(msg)
    if ex + q > comb(n, 2):
        msg = f"{ex + q} edges exceed the {comb(n, 2)} pairs on {n} vertices"
        raise Infeasible(msg)

    offsets = list(range(-max_offset, max_offset + 1))
    if workers > 1 and len(offsets) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            scans = list(pool.map(_scan_offset, [n] * len(offsets), [q] * len(offsets), offsets))
    else:
        scans = [_scan_offset(n, q, a) for a in offsets]

    cells = sum(examined for _, examined in scans)
    keys = [key for key, _ in scans if key is not None]
    if not keys:
        msg = f"no part sizes within offset {max_offset} can hold the surplus for n={n}, q={q}"
        raise Infeasible(msg)

    value, _, a, b1 = min(keys)
    v1, v2 = (n + 1) // 2 + a, n // 2 - a
    b2 = ex + q - v1 * v2 - b1
    witness = partition_spec(v1, v2, b1, b2)
    realizable = part_realizable(v1, b1) and part_realizable(v2, b2)
    log(f"n={n} q={q}: min f={value} at a={a}, split ({b1}, {b2}), {cells} cells")
    return SearchResult(
        n=n,
        q=q,
        min_value=value,
        witness=witness,
        a=a,
        v1=v1,
        v2=v2,
        b1=b1,
        b2=b2,
        realizable=realizable,
        cells_examined=cells,
        terms=f_terms(witness),
    )


def realize_witness(result: SearchResult) -> Graph:
    """Graph attaining ``result.min_value``.

    Raises:
        Unrealizable: The witness parts have no triangle-free realisation.

    """
    if not result.realizable:
        msg = f"witness for n={result.n}, q={result.q} has no triangle-free parts"
        raise Unrealizable(msg, UnrealizableReason.DENSITY)
    return build_hstar(result.witness)


def local_search_refine(g: Graph, budget: int) -> Graph:
    """Relocate single edges while that lowers the bowtie count.

    Each round tries every (edge, non-edge) exchange and applies the best
    one, ties broken lexicographically. Stops at a local optimum or after
    ``budget`` applied moves. Vertex and edge counts never change.
    """
    current = g
    current_count = count_bowties(g)
    for move in range(budget):
        if current_count == 0:
            break
        best: tuple[int, tuple[int, int], tuple[int, int]] | None = None
        non_edges = list(current.iter_non_edges())
        for u, v in current.edges():
            removed = current.without_edge(u, v)
            for x, y in non_edges:
                count = count_bowties(removed.with_edge(x, y))
                if count < current_count and (best is None or count < best[0]):
                    best = (count, (u, v), (x, y))
        if best is None:
            log(f"local search: optimum after {move} moves", VERBOSITY_DETAILED)
            break
        count, (u, v), (x, y) = best
        current = current.without_edge(u, v).with_edge(x, y)
        current_count = count
        log(f"local search: moved ({u},{v}) -> ({x},{y}), bowties {count}", VERBOSITY_DETAILED)
    return current
