"""Graph construction commands.

Every command writes one graph to stdout or ``--out``; output bytes depend
only on the arguments.
"""

from collections.abc import Callable
from typing import Annotated

import typer

from supersat.core.config import GraphFormat, load_config, log
from supersat.core.constructions import (
    DegreeProfile,
    ExtremalVariant,
    PartitionSpec,
    build_hstar,
    extremal_bowtie_free,
    partition_spec,
    realize_trifree,
    trifree_even,
    trifree_odd,
    turan,
    upper_bound_graph,
)
from supersat.core.counting import count_bowties
from supersat.core.errors import PreconditionViolated
from supersat.core.graph import Graph, random_graph
from supersat.core.graph_io import write_graph
from supersat.core.optimizer import local_search_refine, minimize_f, realize_witness
from supersat.utils.options import (
    GraphFormatOption,
    MaxOffsetOption,
    OutOption,
    ThreadsOption,
    resolve_graph_format,
    resolve_threads,
)
from supersat.utils.output import emit, report_errors

app = typer.Typer()

NOption = Annotated[int, typer.Option("--n", "-n", min=0, help="Number of vertices")]
QOption = Annotated[int, typer.Option("--q", "-q", min=0, help="Edges above ex(n)")]


def _write(
    build: Callable[[], Graph],
    graph_format: GraphFormat | None,
    out: OutOption,
) -> None:
    config = load_config()
    with report_errors():
        graph = build()
        log(f"built n={graph.n}, m={graph.m}, bowties={count_bowties(graph)}")
        emit(write_graph(graph, resolve_graph_format(config, graph_format)), out)


@app.command("turan")
def construct_turan(
    r: Annotated[int, typer.Option("--r", "-r", min=1, help="Number of parts")],
    n: NOption,
    *,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """Complete r-partite graph with near-equal parts."""
    _write(lambda: turan(r, n), graph_format, out)


@app.command("extremal")
def construct_extremal(
    n: NOption,
    *,
    variant: Annotated[
        ExtremalVariant,
        typer.Option("--variant", help="Part that receives the extra edge"),
    ] = ExtremalVariant.LARGER,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """T2(n) plus one edge: a maximum bowtie-free graph."""
    _write(lambda: extremal_bowtie_free(n, variant), graph_format, out)


@app.command("upper-bound")
def construct_upper_bound(
    n: NOption,
    q: QOption,
    *,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """T2(n) with q+1 edges spread between two quarter-size sets."""
    _write(lambda: upper_bound_graph(n, q), graph_format, out)


@app.command("trifree")
def construct_trifree(
    alpha: Annotated[int, typer.Option("--alpha", min=0, help="Vertices of degree a")],
    a: Annotated[int, typer.Option("--a", min=0, help="First degree")],
    beta: Annotated[int, typer.Option("--beta", min=0, help="Vertices of degree b")],
    b: Annotated[int, typer.Option("--b", min=0, help="Second degree")],
    *,
    strict: Annotated[
        bool,
        typer.Option("--strict/--no-strict", help="Enforce the density precondition"),
    ] = True,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """Triangle-free graph with alpha vertices of degree a and beta of degree b."""
    profile = DegreeProfile(alpha=alpha, a=a, beta=beta, b=b)
    _write(lambda: realize_trifree(profile, strict=strict), graph_format, out)


@app.command("trifree-even")
def construct_trifree_even(
    d: Annotated[int, typer.Option("--d", min=0, help="Base degree")],
    i: Annotated[int, typer.Option("--i", min=0, help="Pairs of degree d+1")],
    m: Annotated[int, typer.Option("--m", min=0, help="Pairs of degree d")],
    *,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """Bipartite graph with 2i vertices of degree d+1 and 2m of degree d."""
    _write(lambda: trifree_even(d, i, m), graph_format, out)


@app.command("trifree-odd")
def construct_trifree_odd(
    k: Annotated[int, typer.Option("--k", min=0, help="Common degree")],
    m: Annotated[int, typer.Option("--m", min=0, help="Half the special degree")],
    *,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """4k vertices of degree k plus one vertex of degree 2m, triangle-free."""
    _write(lambda: trifree_odd(k, m), graph_format, out)


@app.command("hstar")
def construct_hstar(
    v1: Annotated[int, typer.Option("--v1", min=0, help="Size of part 1")],
    v2: Annotated[int, typer.Option("--v2", min=0, help="Size of part 2")],
    *,
    b1: Annotated[int, typer.Option("--b1", min=0, help="Edges inside part 1")] = 0,
    b2: Annotated[int, typer.Option("--b2", min=0, help="Edges inside part 2")] = 0,
    phi: Annotated[
        str | None,
        typer.Option("--phi", help="Comma separated within-part degrees, overrides b1/b2"),
    ] = None,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """Complete bipartite graph plus triangle-free graphs inside the parts."""

    def build() -> Graph:
        if phi is None:
            return build_hstar(partition_spec(v1, v2, b1, b2))
        try:
            degrees = tuple(int(token) for token in phi.split(","))
        except ValueError as e:
            msg = f"--phi must be comma separated integers, got {phi!r}"
            raise PreconditionViolated(msg) from e
        return build_hstar(PartitionSpec(v1=v1, v2=v2, phi=degrees))

    _write(build, graph_format, out)


@app.command("witness")
def construct_witness(
    n: NOption,
    q: QOption,
    *,
    max_offset: MaxOffsetOption = None,
    refine: Annotated[
        int,
        typer.Option("--refine", min=0, help="Local search moves applied afterwards"),
    ] = 0,
    threads: ThreadsOption = None,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """Realized minimizer of f for (n, q)."""
    config = load_config()

    def build() -> Graph:
        offset = config.optimizer.max_offset if max_offset is None else max_offset
        result = minimize_f(n, q, offset, resolve_threads(config, threads))
        graph = realize_witness(result)
        return local_search_refine(graph, refine) if refine else graph

    _write(build, graph_format, out)


@app.command("random")
def construct_random(
    n: NOption,
    p: Annotated[float, typer.Option("--p", "-p", min=0.0, max=1.0, help="Edge probability")],
    *,
    seed: Annotated[
        int | None,
        typer.Option("--seed", "-s", help="Random seed (defaults to the configured seed)"),
    ] = None,
    graph_format: GraphFormatOption = None,
    out: OutOption = None,
) -> None:
    """Erdős–Rényi random graph G(n, p)."""
    config = load_config()
    chosen = config.seed if seed is None else seed
    _write(lambda: random_graph(n, p, chosen), graph_format, out)
