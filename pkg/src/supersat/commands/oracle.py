"""Exhaustive search commands."""

from typing import Annotated

import typer

from supersat.core.config import SupersatConfig, load_config
from supersat.core.errors import InvariantViolation
from supersat.core.oracle import SearchSettings, ex_exact, extremal_uniqueness, h_exact
from supersat.utils.options import (
    FormatOption,
    NRangeOption,
    OutOption,
    QRangeOption,
    ThreadsOption,
    resolve_format,
    resolve_threads,
)
from supersat.utils.output import emit_rows, parse_range, report_errors

app = typer.Typer()

REPORT_COLUMNS = [
    "n",
    "q",
    "edges",
    "optimum",
    "graphs_examined",
    "shards",
    "prune",
    "symmetry",
    "wall_time",
    "witness_graphs",
]
CLASS_COLUMNS = ["n", "ex", "graph6", "labelled_found", "turan_plus_edge", "edges"]

BudgetOption = Annotated[
    int | None,
    typer.Option("--budget", min=1, help="Largest number of candidate graphs"),
]
WitnessCapOption = Annotated[
    int | None,
    typer.Option("--witness-cap", min=0, help="Witness graphs kept per report"),
]
PruneOption = Annotated[
    bool | None,
    typer.Option("--prune/--no-prune", help="Branch and bound on the bowtie count"),
]
SymmetryOption = Annotated[
    bool | None,
    typer.Option("--symmetry/--no-symmetry", help="Require vertex 0 to have maximum degree"),
]


def _settings(
    config: SupersatConfig,
    *,
    max_n: int,
    budget: int | None,
    witness_cap: int | None,
    prune: bool | None,
    symmetry: bool | None,
    threads: int | None,
) -> SearchSettings:
    oracle = config.oracle
    return SearchSettings(
        max_n=max_n,
        budget=oracle.budget if budget is None else budget,
        witness_cap=oracle.witness_cap if witness_cap is None else witness_cap,
        prune=oracle.prune if prune is None else prune,
        symmetry=oracle.symmetry if symmetry is None else symmetry,
        workers=resolve_threads(config, threads),
    )


@app.command("ex")
def oracle_ex(
    n: NRangeOption,
    *,
    budget: BudgetOption = None,
    witness_cap: WitnessCapOption = None,
    prune: PruneOption = None,
    symmetry: SymmetryOption = None,
    threads: ThreadsOption = None,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """Largest bowtie-free edge count by exhaustive search."""
    config = load_config()
    settings = _settings(
        config,
        max_n=config.oracle.max_n,
        budget=budget,
        witness_cap=witness_cap,
        prune=prune,
        symmetry=symmetry,
        threads=threads,
    )
    with report_errors():
        rows = [ex_exact(n_value, settings).model_dump() for n_value in parse_range(n)]
        emit_rows(rows, resolve_format(config, fmt), out, REPORT_COLUMNS, "ex(n)")


@app.command("h")
def oracle_h(
    n: NRangeOption,
    q: QRangeOption,
    *,
    budget: BudgetOption = None,
    witness_cap: WitnessCapOption = None,
    prune: PruneOption = None,
    symmetry: SymmetryOption = None,
    threads: ThreadsOption = None,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """Minimum bowtie count with ex(n) + q edges by exhaustive search."""
    config = load_config()
    settings = _settings(
        config,
        max_n=config.oracle.max_n,
        budget=budget,
        witness_cap=witness_cap,
        prune=prune,
        symmetry=symmetry,
        threads=threads,
    )
    with report_errors():
        rows = [
            h_exact(n_value, q_value, settings).model_dump()
            for n_value in parse_range(n)
            for q_value in parse_range(q)
        ]
        emit_rows(rows, resolve_format(config, fmt), out, REPORT_COLUMNS, "h(n, q)")


@app.command("unique")
def oracle_unique(
    n: NRangeOption,
    *,
    budget: BudgetOption = None,
    prune: PruneOption = None,
    symmetry: SymmetryOption = None,
    threads: ThreadsOption = None,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """Isomorphism classes of the maximum bowtie-free graphs.

    Exits with code 4 when some class is not T2(n) plus an edge for n >= 6;
    at n = 5 K4 plus a pendant edge is reported as a third class.
    """
    config = load_config()
    settings = _settings(
        config,
        max_n=config.oracle.uniqueness_max_n,
        budget=budget,
        witness_cap=None,
        prune=prune,
        symmetry=symmetry,
        threads=threads,
    )
    with report_errors():
        rows = []
        failures = []
        for n_value in parse_range(n):
            report = extremal_uniqueness(n_value, settings)
            if report.uniqueness_expected and not report.all_turan_plus_edge:
                failures.append(n_value)
            rows.extend(
                {"n": report.n, "ex": report.ex, **iso.model_dump()}
                for iso in report.classes
            )
        emit_rows(rows, resolve_format(config, fmt), out, CLASS_COLUMNS, "extremal graphs")
        if failures:
            msg = f"extremal graphs other than T2(n) plus an edge for n in {failures}"
            raise InvariantViolation(msg)
