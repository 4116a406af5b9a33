"""Optimizer command."""

from typing import Annotated

import typer

from supersat.core.config import load_config, log
from supersat.core.counting import count_bowties
from supersat.core.optimizer import local_search_refine, minimize_f, realize_witness
from supersat.utils.options import (
    FormatOption,
    MaxOffsetOption,
    NRangeOption,
    OutOption,
    QRangeOption,
    ThreadsOption,
    resolve_format,
    resolve_threads,
)
from supersat.utils.output import emit_rows, parse_range, report_errors

COLUMNS = [
    "n",
    "q",
    "min_value",
    "a",
    "v1",
    "v2",
    "b1",
    "b2",
    "realizable",
    "cells_examined",
    "type1",
    "type2",
    "type3",
    "refined",
]


def optimize(
    n: NRangeOption,
    q: QRangeOption,
    *,
    max_offset: MaxOffsetOption = None,
    refine: Annotated[
        int | None,
        typer.Option(
            "--refine",
            min=0,
            help="Run local search on each realised witness for at most this many moves",
        ),
    ] = None,
    threads: ThreadsOption = None,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """Minimise f over part sizes and edge splits for each (n, q)."""
    config = load_config()
    workers = resolve_threads(config, threads)
    offset = config.optimizer.max_offset if max_offset is None else max_offset
    with report_errors():
        rows = []
        for n_value in parse_range(n):
            for q_value in parse_range(q):
                result = minimize_f(n_value, q_value, offset, workers)
                row = result.model_dump(exclude={"witness", "terms"})
                row.update(result.terms.model_dump(exclude={"other"}))
                row["refined"] = None
                if refine is not None and result.realizable:
                    refined = local_search_refine(realize_witness(result), refine)
                    row["refined"] = count_bowties(refined)
                    log(f"n={n_value} q={q_value}: local search reached {row['refined']}")
                rows.append(row)
        emit_rows(rows, resolve_format(config, fmt), out, COLUMNS, "min f")
