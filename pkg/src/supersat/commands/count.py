"""Triangle and bowtie counting command."""

from pathlib import Path
from typing import Annotated

import typer

from supersat.core.config import load_config, log
from supersat.core.counting import CountMethod, count_bowties, count_triangles
from supersat.core.graph_io import guess_format, read_graph
from supersat.utils.options import (
    FormatOption,
    GraphFormatOption,
    OutOption,
    resolve_format,
)
from supersat.utils.output import emit_rows, report_errors


def count(
    path: Annotated[
        Path,
        typer.Argument(exists=True, dir_okay=False, readable=True, help="Graph file"),
    ],
    *,
    graph_format: GraphFormatOption = None,
    method: Annotated[
        CountMethod,
        typer.Option("--method", "-m", help="Bowtie counting strategy"),
    ] = CountMethod.FORMULA,
    detail: Annotated[
        bool,
        typer.Option("--detail", "-d", help="Include per-vertex and per-edge triangle counts"),
    ] = False,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """Count triangles and bowties of a graph file."""
    config = load_config()
    with report_errors():
        graph = read_graph(path.read_bytes(), graph_format or guess_format(path))
        log(f"read {path}: n={graph.n}, m={graph.m}")
        report = count_triangles(graph)
        if method is CountMethod.NAIVE:
            report.bowties = count_bowties(graph, CountMethod.NAIVE)
        row = report.model_dump(exclude_none=True) if detail else {
            "triangles": report.triangles,
            "bowties": report.bowties,
        }
        emit_rows([row], resolve_format(config, fmt), out)
