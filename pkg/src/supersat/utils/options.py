"""Command-line options shared by several commands."""

from pathlib import Path
from typing import Annotated

import typer

from supersat.core.config import GraphFormat, OutputFormat, SupersatConfig

FormatOption = Annotated[
    OutputFormat | None,
    typer.Option("--format", "-f", help="Output format (defaults to output.format)"),
]
GraphFormatOption = Annotated[
    GraphFormat | None,
    typer.Option("--graph-format", "-g", help="Graph encoding (defaults to output.graph_format)"),
]
OutOption = Annotated[
    Path | None,
    typer.Option("--out", "-o", help="Write to this file instead of stdout"),
]
ThreadsOption = Annotated[
    int | None,
    typer.Option("--threads", "-t", min=1, help="Worker processes (defaults to SUPERSAT_THREADS)"),
]
NRangeOption = Annotated[
    str,
    typer.Option("--n", "--n-range", "-n", help="Vertex count or range A..B[..step]"),
]
QRangeOption = Annotated[
    str,
    typer.Option("--q", "--q-range", "-q", help="Surplus or range A..B[..step]"),
]
MaxOffsetOption = Annotated[
    int | None,
    typer.Option("--max-offset", min=0, help="Largest part-size offset searched"),
]


def resolve_format(config: SupersatConfig, fmt: OutputFormat | None) -> OutputFormat:
    """Explicit format or the configured default."""
    return fmt or config.output.format


def resolve_graph_format(
    config: SupersatConfig, fmt: GraphFormat | None
) -> GraphFormat:
    """Explicit graph encoding or the configured default."""
    return fmt or config.output.graph_format


def resolve_threads(config: SupersatConfig, threads: int | None) -> int:
    """Explicit worker count or the configured one."""
    return threads or config.threads