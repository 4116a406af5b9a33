"""Rendering of command results, range parsing and error reporting."""

import json
import re
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.table import Table

from supersat.core.config import OutputFormat, err_console
from supersat.core.errors import EXIT_USAGE, SupersatError

RANGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(text: str) -> list[int]:
    """Expand ``A..B`` or ``A..B..step`` into an inclusive list.

    A single integer is accepted as a one-element range.

    Raises:
        typer.BadParameter: Malformed text, a zero step or an empty range.

    """
    if text.strip().lstrip("-").isdigit():
        return [int(text)]
    match = RANGE_PATTERN.match(text)
    if not match:
        msg = f"expected A..B[..step], got {text!r}"
        raise typer.BadParameter(msg)
    start, stop = int(match.group(1)), int(match.group(2))
    step = int(match.group(3) or 1)
    if step == 0:
        msg = "range step must be positive"
        raise typer.BadParameter(msg)
    values = list(range(start, stop + 1, step))
    if not values:
        msg = f"range {text!r} is empty"
        raise typer.BadParameter(msg)
    return values


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render(
    rows: Sequence[dict[str, Any]],
    fmt: OutputFormat,
    columns: Sequence[str] | None = None,
    title: str | None = None,
) -> str:
    """Serialize rows as JSON, TSV or a rich table.

    A single row is emitted as a bare JSON object, several as an array.
    ``columns`` fixes the TSV and table column order; it defaults to the
    keys of the first row.
    """
    columns = list(columns or (rows[0].keys() if rows else []))
    if fmt is OutputFormat.JSON:
        payload: Any = rows[0] if len(rows) == 1 else list(rows)
        return json.dumps(payload, indent=2) + "\n"
    if fmt is OutputFormat.TSV:
        lines = ["\t".join(columns)]
        lines.extend("\t".join(_cell(row.get(col)) for col in columns) for row in rows)
        return "\n".join(lines) + "\n"

    table = Table(title=title)
    for col in columns:
        table.add_column(col, justify="right" if _numeric(rows, col) else "left")
    for row in rows:
        table.add_row(*(_cell(row.get(col)) for col in columns))
    capture = Console(width=max(80, 14 * len(columns)))
    with capture.capture() as captured:
        capture.print(table)
    return captured.get()


def _numeric(rows: Sequence[dict[str, Any]], col: str) -> bool:
    return all(
        isinstance(row.get(col), int) and not isinstance(row.get(col), bool)
        for row in rows
    )


def emit(text: str | bytes, out: Path | None = None) -> None:
    """Write machine output to ``out`` or stdout."""
    data = text.encode() if isinstance(text, str) else text
    if out is None:
        typer.echo(data.decode(), nl=False)
        return
    out.write_bytes(data)


def emit_rows(
    rows: Sequence[dict[str, Any]],
    fmt: OutputFormat,
    out: Path | None = None,
    columns: Sequence[str] | None = None,
    title: str | None = None,
) -> None:
    """Render rows and write them out."""
    emit(render(rows, fmt, columns, title), out)


@contextmanager
def report_errors() -> Iterator[None]:
    """Turn library errors into a red stderr line and their exit code."""
    try:
        yield
    except SupersatError as e:
        err_console.print(f"[red]❌ {e.message}[/red]")
        raise typer.Exit(e.exit_code) from e
    except typer.BadParameter as e:
        err_console.print(f"[red]❌ {e.message}[/red]")
        raise typer.Exit(EXIT_USAGE) from e
