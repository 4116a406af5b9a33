"""Main CLI entry point for supersat."""

import os
import sys
from typing import Annotated

import click
import typer

from supersat import __version__
from supersat.commands import config, construct, count, formula, optimize, oracle, verify
from supersat.core.config import VERBOSITY_ENV, err_console
from supersat.core.errors import EXIT_OK, EXIT_USAGE

app = typer.Typer(
    name="supersat",
    help="Bowtie supersaturation: counting, constructions, formulas and exact search",
    add_completion=False,
)

app.command("count")(count.count)
app.command("optimize")(optimize.optimize)
app.command("verify")(verify.verify)
app.add_typer(construct.app, name="construct", help="Graph construction commands")
app.add_typer(formula.app, name="formula", help="Closed-form values")
app.add_typer(oracle.app, name="oracle", help="Exhaustive search on tiny graphs")
app.add_typer(config.app, name="config", help="Configuration management commands")


def _show_version(value: bool) -> None:
    if value:
        typer.echo(f"supersat {__version__}")
        raise typer.Exit


@app.callback()
def main(
    *,
    verbose: Annotated[
        int,
        typer.Option(
            "--verbose",
            "-v",
            count=True,
            help="Enable verbose output (-v, -vv, -vvv for increasing detail)",
        ),
    ] = 0,
    version: Annotated[
        bool,
        typer.Option(
            "--version",
            callback=_show_version,
            is_eager=True,
            help="Show the version and exit",
        ),
    ] = False,
) -> None:
    """Supersat - bowtie supersaturation toolkit."""
    if verbose > 0:
        level_names = ["", "basic", "detailed", "debug"]
        level_name = level_names[min(verbose, 3)]
        err_console.print(f"[dim]Verbose mode enabled (level {verbose} - {level_name})[/dim]")
        # Store verbosity level in a way that core modules and workers can access it
        os.environ[VERBOSITY_ENV] = str(verbose)


def run() -> None:
    """Console entry point: usage errors exit with 1 instead of click's 2."""
    try:
        code = app(standalone_mode=False)
    except click.UsageError as e:
        e.show()
        sys.exit(EXIT_USAGE)
    except click.Abort:
        err_console.print("Aborted!")
        sys.exit(EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        sys.exit(e.exit_code)
    sys.exit(code if isinstance(code, int) else EXIT_OK)


if __name__ == "__main__":
    run()
