"""Cross-check of oracle, optimizer, asymptotic formula and upper bound."""

from typing import Annotated, Any

import typer

from supersat.core.config import SupersatConfig, load_config, log
from supersat.core.constructions import upper_bound_graph
from supersat.core.counting import count_bowties
from supersat.core.errors import (
    BudgetExceeded,
    Infeasible,
    InvariantViolation,
    PreconditionViolated,
    RegimeViolated,
    TooLarge,
    Unrealizable,
)
from supersat.core.formulas import asymptotic_h, formula_params, structured_h, upper_bound_value
from supersat.core.optimizer import minimize_f
from supersat.core.oracle import SearchSettings, h_exact
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
    "oracle",
    "optimizer",
    "realizable",
    "asymptotic",
    "structured",
    "exact_at_4n",
    "upper_bound",
    "upper_bound_graph",
    "oracle_le_optimizer",
    "bound_holds",
]


def verify_cell(
    n: int,
    q: int,
    *,
    max_offset: int,
    workers: int,
    settings: SearchSettings | None,
) -> dict[str, Any]:
    """One row of the verification table.

    Columns that do not apply to (n, q) are ``None``: the oracle beyond its
    caps, ``exact_at_4n`` unless 4 divides n, and the upper bound outside
    ``q <= n^2/20``.
    """
    row: dict[str, Any] = dict.fromkeys(COLUMNS)
    row.update(n=n, q=q)

    try:
        result = minimize_f(n, q, max_offset, workers)
        row["optimizer"] = result.min_value
        row["realizable"] = result.realizable
    except Infeasible as e:
        log(f"n={n} q={q}: optimizer skipped, {e.message}")

    params = formula_params(n, q)
    row["asymptotic"] = asymptotic_h(params)
    row["structured"] = structured_h(params)
    if n % 4 == 0 and row["optimizer"] is not None:
        row["exact_at_4n"] = row["optimizer"] == row["asymptotic"]

    try:
        row["upper_bound"] = upper_bound_value(n, q)
        row["upper_bound_graph"] = count_bowties(upper_bound_graph(n, q))
    except (RegimeViolated, Unrealizable) as e:
        log(f"n={n} q={q}: upper bound skipped, {e.message}")
    if row["upper_bound"] is not None and row["upper_bound_graph"] is not None:
        row["bound_holds"] = row["upper_bound_graph"] <= row["upper_bound"]

    if settings is not None:
        try:
            row["oracle"] = h_exact(n, q, settings).optimum
        except (TooLarge, BudgetExceeded, PreconditionViolated) as e:
            log(f"n={n} q={q}: oracle skipped, {e.message}")
    if row["oracle"] is not None and row["optimizer"] is not None:
        row["oracle_le_optimizer"] = row["oracle"] <= row["optimizer"]
    return row


def verify(
    n: NRangeOption,
    q: QRangeOption,
    *,
    oracle: Annotated[
        bool,
        typer.Option("--oracle/--no-oracle", help="Run the exhaustive search where it fits"),
    ] = True,
    budget: Annotated[
        int | None,
        typer.Option("--budget", min=1, help="Largest number of candidate graphs"),
    ] = None,
    max_offset: MaxOffsetOption = None,
    threads: ThreadsOption = None,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """Tabulate every available value of h(n, q) side by side.

    Exits with code 4 when the oracle exceeds the optimizer or the
    upper-bound graph, or when that graph exceeds its bound.
    """
    config = load_config()
    with report_errors():
        n_values = parse_range(n)
        q_values = parse_range(q)
        workers = resolve_threads(config, threads)
        settings = _oracle_settings(config, budget, workers) if oracle else None
        offset = config.optimizer.max_offset if max_offset is None else max_offset
        rows = [
            verify_cell(n_value, q_value, max_offset=offset, workers=workers, settings=settings)
            for n_value in n_values
            for q_value in q_values
        ]
        emit_rows(rows, resolve_format(config, fmt), out, COLUMNS, "verification")

        broken = [
            (row["n"], row["q"])
            for row in rows
            if row["oracle_le_optimizer"] is False
            or row["bound_holds"] is False
            or _oracle_above_construction(row)
        ]
        if broken:
            msg = f"hard invariants fail at (n, q) = {broken}"
            raise InvariantViolation(msg)


def _oracle_above_construction(row: dict[str, Any]) -> bool:
    oracle, built = row["oracle"], row["upper_bound_graph"]
    return oracle is not None and built is not None and oracle > built


def _oracle_settings(
    config: SupersatConfig, budget: int | None, workers: int
) -> SearchSettings:
    return SearchSettings(
        max_n=config.oracle.max_n,
        budget=config.oracle.budget if budget is None else budget,
        witness_cap=config.oracle.witness_cap,
        prune=config.oracle.prune,
        symmetry=config.oracle.symmetry,
        workers=workers,
    )
