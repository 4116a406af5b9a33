"""Closed-form values."""

from typing import Annotated

import typer

from supersat.core.config import load_config
from supersat.core.constructions import partition_spec
from supersat.core.errors import RegimeViolated
from supersat.core.formulas import (
    asymptotic_h,
    asymptotic_h_simple,
    f_terms,
    f_value,
    formula_params,
    structured_h,
    upper_bound_value,
)
from supersat.utils.options import (
    FormatOption,
    NRangeOption,
    OutOption,
    QRangeOption,
    resolve_format,
)
from supersat.utils.output import emit_rows, parse_range, report_errors

app = typer.Typer()

H_COLUMNS = ["n", "q", "d", "m", "e1", "e2", "asymptotic", "structured", "simple", "upper_bound"]
F_COLUMNS = ["v1", "v2", "b1", "b2", "f", "type1", "type2", "type3", "within_density_cap"]


@app.command("h")
def formula_h(
    n: NRangeOption,
    q: QRangeOption,
    *,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """Asymptotic value of h(n, q) with its derived parameters."""
    config = load_config()
    with report_errors():
        rows = []
        for n_value in parse_range(n):
            for q_value in parse_range(q):
                params = formula_params(n_value, q_value)
                try:
                    bound = upper_bound_value(n_value, q_value)
                except RegimeViolated:
                    bound = None
                rows.append(
                    {
                        **params.model_dump(),
                        "asymptotic": asymptotic_h(params),
                        "structured": structured_h(params),
                        "simple": asymptotic_h_simple(n_value, q_value),
                        "upper_bound": bound,
                    }
                )
        emit_rows(rows, resolve_format(config, fmt), out, H_COLUMNS, "h(n, q)")


@app.command("f")
def formula_f(
    v1: Annotated[int, typer.Option("--v1", min=0, help="Size of part 1")],
    v2: Annotated[int, typer.Option("--v2", min=0, help="Size of part 2")],
    b1: Annotated[int, typer.Option("--b1", min=0, help="Edges inside part 1")],
    b2: Annotated[int, typer.Option("--b2", min=0, help="Edges inside part 2")],
    *,
    fmt: FormatOption = None,
    out: OutOption = None,
) -> None:
    """f for near-regular parts, split by bowtie type."""
    config = load_config()
    with report_errors():
        spec = partition_spec(v1, v2, b1, b2)
        terms = f_terms(spec)
        row = {
            "v1": v1,
            "v2": v2,
            "b1": b1,
            "b2": b2,
            "f": f_value(spec),
            "type1": terms.type1,
            "type2": terms.type2,
            "type3": terms.type3,
            "within_density_cap": spec.within_density_cap,
        }
        emit_rows([row], resolve_format(config, fmt), out, F_COLUMNS)
