"""Closed-form bowtie counts and bounds.

All arithmetic is exact: Python integers, plus ``Fraction`` where a half
appears.
"""

from fractions import Fraction
from math import comb, floor

from pydantic import BaseModel, ConfigDict, model_validator

from supersat.core.constructions import PartitionSpec, ex_bowtie, partition_spec
from supersat.core.counting import BowtieTypes
from supersat.core.errors import PreconditionViolated, RegimeViolated

HALF = Fraction(1, 2)


class FormulaParams(BaseModel):
    """Quantities derived from (n, q): ``2(q+1) = d*n + m`` and the split ``e1 + e2 = q + 1``."""

    model_config = ConfigDict(frozen=True)

    n: int
    q: int
    d: int
    m: int
    e1: int
    e2: int

    @model_validator(mode="after")
    def _check(self) -> "FormulaParams":
        if 2 * (self.q + 1) != self.d * self.n + self.m or not 0 <= self.m < self.n:
            msg = f"inconsistent d={self.d}, m={self.m} for n={self.n}, q={self.q}"
            raise PreconditionViolated(msg)
        if self.e1 + self.e2 != self.q + 1:
            msg = f"e1 + e2 must equal q + 1 = {self.q + 1}"
            raise PreconditionViolated(msg)
        return self


def formula_params(n: int, q: int) -> FormulaParams:
    """Derive d, m, e1, e2 from n and q."""
    ex_bowtie(n)
    if q < 0:
        msg = f"surplus must be nonnegative, got {q}"
        raise PreconditionViolated(msg)
    d, m = divmod(2 * (q + 1), n)
    # floor(dn/4 + min(m, n/2)/2) kept in integers
    e1 = (d * n + min(2 * m, n)) // 4
    return FormulaParams(n=n, q=q, d=d, m=m, e1=e1, e2=q + 1 - e1)


def f_terms(spec: PartitionSpec) -> BowtieTypes:
    """Bowties of ``build_hstar(spec)`` split by type, assuming triangle-free parts.

    A pair of disjoint edges inside part i lies in ``v_{3-i}`` bowties, an
    adjacent pair in ``v_{3-i} (v_{3-i} - 1)``, and a pair with one edge in
    each part in ``2 (n - 4)``.
    """
    type1 = type2 = 0
    for degrees, b, other in (
        (spec.part1, spec.b1, spec.v2),
        (spec.part2, spec.b2, spec.v1),
    ):
        adjacent = sum(comb(d, 2) for d in degrees)
        type1 += (comb(b, 2) - adjacent) * other
        type2 += adjacent * other * (other - 1)
    type3 = 2 * (spec.n - 4) * spec.b1 * spec.b2
    return BowtieTypes(type1=type1, type2=type2, type3=type3)


def f_value(spec: PartitionSpec) -> int:
    """Bowtie count of the complete bipartite graph with the given within-part degrees.

    ``f = 2(n-4) b1 b2 + sum_i [ sum_j C(d_ij, 2) v'(v' - 2) + C(b_i, 2) v' ]``
    with ``v' = v_{3-i}``. Exact whenever neither part contains a triangle.
    """
    n = spec.n
    total = 2 * (n - 4) * spec.b1 * spec.b2
    for degrees, b, other in (
        (spec.part1, spec.b1, spec.v2),
        (spec.part2, spec.b2, spec.v1),
    ):
        total += sum(comb(d, 2) for d in degrees) * other * (other - 2)
        total += comb(b, 2) * other
    return total


def count_formula_extremal(
    v1: int,
    v2: int,
    b1: int,
    b2: int,
    part1_degrees: list[int],
    part2_degrees: list[int],
) -> int:
    """Bowtie count of ``K(V1, V2)`` plus b1 and b2 triangle-free edges inside the parts.

    Same algebra as ``f_value``, stated in terms of the edge counts.
    """
    if len(part1_degrees) != v1 or len(part2_degrees) != v2:
        msg = "degree lists must have one entry per vertex of their part"
        raise PreconditionViolated(msg)
    if sum(part1_degrees) != 2 * b1 or sum(part2_degrees) != 2 * b2:
        msg = f"degree sums do not match b1={b1}, b2={b2}"
        raise PreconditionViolated(msg)
    return f_value(PartitionSpec(v1=v1, v2=v2, phi=(*part1_degrees, *part2_degrees)))


def asymptotic_h(params: FormulaParams) -> int:
    """Central value ``n/2 [C(e1,2) + C(e2,2) + m C(d+1,2) n/2 + (n-m) C(d,2) n/2 + 4 e1 e2]``.

    Evaluated as a fraction and rounded half up; the result is an integer
    without rounding whenever n is even.
    """
    n, d, m, e1, e2 = params.n, params.d, params.m, params.e1, params.e2
    half_n = Fraction(n, 2)
    bracket = (
        comb(e1, 2)
        + comb(e2, 2)
        + m * comb(d + 1, 2) * half_n
        + (n - m) * comb(d, 2) * half_n
        + 4 * e1 * e2
    )
    return round_half_up(half_n * bracket)


def balanced_structure(params: FormulaParams) -> PartitionSpec:
    """Balanced parts with e1 and e2 near-regular edges, the shape behind ``asymptotic_h``."""
    n = params.n
    return partition_spec((n + 1) // 2, n // 2, params.e1, params.e2)


def structured_h(params: FormulaParams) -> int:
    """Exact bowtie count of the structure ``asymptotic_h`` approximates."""
    return f_value(balanced_structure(params))


def asymptotic_correction(params: FormulaParams) -> int:
    """``asymptotic_h - structured_h`` when 4 divides n.

    The closed form counts ``2n`` instead of ``2(n - 4)`` bowties per
    cross pair and ``n^2/4`` instead of ``v (v - 2)`` per adjacent pair, which
    adds ``8 e1 e2 + n sum_v C(d_v, 2)``.
    """
    n, d, m = params.n, params.d, params.m
    return 8 * params.e1 * params.e2 + n * (m * comb(d + 1, 2) + (n - m) * comb(d, 2))


def round_half_up(value: Fraction) -> int:
    """Nearest integer, halves rounded up."""
    return floor(value + HALF)


def asymptotic_h_simple(n: int, q: int) -> int:
    """``floor(9 q^2 n / 8)``, the leading term once q is much larger than n."""
    return 9 * q * q * n // 8


def upper_bound_value(n: int, q: int) -> int:
    """``floor((q+1)^2 (13n/4 + 13))``, valid for ``q <= n^2 / 20``.

    Raises:
        RegimeViolated: q exceeds n^2/20.

    """
    if q < 0 or 20 * q > n * n:
        msg = f"q={q} is outside 0 <= q <= n^2/20 for n={n}"
        raise RegimeViolated(msg)
    return (q + 1) ** 2 * 13 * (n + 4) // 4
