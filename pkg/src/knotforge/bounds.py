"""Closed-form upper bounds on minimal lattice length, evaluated exactly."""
from __future__ import annotations

import decimal
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .grid import KnotMeta

SQRT_DIGITS = 12


class BoundDomainError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    """A theorem's closed form next to the integer its proof actually yields."""

    theorem_value: Fraction
    exact_value: int
    formula_tag: str
    inputs: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if not 0 <= self.exact_value <= self.theorem_value:
            raise AssertionError(
                f"{self.formula_tag}: exact {self.exact_value} vs theorem {self.theorem_value}"
            )


def max_axis_edges(levels: int) -> int:
    """Most edges along one axis of a properly leveled knot with ``levels`` levels."""
    if levels < 2:
        raise BoundDomainError("a properly leveled axis has at least 2 levels")
    return (levels * levels - 1) // 2 if levels % 2 else levels * levels // 2


def bound_from_sticks(nx: int, ny: int, nz: int) -> int:
    """Edge bound for per-axis level counts (equal to stick counts when properly leveled)."""
    return max_axis_edges(nx) + max_axis_edges(ny) + max_axis_edges(nz)


def bound_general(c: int) -> BoundReport:
    if c < 3:
        raise BoundDomainError("crossing number of a nontrivial knot is at least 3")
    theorem = Fraction(3, 2) * c * c + 2 * c + Fraction(1, 2)
    exact = (3 * c * c + 4 * c + (1 if c % 2 else 0)) // 2
    note = "formula only: the theorem excludes the trefoil" if c == 3 else ""
    return BoundReport(theorem, exact, "general", {"c": c}, note)


def bound_nonalt_prime(c: int) -> BoundReport:
    if c < 8:
        raise BoundDomainError("non-alternating prime knots have crossing number >= 8")
    theorem = Fraction(3, 2) * c * c - 4 * c + Fraction(5, 2)
    exact = bound_from_sticks(c - 2, c - 1, c - 1)
    return BoundReport(theorem, exact, "nonalternating_prime", {"c": c})


def bound_torus(n: int) -> BoundReport:
    """Bound for the (n+1, n)-torus knot, where c = n^2 - 1 and a = 2n + 1."""
    if n == 2:
        raise BoundDomainError("the theorem excludes the trefoil 3_1 = (3,2)-torus knot")
    if n < 2:
        raise BoundDomainError("torus parameter must be >= 3")
    c = n * n - 1
    a = 2 * n + 1
    theorem = Fraction(6 * c + 2 * math.isqrt(c + 1) + 6)
    exact = bound_from_sticks(a - 1, a - 1, a)
    return BoundReport(theorem, exact, "torus", {"n": n, "c": c, "a": a})


def arc_index_upper(meta: KnotMeta) -> int:
    if meta.knot_class == "torus":
        return 2 * meta.torus_n + 1
    if meta.knot_class == "nonalternating_prime":
        return meta.crossing_number
    return meta.crossing_number + 2


def class_bound(meta: KnotMeta) -> BoundReport:
    """The sharpest applicable bound for the knot described by ``meta``.

    The trefoil is outside the theorem; it gets the budget of the
    two-stick end reduction on its 5-arc presentation instead.
    """
    if meta.knot_class == "torus":
        if meta.torus_n == 2:
            a = 5
            value = bound_from_sticks(a - 1, a - 1, a)
            return BoundReport(
                Fraction(value), value, "end_reduction", {"a": a},
                "trefoil: theorem does not apply, end-reduced stick budget used",
            )
        return bound_torus(meta.torus_n)
    if meta.knot_class == "nonalternating_prime":
        return bound_nonalt_prime(meta.crossing_number)
    return bound_general(meta.crossing_number)


def _sqrt(c: int) -> Fraction:
    r = math.isqrt(c)
    if r * r == c:
        return Fraction(r)
    with decimal.localcontext() as ctx:
        ctx.prec = SQRT_DIGITS
        return Fraction(decimal.Decimal(c).sqrt())


def ropelength_bounds(c: int) -> tuple[Fraction, Fraction]:
    """The two published ropelength upper bounds, evaluated at crossing number ``c``.

    The second one is exact when ``c`` is a perfect square; otherwise the
    square root is rounded to 12 significant digits.
    """
    if c < 0:
        raise BoundDomainError("crossing number must be non-negative")
    first = Fraction("1.64") * c * c + Fraction("7.69") * c + Fraction("6.74")
    root = _sqrt(c)
    second = 272 * c * root + 168 * c + 44 * root + 22
    return first, second
