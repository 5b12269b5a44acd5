"""Counting non-crossing valence diagrams.

Three independent routes are provided: a 2x2 determinant of binomial
coefficients, a factored product formula valid for n >= 3, and a
branching recurrence over per-vertex bond counts.  All arithmetic is
exact; Python integers never overflow.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, Sequence


def binomial(k: int, l: int) -> int:
    """Exact C(k, l); zero when l > k."""
    if k < 0 or l < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({k},{l})")
    return math.comb(k, l)


def even_triangle(a: int, b: int, c: int) -> bool:
    """True iff a, b, c satisfy all triangle inequalities and a+b+c is even."""
    if a < 0 or b < 0 or c < 0:
        raise ValueError(f"triangle sides must be nonnegative, got ({a},{b},{c})")
    return a <= b + c and b <= a + c and c <= a + b and (a + b + c) % 2 == 0


def triangle_range(a: int, b: int) -> range:
    """All c with even_triangle(a, b, c), descending from a+b to |a-b|."""
    return range(a + b, abs(a - b) - 1, -2)


@lru_cache(maxsize=None)
def _count_for_valences(d: tuple[int, ...]) -> int:
    if len(d) == 1:
        return 1 if d[0] == 0 else 0
    a, b = d[-2], d[-1]
    return sum(_count_for_valences(d[:-2] + (mu,)) for mu in triangle_range(a, b))


def n_recurrence(degrees: Sequence[int]) -> int:
    """Number of non-crossing multigraphs with the prescribed vertex degrees.

    Computed by collapsing the last two degrees into a single one ranging
    over all even-triangle-compatible values, down to the one-vertex base
    case.  Memoized on the whole remaining tuple.
    """
    d = tuple(int(x) for x in degrees)
    if not d:
        raise ValueError("degree tuple must be non-empty")
    if any(x < 0 for x in d):
        raise ValueError(f"degrees must be nonnegative, got {d}")
    return _count_for_valences(d)


def rho_closed(n: int, m: int) -> int:
    """Count of non-crossing diagrams with m bonds on n vertices.

    Determinant of binomials; evaluates to 1 at m = 0 for every n.  The
    degenerate n = 1 case is 1 for m = 0 and 0 otherwise.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if m < 0:
        raise ValueError(f"bond count must be nonnegative, got m={m}")
    if n == 1:
        return 1 if m == 0 else 0
    return binomial(m + n - 1, n - 1) * binomial(m + n - 2, n - 2) - binomial(
        m + n - 2, n - 1
    ) * binomial(m + n - 1, n - 2)


def rho_product(n: int, m: int) -> int:
    """Product form of the diagram count, defined for n >= 3.

    The numerator is assembled first and divided once at the end; the
    division is asserted exact so a transcription bug cannot hide.
    """
    if n < 3:
        raise ValueError(f"product formula requires n >= 3, got n={n}")
    if m < 0:
        raise ValueError(f"bond count must be nonnegative, got m={m}")
    numerator = (m + 1) * (m + n - 1)
    for i in range(2, n - 1):
        numerator *= (m + i) ** 2
    denominator = math.factorial(n - 1) * math.factorial(n - 2)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"product formula numerator {numerator} not divisible by {denominator}"
        )
    return quotient


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of `parts` nonnegative integers summing to `total`,
    in lexicographic order, each exactly once."""
    if parts < 1:
        raise ValueError(f"need at least one part, got {parts}")
    if total < 0:
        raise ValueError(f"total must be nonnegative, got {total}")
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def rho_sum_over_compositions(n: int, m: int) -> int:
    """Diagram count as the recurrence summed over all degree prescriptions."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if m < 0:
        raise ValueError(f"bond count must be nonnegative, got m={m}")
    return sum(n_recurrence(d) for d in compositions(2 * m, n))
