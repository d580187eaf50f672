"""Trinomial coefficients and the column partial-sum triangle.

``T(n, k)`` is the coefficient of ``x**k`` in ``(1 + x + x**2)**n`` for
``0 <= k <= 2n``; ``S(n, k) = sum_j T(n - j, k - j)`` accumulates the entries
lying above ``T(n, k)`` in the same visual column of the centred triangle.
Both tables are built row by row from their additive recurrences and cached.
"""

from __future__ import annotations

import threading
from math import comb
from typing import NamedTuple


class _RowCache:
    """Append-only cache of triangle rows; each row is an immutable tuple."""

    def __init__(self, first_row, next_row):
        self._rows = [tuple(first_row)]
        self._next_row = next_row
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError(f"row index must be non-negative, got {n}")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    self._rows.append(tuple(self._next_row(len(self._rows), self._rows)))
        return self._rows[n]


def _next_trinomial_row(n: int, rows) -> list[int]:
    prev = rows[n - 1]

    def t(k):
        return prev[k] if 0 <= k <= 2 * (n - 1) else 0

    return [t(k - 2) + t(k - 1) + t(k) for k in range(2 * n + 1)]


_TRINOMIAL = _RowCache([1], _next_trinomial_row)


def _next_partial_row(n: int, rows) -> list[int]:
    prev = rows[n - 1]
    trow = _TRINOMIAL.row(n)
    out = [1]
    for k in range(1, 2 * n):
        above = prev[k - 1] if 0 <= k - 1 <= 2 * (n - 1) else 0
        out.append(above + trow[k])
    out.append(1)
    return out


_PARTIAL = _RowCache([1], _next_partial_row)


def trinomial(n: int, k: int) -> int:
    """T(n, k); zero for ``k`` outside ``0..2n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0 <= k <= 2 * n:
        return 0
    return _TRINOMIAL.row(n)[k]


def trinomial_row(n: int) -> tuple[int, ...]:
    return _TRINOMIAL.row(n)


def trinomial_via_binomials(n: int, i: int) -> int:
    """T(n, i) from the binomial double sum; independent of the row cache.

    Unlike :func:`trinomial` there is no zero convention here: an index
    outside ``0..2n`` is an error.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0 <= i <= 2 * n:
        raise ValueError(f"index {i} outside 0..{2 * n}")
    # terms with j < i - j or j > n vanish
    return sum(comb(n, j) * comb(j, i - j) for j in range((i + 1) // 2, min(i, n) + 1))


def partial_sum(n: int, k: int) -> int:
    """S(n, k); zero for ``k`` outside ``0..2n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0 <= k <= 2 * n:
        return 0
    return _PARTIAL.row(n)[k]


def partial_sum_row(n: int) -> tuple[int, ...]:
    return _PARTIAL.row(n)


class RowSums(NamedTuple):
    total: int
    alternating: int
    weighted: int
    alternating_weighted: int


def row_sums(n: int) -> RowSums:
    """The four sums of row ``n`` of S, by direct summation over ``k``."""
    row = partial_sum_row(n)
    total = alt = weighted = alt_weighted = 0
    for k, s in enumerate(row):
        sign = -1 if k & 1 else 1
        total += s
        alt += sign * s
        weighted += k * s
        alt_weighted += sign * k * s
    return RowSums(total, alt, weighted, alt_weighted)


def row_sums_closed_form(n: int) -> RowSums:
    """Closed forms for :func:`row_sums`."""
    half = (3 ** (n + 1) - 1) // 2
    odd = n % 2 == 1
    return RowSums(
        half,
        0 if odd else 1,
        n * half,
        0 if odd or n == 0 else n,
    )


class TrinomialTable:
    """Rows ``0..N`` of the trinomial triangle."""

    def __init__(self, N: int):
        self.N = N
        self.rows = tuple(trinomial_row(n) for n in range(N + 1))

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        return self.rows[n][k] if 0 <= k <= 2 * n else 0


class PartialSumTable:
    """Rows ``0..N`` of the partial-sum trinomial triangle."""

    def __init__(self, N: int):
        self.N = N
        self.rows = tuple(partial_sum_row(n) for n in range(N + 1))

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        return self.rows[n][k] if 0 <= k <= 2 * n else 0
