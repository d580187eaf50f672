"""The trinomial transform triangle over an arbitrary commutative ring.

Row 0 holds a base sequence; every deeper entry is the sum of the three
entries directly above it::

    a[n][k] = a[n-1][k-1] + a[n-1][k] + a[n-1][k+1]

Scalars only need ``+``, unary ``-``, ``*`` (including by a Python ``int``)
and ``==``, so the same code serves plain integers and symbolic polynomials.
"""

from __future__ import annotations

from functools import reduce
from operator import add
from typing import Callable, Generic, Iterator, Protocol, Sequence, TypeVar

from .trinomial_core import partial_sum, trinomial


class Ring(Protocol):
    """Minimal commutative-ring surface the triangle engine relies on."""

    def __add__(self, other): ...
    def __neg__(self): ...
    def __mul__(self, other): ...
    def __eq__(self, other) -> bool: ...


R = TypeVar("R")

SequenceGenerator = Callable[[int], R]


class TriangleRangeError(IndexError):
    """Requested entry lies outside the computed part of the triangle."""


def _sum(values):
    return reduce(add, values)


class TransformTriangle(Generic[R]):
    """Triangle with columns ``0..K``, built from ``base(0..2K)``.

    Entry ``(n, k)`` depends on base terms ``k-n..k+n``, so the builder asks
    for base indices through ``2K`` up front.  The rows are stored as a
    diamond: row ``n`` keeps columns ``n..2K-n``, everything computable from
    those base terms.  The public table is ``0 <= n <= k <= K``; entries with
    ``K < k <= 2K - n`` are available through :meth:`entry` as well.
    """

    def __init__(self, base: Sequence[R], K: int):
        self.K = K
        self.base = tuple(base)
        if len(self.base) != 2 * K + 1:
            raise ValueError(f"need {2 * K + 1} base terms, got {len(self.base)}")
        rows = [self.base]
        for n in range(1, K + 1):
            prev = rows[-1]
            # prev covers columns n-1..2K-n+1; new row covers n..2K-n
            rows.append(tuple(prev[j] + prev[j + 1] + prev[j + 2] for j in range(2 * (K - n) + 1)))
        self._rows = tuple(rows)

    def entry(self, n: int, k: int) -> R:
        if not 0 <= n <= k <= 2 * self.K - n:
            raise TriangleRangeError(f"entry ({n}, {k}) outside triangle with K={self.K}")
        return self._rows[n][k - n]

    def __getitem__(self, nk: tuple[int, int]) -> R:
        return self.entry(*nk)

    def row(self, n: int, stop: int | None = None) -> tuple[R, ...]:
        """Entries ``(n, n..stop)``; ``stop`` defaults to ``K``."""
        stop = self.K if stop is None else stop
        if not 0 <= n <= self.K or stop > 2 * self.K - n:
            raise TriangleRangeError(f"row {n} up to column {stop} outside K={self.K}")
        return self._rows[n][: stop - n + 1]

    def column(self, k: int) -> tuple[R, ...]:
        """Entries ``(0..min(k, 2K-k), k)``."""
        if not 0 <= k <= 2 * self.K:
            raise TriangleRangeError(f"column {k} outside K={self.K}")
        return tuple(self._rows[i][k - i] for i in range(min(k, 2 * self.K - k) + 1))

    def __iter__(self) -> Iterator[tuple[R, ...]]:
        return (self.row(n) for n in range(self.K + 1))


def build(base: SequenceGenerator, K: int) -> TransformTriangle:
    """Build the triangle with max column ``K`` from a sequence generator."""
    if K < 0:
        raise ValueError("K must be non-negative")
    return TransformTriangle([base(i) for i in range(2 * K + 1)], K)


def entry_direct(t: TransformTriangle, n: int, k: int):
    """Entry ``(n, k)`` as a trinomial-weighted sum of base terms."""
    if not 0 <= n <= k or k + n > 2 * t.K:
        raise TriangleRangeError(f"entry ({n}, {k}) needs base index {k + n} > {2 * t.K}")
    return _sum(trinomial(n, i - k + n) * t.base[i] for i in range(k - n, k + n + 1))


def diagonal(t: TransformTriangle, ell: int, count: int) -> list:
    """``(a[n][n+ell])`` for ``n = 0..count-1``."""
    if ell < 0:
        raise ValueError("diagonal offset must be non-negative")
    if count < 0 or count - 1 + ell > t.K:
        raise TriangleRangeError(f"diagonal {ell} with {count} terms exceeds K={t.K}")
    return [t.entry(n, n + ell) for n in range(count)]


def transform(t: TransformTriangle, count: int) -> list:
    """Trinomial transform of the base: the main diagonal."""
    return diagonal(t, 0, count)


def trinomial_transform(seq: Sequence) -> list:
    """Trinomial transform ``b[n] = sum_i T(n, i) a[i]`` straight from its
    definition; uses the first ``(len(seq) + 1) // 2`` rows it can fill."""
    count = (len(seq) + 1) // 2
    return [_sum(trinomial(n, i) * seq[i] for i in range(2 * n + 1)) for n in range(count)]


def _check_column(t: TransformTriangle, n: int):
    if not 0 <= n <= t.K:
        raise TriangleRangeError(f"column {n} outside K={t.K}")


def column_sum(t: TransformTriangle, n: int):
    _check_column(t, n)
    return _sum(t.entry(i, n) for i in range(n + 1))


def alt_column_sum(t: TransformTriangle, n: int):
    _check_column(t, n)
    return _sum(t.entry(i, n) if i % 2 == 0 else -t.entry(i, n) for i in range(n + 1))


def column_sums(t: TransformTriangle) -> tuple[list, list]:
    """``(s, s_bar)`` for every column ``0..K``."""
    return (
        [column_sum(t, n) for n in range(t.K + 1)],
        [alt_column_sum(t, n) for n in range(t.K + 1)],
    )


def column_sum_via_S(t: TransformTriangle, n: int):
    """Column sum from the partial-sum triangle and the base alone."""
    _check_column(t, n)
    return _sum(partial_sum(n, ell) * t.base[ell] for ell in range(2 * n + 1))


class InvariantError(AssertionError):
    """An identity that must hold by construction failed."""


def partial_column_sum(t: TransformTriangle, n: int, k: int):
    """``sum_{i<=n} a[i][k]`` for ``n <= k``, checked against its S-weighted
    expression in base terms ``k-n..k+n``."""
    if not 0 <= n <= k or k + n > 2 * t.K:
        raise TriangleRangeError(f"partial column sum ({n}, {k}) outside K={t.K}")
    direct = _sum(t.entry(i, k) for i in range(n + 1))
    weighted = _sum(partial_sum(n, ell - k + n) * t.base[ell] for ell in range(k - n, k + n + 1))
    if direct != weighted:
        raise InvariantError(f"partial column sum mismatch at ({n}, {k})")
    return direct


def offset_partial_sum_sides(t: TransformTriangle, n: int, j: int, k: int):
    """Both sides of the row-``j``-anchored partial column sum identity,
    read as ``sum_{i=j}^{n} a[i][k]`` against the S-weighted row-``j`` terms.

    Exploratory only: the intended index range of this identity is not
    settled, so callers compare the two values themselves.
    """
    if not 0 <= j <= n <= k or k + n > 2 * t.K:
        raise TriangleRangeError(f"offset sum ({n}, {j}, {k}) outside K={t.K}")
    lhs = _sum(t.entry(i, k) for i in range(j, n + 1))
    rhs = _sum(
        partial_sum(n - j, ell - k + n - j) * t.entry(j, ell)
        for ell in range(k - n + j, k + n - j + 1)
    )
    return lhs, rhs
