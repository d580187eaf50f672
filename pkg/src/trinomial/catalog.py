"""Named base sequences with their ternary embeddings, closed forms and OEIS
prefixes, plus the identities specific to each example triangle."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import triangle as tri
from .ternary import TernarySpec, run_recurrence
from .trinomial_core import RowSums, partial_sum, row_sums, trinomial_row


class UnknownSequenceError(KeyError):
    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class ClosedForms:
    transform: Callable[[int], int]
    s: Callable[[int], int]
    s_bar: Callable[[int], int]


@dataclass(frozen=True)
class OeisFixture:
    """First ten terms of an OEIS entry, starting at ``offset``.

    ``role`` says which computed sequence the terms are compared with.
    """

    oeis_id: str
    role: str
    offset: int
    terms: tuple[int, ...]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    generator: Callable[[int], int]
    ternary_embedding: Optional[TernarySpec] = None
    closed_forms: Optional[ClosedForms] = None
    oeis_refs: tuple[OeisFixture, ...] = field(default_factory=tuple)


@lru_cache(maxsize=None)
def fibonacci(k: int) -> int:
    if k < 0:
        return 0
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def tribonacci(k: int) -> int:
    if k < 0:
        return 0
    a, b, c = 0, 0, 1
    for _ in range(k):
        a, b, c = b, c, a + b + c
    return a


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _fx(oeis_id, role, offset, *terms):
    return OeisFixture(oeis_id, role, offset, tuple(terms))


# Decimal literals computed once from the trinomial double sum and closed
# forms; prefixes agree with the values quoted alongside each OEIS id.
FIXTURES = {
    "A000045": _fx("A000045", "base", 0, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34),
    "A000073": _fx("A000073", "base", 0, 0, 0, 1, 1, 2, 4, 7, 13, 24, 44),
    "A000012": _fx("A000012", "base", 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    "A001477": _fx("A001477", "base", 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9),
    "A033999": _fx("A033999", "base", 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1),
    "A038608": _fx("A038608", "base", 0, 0, -1, 2, -3, 4, -5, 6, -7, 8, -9),
    "A082761": _fx("A082761", "diagonal 1", 0, 1, 4, 20, 104, 544, 2848, 14912, 78080, 408832, 2140672),
    "A192806": _fx("A192806", "diagonal 2 with leading 1", 0, 1, 1, 4, 24, 149, 927, 5768, 35890, 223317, 1389537),
    "A000244": _fx("A000244", "transform", 0, 1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683),
    "A036290": _fx("A036290", "transform", 0, 0, 3, 18, 81, 324, 1215, 4374, 15309, 52488, 177147),
    "A003462": _fx("A003462", "s", 1, 0, 1, 4, 13, 40, 121, 364, 1093, 3280, 9841),
    "A014983": _fx("A014983", "s_bar", 1, 0, 1, -2, 7, -20, 61, -182, 547, -1640, 4921),
    "A002378": _fx("A002378", "(-1)^n s_bar", 0, 0, 2, 6, 12, 20, 30, 42, 56, 72, 90),
    "A027907": _fx("A027907", "trinomial rows", 0, 1, 1, 1, 1, 1, 2, 3, 2, 1, 1),
    "A097893": _fx("A097893", "S(n, n)", 0, 1, 2, 5, 12, 31, 82, 223, 616, 1723, 4862),
    "A097861": _fx("A097861", "S(n+1, n)", 0, 1, 3, 9, 25, 70, 196, 553, 1569, 4476, 12826),
    "A097894": _fx("A097894", "S(n+2, n)", 0, 1, 4, 14, 44, 134, 400, 1184, 3488, 10253, 30108),
}

_ENTRIES = {
    "fibonacci": CatalogEntry(
        "fibonacci",
        fibonacci,
        TernarySpec(2, 0, -1, 0, 1, 1),
        oeis_refs=(FIXTURES["A000045"], FIXTURES["A082761"]),
    ),
    "tribonacci": CatalogEntry(
        "tribonacci",
        tribonacci,
        TernarySpec(1, 1, 1, 0, 0, 1),
        oeis_refs=(FIXTURES["A000073"], FIXTURES["A192806"]),
    ),
    "ones": CatalogEntry(
        "ones",
        lambda k: 1,
        TernarySpec(1, 1, -1, 1, 1, 1),
        ClosedForms(
            transform=lambda n: 3**n,
            s=lambda n: (3 ** (n + 1) - 1) // 2,
            s_bar=lambda n: (3 * (-3) ** n + 1) // 4,
        ),
        (FIXTURES["A000012"], FIXTURES["A000244"], FIXTURES["A003462"], FIXTURES["A014983"]),
    ),
    "naturals": CatalogEntry(
        "naturals",
        lambda k: k,
        TernarySpec(3, -3, 1, 0, 1, 2),
        ClosedForms(
            transform=lambda n: n * 3**n,
            s=lambda n: n * (3 ** (n + 1) - 1) // 2,
            s_bar=lambda n: n * (3 * (-3) ** n + 1) // 4,
        ),
        (FIXTURES["A001477"], FIXTURES["A036290"]),
    ),
    "alt_sign": CatalogEntry(
        "alt_sign",
        _sign,
        TernarySpec(-1, -1, -1, 1, -1, 1),
        ClosedForms(
            transform=lambda n: 1,
            s=lambda n: 0 if n % 2 else 1,
            s_bar=lambda n: _sign(n) * (n + 1),
        ),
        (FIXTURES["A033999"],),
    ),
    "alt_sign_naturals": CatalogEntry(
        "alt_sign_naturals",
        lambda k: _sign(k) * k,
        TernarySpec(-3, -3, -1, 0, -1, 2),
        ClosedForms(
            transform=lambda n: n,
            s=lambda n: 0 if n % 2 or n == 0 else n,
            s_bar=lambda n: _sign(n) * (n * n + n),
        ),
        (FIXTURES["A038608"], FIXTURES["A002378"]),
    ),
}

NAMES = tuple(_ENTRIES)


def get(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownSequenceError(
            f"unknown sequence {name!r}; available: {', '.join(NAMES)}"
        ) from None


@lru_cache(maxsize=32)
def triangle_for(name: str, K: int) -> tri.TransformTriangle:
    """Cached triangle for a catalog sequence."""
    return tri.build(get(name).generator, K)


def i_fibonacci(i: int, j: int) -> int:
    """The i-Fibonacci number with initials 0, i, which is ``i * F_j``."""
    return i * fibonacci(j)


def fib_row_identity(n: int, k: int) -> bool:
    """Fibonacci triangle entry (n, k) equals ``2**n * F_{k+n}``."""
    if not 0 <= n <= k:
        raise tri.TriangleRangeError(f"need 0 <= n <= k, got ({n}, {k})")
    t = triangle_for("fibonacci", k)
    return t.entry(n, k) == i_fibonacci(2**n, k + n)


def fib_cross_identities(n: int, k: int) -> tuple[bool, bool]:
    """The two three-term relations among 2^n-Fibonacci numbers."""
    if not 2 <= n <= k:
        raise tri.TriangleRangeError(f"need 2 <= n <= k, got ({n}, {k})")
    lhs = i_fibonacci(2**n, k + n)
    first = 2 * i_fibonacci(2 ** (n - 1), k + n - 1) + 4 * i_fibonacci(2 ** (n - 2), k + n - 2)
    second = 6 * i_fibonacci(2 ** (n - 1), k + n - 2) - 4 * i_fibonacci(2 ** (n - 2), k + n - 4)
    return lhs == first, lhs == second


FIB_REDUCED_S = (7, -9, -2, 4)
FIB_REDUCED_S_BAR = (-5, 3, 10, 4)


def fib_reduced_sum_check(count: int) -> tuple[bool, bool]:
    """Fibonacci column sums against their fourth-order recurrences."""
    t = triangle_for("fibonacci", count - 1)
    s, s_bar = tri.column_sums(t)
    return (
        run_recurrence(FIB_REDUCED_S, s[:4], count) == s,
        run_recurrence(FIB_REDUCED_S_BAR, s_bar[:4], count) == s_bar,
    )


def tribonacci_shift_identity(n: int, k: int) -> bool:
    """Tribonacci triangle entry (n, k) equals ``t_{k+2n}``."""
    if not 0 <= n <= k:
        raise tri.TriangleRangeError(f"need 0 <= n <= k, got ({n}, {k})")
    t = triangle_for("tribonacci", k)
    return t.entry(n, k) == tribonacci(k + 2 * n)


def closed_form_checks(name: str, n: int) -> bool:
    """Closed forms for the transform, s and s_bar agree with the triangle."""
    entry = get(name)
    if entry.closed_forms is None:
        raise ValueError(f"{name} has no closed forms")
    cf = entry.closed_forms
    t = triangle_for(name, n)
    return (
        tri.transform(t, n + 1)[n] == cf.transform(n)
        and tri.column_sum(t, n) == cf.s(n)
        and tri.alt_column_sum(t, n) == cf.s_bar(n)
    )


def row_sum_quadruple(n: int) -> RowSums:
    """The four partial-sum row sums read off as column sums of the ones,
    alt_sign, naturals and alt_sign_naturals triangles."""
    return RowSums(*(
        tri.column_sum_via_S(triangle_for(name, n), n)
        for name in ("ones", "alt_sign", "naturals", "alt_sign_naturals")
    ))


def theorem1_via_catalog(n: int) -> bool:
    return row_sums(n) == row_sum_quadruple(n)


def fixture_values(oeis_id: str) -> list[int]:
    """The artifact's own values for a fixture, aligned with its offset."""
    fx = FIXTURES[oeis_id]
    count = len(fx.terms)
    if fx.role == "base":
        name = next(e.name for e in _ENTRIES.values() if fx in e.oeis_refs)
        return [get(name).generator(k) for k in range(count)]
    if oeis_id == "A082761":
        return tri.diagonal(triangle_for("fibonacci", count), 1, count)
    if oeis_id == "A192806":
        return [1] + tri.diagonal(triangle_for("tribonacci", count), 2, count - 1)
    if oeis_id == "A000244":
        return tri.transform(triangle_for("ones", count), count)
    if oeis_id == "A036290":
        return tri.transform(triangle_for("naturals", count), count)
    if oeis_id in ("A003462", "A014983"):
        t = triangle_for("ones", count)
        fn = tri.column_sum if oeis_id == "A003462" else tri.alt_column_sum
        # term 0 of the OEIS entry is the empty column sum
        return [0] + [fn(t, n) for n in range(count - 1)]
    if oeis_id == "A002378":
        t = triangle_for("alt_sign_naturals", count)
        return [_sign(n) * tri.alt_column_sum(t, n) for n in range(count)]
    if oeis_id == "A027907":
        flat = [v for n in range(4) for v in trinomial_row(n)]
        return flat[:count]
    if oeis_id in ("A097893", "A097861", "A097894"):
        shift = {"A097893": 0, "A097861": 1, "A097894": 2}[oeis_id]
        return [partial_sum(n + shift, n) for n in range(count)]
    raise KeyError(oeis_id)
