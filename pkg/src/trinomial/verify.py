"""Verification suites run by ``trinomial verify``.

Each suite yields :class:`Check` records in a fixed order so reports are
byte-identical between runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import catalog, reference, symbolic
from . import triangle as tri
from .exact_math import InexactDivisionError, UniPoly
from .ternary import (
    TernarySpec,
    char_poly,
    char_poly_transform,
    column_step,
    derive,
    diagonal_fast,
    sequence,
    sums_fast,
    transform_fast,
)
from .trinomial_core import partial_sum_row, trinomial_row


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "HOLDS" if self.ok else "FAILS"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


FUZZ_SEED = 20240601


def random_specs(count: int, seed: int = FUZZ_SEED, bound: int = 5) -> list[TernarySpec]:
    """Deterministic pseudo-random specs with entries in ``[-bound, bound]``."""
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        a, b, g, x, y, z = (rng.randint(-bound, bound) for _ in range(6))
        if g == 0 or x == y == z == 0:
            continue
        specs.append(TernarySpec(a, b, g, x, y, z))
    return specs


def fast_paths_agree(spec: TernarySpec, N: int = 40) -> bool:
    """transform, diagonals 0..3 and column sums: fast path vs construction."""
    count = N + 1
    t = tri.build(sequence(spec), N + 3)
    if transform_fast(spec, count) != tri.transform(t, count):
        return False
    for ell in range(4):
        if diagonal_fast(spec, ell, count) != tri.diagonal(t, ell, count):
            return False
    s, s_bar = sums_fast(spec, count)
    return s == [tri.column_sum(t, n) for n in range(count)] and s_bar == [
        tri.alt_column_sum(t, n) for n in range(count)
    ]


def column_recurrence_holds(spec: TernarySpec, K: int = 20) -> bool:
    """Every entry with 3 <= n <= k <= K from its three column predecessors."""
    t = tri.build(sequence(spec), K)
    d = derive(spec)
    try:
        for k in range(3, K + 1):
            for n in range(3, k + 1):
                prev = (t[n - 1, k], t[n - 2, k], t[n - 3, k])
                if column_step(spec, prev, d) != t[n, k]:
                    return False
    except InexactDivisionError:
        return False
    return True


def resultant_matches(spec: TernarySpec) -> bool:
    d = derive(spec)
    expected = UniPoly((-d.C, -d.B, -d.A, 1))
    return char_poly_transform(char_poly(spec)) == expected


def suite_symbolic() -> Iterator[Check]:
    for r in symbolic.base_case_suite():
        yield Check(r.name, r.holds)
    for r in symbolic.negative_controls():
        yield Check(f"negative control rejected: {r.name} with perturbed coefficient", not r.holds)


def suite_fuzz(cases: int = 200) -> Iterator[Check]:
    specs = random_specs(cases)
    bad = [i for i, s in enumerate(specs) if not fast_paths_agree(s)]
    yield Check(f"fast paths match construction on {cases} random specs, n <= 40", not bad,
                f"failing cases {bad}" if bad else "")
    bad = [i for i, s in enumerate(specs) if not column_recurrence_holds(s)]
    yield Check(f"column recurrence with exact division on {cases} random specs, k <= 20", not bad,
                f"failing cases {bad}" if bad else "")
    bad = [i for i, s in enumerate(specs[:100]) if not resultant_matches(s)]
    yield Check("resultant gives s^3 - A s^2 - B s - C on 100 random specs", not bad,
                f"failing cases {bad}" if bad else "")
    yield Check("root map of t^2 - t - 1 is s^2 - 6s + 4",
                char_poly_transform(UniPoly((-1, -1, 1))) == UniPoly((4, -6, 1)))


def suite_tables() -> Iterator[Check]:
    for name, table in reference.TABLES.items():
        t = catalog.triangle_for(name, 9)
        rows_ok = all(list(t.row(n)) == table["rows"][n] for n in range(10))
        s, s_bar = tri.column_sums(t)
        yield Check(f"table {name}: entries", rows_ok)
        yield Check(f"table {name}: s row", s == table["s"])
        yield Check(f"table {name}: s_bar row", s_bar == table["s_bar"])
    yield Check("trinomial triangle rows 0-6",
                [list(trinomial_row(n)) for n in range(7)] == reference.TRINOMIAL_ROWS)
    yield Check("partial-sum triangle rows 0-6",
                [list(partial_sum_row(n)) for n in range(7)] == reference.PARTIAL_SUM_ROWS)


def suite_oeis() -> Iterator[Check]:
    for oeis_id, fx in catalog.FIXTURES.items():
        yield Check(f"{oeis_id} ({fx.role})", catalog.fixture_values(oeis_id) == list(fx.terms))


def suite_explore() -> Iterator[Check]:
    """Row-anchored partial column sums under the i=j..n reading.

    Informational: the report counts agreements, and a disagreement is not a
    failure of the suite.
    """
    agree = total = 0
    for name in catalog.NAMES:
        t = catalog.triangle_for(name, 12)
        for k in range(12):
            for n in range(k + 1):
                if k + n > 24:
                    continue
                for j in range(n + 1):
                    lhs, rhs = tri.offset_partial_sum_sides(t, n, j, k)
                    total += 1
                    agree += lhs == rhs
    yield Check("offset partial column sums (exploratory)", True, f"{agree}/{total} positions agree")


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "symbolic": suite_symbolic,
    "fuzz": suite_fuzz,
    "tables": suite_tables,
    "oeis": suite_oeis,
    "explore": suite_explore,
}

ALL_SUITES = ("tables", "oeis", "symbolic", "fuzz")


def run(suite: str) -> list[Check]:
    names = ALL_SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        out.extend(SUITES[name]())
    return out
