"""Acceptance gate: one test per criterion, all at exact tolerance.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary ends
with one PASS/FAIL line per criterion.
"""

import time

from trinomial import catalog, reference, symbolic
from trinomial import triangle as tri
from trinomial.exact_math import InexactDivisionError, UniPoly
from trinomial.ternary import (
    TernarySpec,
    char_poly,
    char_poly_transform,
    column_step,
    derive,
    derive_from,
    diagonal_fast,
    run_recurrence,
    sequence,
    sums_fast,
    transform_fast,
)
from trinomial.trinomial_core import partial_sum, partial_sum_row, row_sums, trinomial_row
from trinomial.verify import random_specs


def test_01_tables(criterion):
    bad = []
    for name, table in reference.TABLES.items():
        t = tri.build(catalog.get(name).generator, 9)
        for n, row in enumerate(table["rows"]):
            if [t[n, k] for k in range(n, 10)] != row:
                bad.append(f"{name} row {n}")
        if [tri.column_sum(t, n) for n in range(10)] != table["s"]:
            bad.append(f"{name} s")
        if [tri.alt_column_sum(t, n) for n in range(10)] != table["s_bar"]:
            bad.append(f"{name} s_bar")
    spot = (
        tri.column_sum(tri.build(catalog.fibonacci, 9), 9) == 1914660
        and tri.alt_column_sum(tri.build(catalog.tribonacci, 9), 9) == -1972637
        and tri.column_sum(tri.build(lambda k: k, 9), 9) == 265716
    )
    criterion(1, "reference tables for fibonacci, tribonacci, ones, naturals with s and s_bar rows", not bad and spot, ", ".join(bad))


def test_02_first_rows(criterion):
    ok = (
        [list(trinomial_row(n)) for n in range(7)] == reference.TRINOMIAL_ROWS
        and [list(partial_sum_row(n)) for n in range(7)] == reference.PARTIAL_SUM_ROWS
        and partial_sum(6, 4) == 134
    )
    criterion(2, "trinomial and partial-sum triangles, rows 0-6", ok)


def test_03_row_sum_identities(criterion):
    bad = []
    for n in range(201):
        half = (3 ** (n + 1) - 1) // 2
        odd = n % 2 == 1
        expected = (half, 0 if odd else 1, n * half, 0 if odd or n == 0 else n)
        if tuple(row_sums(n)) != expected:
            bad.append(n)
    criterion(3, "four partial-sum row identities, n = 0..200", not bad, f"rows {bad[:5]}" if bad else "")


def test_04_fast_paths_fuzz(criterion):
    start = time.perf_counter()
    bad = []
    for i, spec in enumerate(random_specs(200)):
        count = 41
        t = tri.build(sequence(spec), 43)
        ok = transform_fast(spec, count) == [t[n, n] for n in range(count)]
        for ell in range(4):
            ok = ok and diagonal_fast(spec, ell, count) == [t[n, n + ell] for n in range(count)]
        s, s_bar = sums_fast(spec, count)
        ok = ok and s == [sum(t[i, n] for i in range(n + 1)) for n in range(count)]
        ok = ok and s_bar == [sum((-1) ** i * t[i, n] for i in range(n + 1)) for n in range(count)]
        if not ok:
            bad.append(i)
    elapsed = time.perf_counter() - start
    criterion(
        4,
        "fast paths equal triangle construction on 200 random specs, n <= 40",
        not bad and elapsed < 30,
        f"{elapsed:.1f}s" + (f", failing {bad}" if bad else ""),
    )


def test_05_column_recurrence(criterion):
    failures = divisibility = 0
    for spec in random_specs(200):
        t = tri.build(sequence(spec), 20)
        d = derive(spec)
        for k in range(3, 21):
            for n in range(3, k + 1):
                try:
                    value = column_step(spec, (t[n - 1, k], t[n - 2, k], t[n - 3, k]), d)
                except InexactDivisionError:
                    divisibility += 1
                    continue
                failures += value != t[n, k]
    criterion(
        5,
        "column recurrence with exact division by gamma, 3 <= n <= k <= 20",
        failures == 0 and divisibility == 0,
        f"{failures} mismatches, {divisibility} divisibility failures",
    )


def test_06_resultant(criterion):
    bad = []
    for i, spec in enumerate(random_specs(100)):
        d = derive(spec)
        if char_poly_transform(char_poly(spec)) != UniPoly((-d.C, -d.B, -d.A, 1)):
            bad.append(i)
    golden = char_poly_transform(UniPoly((-1, -1, 1))) == UniPoly((4, -6, 1))
    criterion(6, "resultant root map matches (A, B, C); t^2-t-1 -> s^2-6s+4", not bad and golden)


def test_07_symbolic(criterion):
    proofs = [symbolic.verify_diagonal_base(ell) for ell in range(4)]
    proofs += [symbolic.verify_column_base(k) for k in range(3, 6)]
    proofs.append(symbolic.verify_sum_base())
    A, P, Q = symbolic.coeff_A(), symbolic.coeff_P(), symbolic.coeff_Q()
    perturbed = list(symbolic.sum6_coeffs())
    perturbed[0] = perturbed[0] + 1
    controls = [
        symbolic.verify_diagonal_base(0, A=A + 1),
        symbolic.verify_column_base(3, Q=Q + symbolic.GAMMA),
        symbolic.verify_column_base(4, P=P + 1),
        symbolic.verify_sum_base(perturbed),
    ]
    ok = all(p.holds for p in proofs) and not any(c.holds for c in controls)
    criterion(7, "symbolic base cases hold in Z[a,b,g,x,y,z]; perturbed controls fail", ok)


TABLE2_DIAGONAL = [0, 1, 7, 44, 274, 1705, 10609]


def _satisfies(seq, coeffs):
    r = len(coeffs)
    return all(seq[n] == sum(c * seq[n - 1 - i] for i, c in enumerate(coeffs)) for n in range(r, len(seq)))


def test_08_errata(criterion):
    d = derive_from(1, 1, 1)
    coeffs_ok = d.diagonal == (7, -5, 1)
    correct_holds = _satisfies(TABLE2_DIAGONAL, (7, -5, 1))
    printed_fails = not _satisfies(TABLE2_DIAGONAL, (6, -4, 1))

    s_bar = reference.TABLES["tribonacci"]["s_bar"]
    # alternating-sum recurrence with indices n-1 .. n-6
    alt_ok = run_recurrence(d.alt6, s_bar[:6], len(s_bar)) == s_bar
    # the printed variant: -6, 3, 12 at n-2, 13 at n-4, 6 at n-5, 1 at n-6
    def printed(n):
        return (-6 * s_bar[n - 1] + 3 * s_bar[n - 2] + 12 * s_bar[n - 2]
                + 13 * s_bar[n - 4] + 6 * s_bar[n - 5] + s_bar[n - 6])

    printed_alt_fails = any(printed(n) != s_bar[n] for n in range(6, len(s_bar)))
    ok = coeffs_ok and correct_holds and printed_fails and alt_ok and printed_alt_fails
    criterion(8, "tribonacci transform (7,-5,1) and alternating-sum indices n-3, n-4", ok)


def test_09_oeis(criterion):
    ids = ("A082761", "A192806", "A036290", "A003462", "A014983", "A002378")
    bad = [i for i in ids if catalog.fixture_values(i) != list(catalog.FIXTURES[i].terms)]
    criterion(9, "OEIS 10-term prefixes", not bad, ", ".join(bad))


def test_10_power_of_two_fibonacci(criterion):
    bad = []
    for k in range(13):
        for n in range(k + 1):
            if not catalog.fib_row_identity(n, k):
                bad.append(("row", n, k))
            if n >= 2 and catalog.fib_cross_identities(n, k) != (True, True):
                bad.append(("cross", n, k))
    criterion(10, "2^n-Fibonacci row and cross identities, n <= k <= 12", not bad, str(bad[:3]) if bad else "")


def test_alt6_vector_for_tribonacci():
    # the (1,1,1) alternating-sum vector has a nonzero n-3 term
    d = derive(TernarySpec(1, 1, 1, 0, 0, 1))
    assert d.alt6 == (-6, 3, 12, 13, 6, 1)
