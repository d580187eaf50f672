import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trinomial import triangle as tri
from trinomial.catalog import fibonacci, tribonacci
from trinomial.symbolic import mp_eval, symbolic_triangle
from trinomial.ternary import LinearRecurrence
from trinomial.trinomial_core import trinomial_via_binomials

FIB = tri.build(fibonacci, 12)
TRIB = tri.build(tribonacci, 12)
ONES = tri.build(lambda k: 1, 12)
NAT = tri.build(lambda k: k, 12)


def test_build_examples():
    assert FIB[2, 3] == 20
    assert TRIB[4, 6] == 927
    assert all(FIB[0, k] == fibonacci(k) for k in range(25))


def test_build_reads_exactly_2K_plus_1_terms():
    seen = []
    tri.build(lambda k: seen.append(k) or k, 5)
    assert seen == list(range(11))


def test_generator_failure_propagates():
    def bad(k):
        if k == 4:
            raise RuntimeError("boom")
        return k

    with pytest.raises(RuntimeError):
        tri.build(bad, 3)


def test_entry_range():
    with pytest.raises(tri.TriangleRangeError):
        FIB.entry(3, 2)
    with pytest.raises(tri.TriangleRangeError):
        FIB.entry(5, 20)


def test_construction_rule():
    for t in (FIB, TRIB, NAT):
        for n in range(1, 12):
            for k in range(n, 2 * 12 - n + 1):
                assert t[n, k] == t[n - 1, k - 1] + t[n - 1, k] + t[n - 1, k + 1]


@pytest.mark.parametrize("t, n, k, v", [(FIB, 1, 1, 2), (ONES, 5, 7, 3**5), (NAT, 0, 6, 6)])
def test_entry_direct(t, n, k, v):
    assert tri.entry_direct(t, n, k) == v


def test_entry_direct_everywhere():
    for t in (FIB, TRIB, ONES, NAT):
        for n in range(13):
            for k in range(n, 2 * 12 - n + 1):
                assert tri.entry_direct(t, n, k) == t[n, k]


def test_entry_direct_range():
    with pytest.raises(tri.TriangleRangeError):
        tri.entry_direct(FIB, 7, 18)


def test_diagonals():
    assert tri.diagonal(FIB, 0, 5) == [0, 2, 12, 64, 336]
    assert tri.diagonal(FIB, 1, 4) == [1, 4, 20, 104]
    assert tri.diagonal(TRIB, 2, 5) == [1, 4, 24, 149, 927]
    with pytest.raises(tri.TriangleRangeError):
        tri.diagonal(FIB, 3, 11)


def test_transform():
    assert tri.transform(TRIB, 9) == [0, 1, 7, 44, 274, 1705, 10609, 66012, 410744]
    assert tri.transform(ONES, 5) == [1, 3, 9, 27, 81]
    assert tri.transform(NAT, 4) == [0, 3, 18, 81]


def test_transform_matches_definition():
    for base in (fibonacci, tribonacci, lambda k: k * k - 3):
        seq = [base(i) for i in range(25)]
        t = tri.build(base, 12)
        assert tri.transform(t, 13) == tri.trinomial_transform(seq)
        by_oracle = [
            sum(trinomial_via_binomials(n, i) * seq[i] for i in range(2 * n + 1)) for n in range(13)
        ]
        assert by_oracle == tri.transform(t, 13)


def test_column_sums():
    assert tri.column_sum(FIB, 3) == 92
    assert tri.alt_column_sum(TRIB, 5) == -1315
    assert tri.column_sum(ONES, 4) == 121
    with pytest.raises(tri.TriangleRangeError):
        tri.column_sum(FIB, 13)


def test_column_sum_via_S():
    assert tri.column_sum_via_S(FIB, 2) == 17
    assert tri.column_sum_via_S(FIB, 0) == FIB[0, 0]
    assert tri.column_sum_via_S(TRIB, 3) == 62
    for t in (FIB, TRIB, ONES, NAT):
        for n in range(13):
            assert tri.column_sum_via_S(t, n) == tri.column_sum(t, n)


def test_partial_column_sum():
    assert tri.partial_column_sum(FIB, 1, 2) == 5
    assert tri.partial_column_sum(FIB, 0, 7) == FIB[0, 7]
    assert tri.partial_column_sum(TRIB, 2, 4) == 2 + 7 + 24
    for t in (FIB, TRIB, NAT):
        for k in range(25):
            for n in range(min(k, 24 - k) + 1):
                tri.partial_column_sum(t, n, k)


def test_partial_column_sum_range():
    with pytest.raises(tri.TriangleRangeError):
        tri.partial_column_sum(FIB, 3, 2)


specs = st.tuples(*[st.integers(-3, 3)] * 6).filter(lambda v: v[2] != 0 and any(v[3:]))


@settings(max_examples=25, deadline=None)
@given(specs)
def test_ring_genericity(v):
    """Building symbolically then evaluating equals evaluating then building."""
    a, b, g, x, y, z = v
    sym = symbolic_triangle(6, 6)
    num = tri.build(LinearRecurrence((a, b, g), (x, y, z)), 5)
    for n in range(6):
        for k in range(n, 11 - n):
            assert mp_eval(sym[n, k], v) == num[n, k]
