import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from trinomial.exact_math import (
    InexactDivisionError,
    UniPoly,
    exact_div,
    resultant_in_t,
    root_map_poly,
    uni_add,
    uni_mul,
)

polys = st.lists(st.integers(-50, 50), max_size=6).map(UniPoly)


def P(*coeffs):
    return UniPoly(coeffs)


def test_exact_div():
    assert exact_div(-12, 3) == -4
    assert exact_div(10**40, 10**20) == 10**20
    with pytest.raises(InexactDivisionError):
        exact_div(7, 2)
    with pytest.raises(ZeroDivisionError):
        exact_div(1, 0)


def test_big_values_do_not_overflow():
    big = 3**500
    assert exact_div(big * big, big) == big


def test_zero_polynomial():
    z = UniPoly()
    assert z.degree == UniPoly.ZERO_DEGREE
    assert UniPoly([0, 0, 0]) == z
    assert P(1, 2, 0).coeffs == (1, 2)


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (P(-1, -1, 1), P(1, 1), P(0, 0, 1)),
        (P(3, 1), UniPoly(), P(3, 1)),
        (P(-1, 1), P(-1, 1), P(-2, 2)),
    ],
)
def test_uni_add(p, q, expected):
    assert uni_add(p, q) == expected


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (P(-1, 1), P(1, 1, 1), P(-1, 0, 0, 1)),
        (P(5, 0, 2), P(1), P(5, 0, 2)),
        # hand expansion: (t^2 - t - 1)(t - 1) = t^3 - 2t^2 + 1
        (P(-1, -1, 1), P(-1, 1), P(1, 0, -2, 1)),
    ],
)
def test_uni_mul(p, q, expected):
    assert uni_mul(p, q) == expected


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_nonzero_lead(p, q):
    for x in (p + q, p * q):
        assert x.is_zero() or x.lead != 0


@given(polys, polys.filter(lambda q: not q.is_zero()))
def test_exact_divide_roundtrip(p, q):
    assert (p * q).exact_divide(q) == p


def test_exact_divide_rejects_remainder():
    with pytest.raises(InexactDivisionError):
        P(1, 0, 1).exact_divide(P(1, 1))


@pytest.mark.parametrize(
    "p, expected",
    [
        (P(-1, 1), P(-3, 1)),
        (P(-1, -1, 1), P(4, -6, 1)),
        (P(-1, -1, -1, 1), P(-1, 5, -7, 1)),
    ],
)
def test_root_map_resultant(p, expected):
    assert resultant_in_t(p, root_map_poly()) == expected


def test_resultant_zero_input():
    with pytest.raises(ValueError):
        resultant_in_t(UniPoly(), root_map_poly())
    with pytest.raises(ValueError):
        resultant_in_t(P(1, 1), [UniPoly(), UniPoly()])


def _sympy_resultant(p: UniPoly, r_coeffs: list[UniPoly]):
    t, s = sympy.symbols("t s")
    ps = sum(c * t**i for i, c in enumerate(p.coeffs))
    rs = sum(sum(c * s**j for j, c in enumerate(ci.coeffs)) * t**i for i, ci in enumerate(r_coeffs))
    res = sympy.Poly(sympy.resultant(ps, rs, t), s)
    out = UniPoly([int(c) for c in reversed(res.all_coeffs())])
    return -out if out.lead < 0 else out


monic = st.lists(st.integers(-6, 6), min_size=1, max_size=4).map(lambda c: UniPoly(c + [1]))
bivariate = st.lists(polys.filter(lambda q: not q.is_zero()), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(monic)
def test_root_map_matches_sympy(p):
    assert resultant_in_t(p, root_map_poly()) == _sympy_resultant(p, root_map_poly())


@settings(max_examples=40, deadline=None)
@given(monic, bivariate)
def test_general_resultant_matches_sympy(p, r):
    assert resultant_in_t(p, r) == _sympy_resultant(p, r)


@given(monic)
def test_root_map_monic_of_same_degree(p):
    res = resultant_in_t(p, root_map_poly())
    assert res.degree == p.degree
    assert res.lead == 1


def test_immutable():
    p = P(1, 2)
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_format():
    assert P(4, -6, 1).format("s") == "s^2 - 6s + 4"
    assert P(-1).format() == "-1"
    assert UniPoly().format() == "0"
