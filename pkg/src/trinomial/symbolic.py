"""Sparse polynomials over Z in the six variables (alpha, beta, gamma, x, y, z)
and exact checks of the triangle identities as polynomial identities.

The recurrence coefficients alpha, beta, gamma and the three initial terms
x, y, z of a ternary sequence are kept as indeterminates.  A triangle built
over this ring holds, in each cell, the polynomial expressing that cell in
terms of the six parameters, so an identity holding for the polynomials holds
for every integer specialisation at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import triangle as tri

VARS = ("α", "β", "γ", "x", "y", "z")
ASCII_VARS = ("alpha", "beta", "gamma", "x", "y", "z")
NVARS = len(VARS)

Exponent = tuple[int, int, int, int, int, int]


class MultiPoly:
    """Polynomial in Z[α, β, γ, x, y, z] as a map exponent-vector -> coeff.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != NVARS:
                    raise ValueError(f"exponent vector must have {NVARS} entries")
                if c:
                    clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls({(0,) * NVARS: c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        i = VARS.index(name) if name in VARS else ASCII_VARS.index(name)
        e = [0] * NVARS
        e[i] = 1
        return cls({tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "MultiPoly":
        return mp_neg(self)

    def __add__(self, other) -> "MultiPoly":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return mp_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return mp_add(self, mp_neg(other))

    def __rsub__(self, other) -> "MultiPoly":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return mp_add(other, mp_neg(self))

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return mp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        out = MultiPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, *values: int) -> int:
        return mp_eval(self, values)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def coefficient_in_xyz(self, var: str) -> "MultiPoly":
        """Coefficient of ``x``, ``y`` or ``z`` viewed as linear in x, y, z."""
        i = VARS.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 1 and sum(e[3:]) == 1:
                f = list(e)
                f[i] = 0
                out[tuple(f)] = c
        return MultiPoly(out)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return pretty(self)


def _lift(x):
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.constant(x)
    return NotImplemented


def mp_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out = dict(p.terms)
    for e, c in q.terms.items():
        out[e] = out.get(e, 0) + c
    return MultiPoly(out)


def mp_neg(p: MultiPoly) -> MultiPoly:
    return MultiPoly({e: -c for e, c in p.terms.items()})


def mp_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out: dict[Exponent, int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return MultiPoly(out)


def mp_eval(p: MultiPoly, assignment: Sequence[int]) -> int:
    """Value of ``p`` at ``(α, β, γ, x, y, z) = assignment``."""
    if len(assignment) != NVARS:
        raise ValueError(f"assignment needs {NVARS} values")
    total = 0
    for e, c in p.terms.items():
        term = c
        for v, k in zip(assignment, e):
            if k:
                term *= v**k
        total += term
    return total


def _monomial(e: Exponent, names=VARS) -> str:
    out = []
    for name, k in zip(names, e):
        if k == 1:
            out.append(name)
        elif k > 1:
            out.append(f"{name}^{k}")
    return "".join(out) if names is VARS else "*".join(out)


def format_poly(p: MultiPoly, names=VARS) -> str:
    """Flat rendering such as ``α^2+2α+β+3``."""
    if p.is_zero():
        return "0"
    out = ""
    for e, c in p.sorted_terms():
        mono = _monomial(e, names)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}" if names is VARS else f"{abs(c)}*{mono}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


def pretty(p: MultiPoly) -> str:
    """Group a polynomial that is linear in x, y, z by those variables,
    e.g. ``(αγ+2γ+1)x + (αβ+2β+γ+2)y + (α^2+2α+β+3)z``.  Falls back to the
    flat form for anything else."""
    if any(sum(e[3:]) != 1 for e in p.terms):
        return format_poly(p)
    parts = []
    for v in ("x", "y", "z"):
        c = p.coefficient_in_xyz(v)
        if c.is_zero():
            continue
        s = format_poly(c)
        if s == "1":
            parts.append(v)
        elif s == "-1":
            parts.append(f"-{v}")
        elif len(c.terms) == 1 and "+" not in s[1:] and "-" not in s[1:]:
            parts.append(f"{s}{v}")
        else:
            parts.append(f"({s}){v}")
    return " + ".join(parts) if parts else "0"


ALPHA, BETA, GAMMA, X, Y, Z = (MultiPoly.var(v) for v in VARS)
ONE = MultiPoly.constant(1)


_BASE_TERMS = [X, Y, Z]


def symbolic_base(k: int) -> MultiPoly:
    """k-th term of the generic ternary sequence with initials x, y, z."""
    if k < 0:
        return MultiPoly()
    _cache = _BASE_TERMS
    while len(_cache) <= k:
        _cache.append(ALPHA * _cache[-1] + BETA * _cache[-2] + GAMMA * _cache[-3])
    return _cache[k]


MAX_SYMBOLIC_SIZE = 8


class SizeCapError(ValueError):
    pass


def symbolic_triangle(rows: int, cols: int) -> tri.TransformTriangle:
    """Triangle over Z[α, β, γ, x, y, z] with rows ``0..rows-1`` and columns
    ``0..cols-1``; both sizes are capped at 8."""
    if rows > MAX_SYMBOLIC_SIZE or cols > MAX_SYMBOLIC_SIZE:
        raise SizeCapError(f"symbolic triangle limited to {MAX_SYMBOLIC_SIZE}x{MAX_SYMBOLIC_SIZE}")
    if rows < 1 or cols < rows:
        raise ValueError("need 1 <= rows <= cols")
    K = max(rows - 1, cols - 1)
    return tri.build(symbolic_base, K)


# Derived coefficients as polynomials in α, β, γ.

def coeff_A() -> MultiPoly:
    return ALPHA**2 + ALPHA + 2 * BETA + 3


def coeff_B() -> MultiPoly:
    a, b, g = ALPHA, BETA, GAMMA
    return -2 * a**2 + a * b + 2 * a * g - b**2 - 2 * a - 3 * b + 3 * g - 3


def coeff_C() -> MultiPoly:
    a, b, g = ALPHA, BETA, GAMMA
    return a**2 - a * b - a * g + b**2 - b * g + g**2 + a + b - 2 * g + 1


def coeff_P() -> MultiPoly:
    return ALPHA * GAMMA - BETA + 3 * GAMMA


def coeff_Q() -> MultiPoly:
    a, b, g = ALPHA, BETA, GAMMA
    return a * b - 2 * a * g + b * g - a + 2 * b


def sum6_coeffs(A=None, B=None, C=None) -> tuple[MultiPoly, ...]:
    """Coefficients of the sixth-order recurrence for column sums."""
    A = coeff_A() if A is None else A
    B = coeff_B() if B is None else B
    C = coeff_C() if C is None else C
    a, b, g = ALPHA, BETA, GAMMA
    return (
        a + A,
        B - a * A + b,
        -(a * B + b * A - C - g),
        -(a * C + b * B + g * A),
        -(b * C + g * B),
        -(g * C),
    )


def alt6_coeffs(A=None, B=None, C=None) -> tuple[MultiPoly, ...]:
    """Coefficients of the sixth-order recurrence for alternating column sums."""
    A = coeff_A() if A is None else A
    B = coeff_B() if B is None else B
    C = coeff_C() if C is None else C
    a, b, g = ALPHA, BETA, GAMMA
    return (
        a - A,
        B + a * A + b,
        -(a * B - b * A + C - g),
        a * C - b * B + g * A,
        b * C - g * B,
        g * C,
    )


@dataclass(frozen=True)
class ProofResult:
    """Outcome of a polynomial identity check; ``residual`` is LHS - RHS."""

    name: str
    residual: MultiPoly

    @property
    def holds(self) -> bool:
        return self.residual.is_zero()

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        status = "HOLDS" if self.holds else "FAILS"
        return f"{self.name}: {status}"


def verify_diagonal_base(ell: int, A=None, B=None, C=None) -> ProofResult:
    """a[3][3+ell] == A a[2][2+ell] + B a[1][1+ell] + C a[0][ell]."""
    if not 0 <= ell <= 3:
        raise ValueError("diagonal base case offset must be in 0..3")
    A = coeff_A() if A is None else A
    B = coeff_B() if B is None else B
    C = coeff_C() if C is None else C
    t = symbolic_triangle(4, 4 + ell)
    lhs = t[3, 3 + ell]
    rhs = A * t[2, 2 + ell] + B * t[1, 1 + ell] + C * t[0, ell]
    return ProofResult(f"diagonal recurrence, n=3, offset {ell}", lhs - rhs)


def verify_column_base(k: int, P=None, Q=None, C=None) -> ProofResult:
    """γ a[3][k] == P a[2][k] + Q a[1][k] + C a[0][k]."""
    if not 3 <= k <= 5:
        raise ValueError("column base case must have 3 <= k <= 5")
    P = coeff_P() if P is None else P
    Q = coeff_Q() if Q is None else Q
    C = coeff_C() if C is None else C
    t = symbolic_triangle(4, k + 1)
    lhs = GAMMA * t[3, k]
    rhs = P * t[2, k] + Q * t[1, k] + C * t[0, k]
    return ProofResult(f"column recurrence, n=3, column {k}", lhs - rhs)


def symbolic_column_sums(count: int, alternating: bool = False) -> list[MultiPoly]:
    t = symbolic_triangle(count, count)
    fn = tri.alt_column_sum if alternating else tri.column_sum
    return [fn(t, n) for n in range(count)]


def verify_sum_base(coeffs: Sequence[MultiPoly] | None = None, alternating: bool = False) -> ProofResult:
    """s_6 == c_1 s_5 + ... + c_6 s_0 over the symbolic triangle."""
    if coeffs is None:
        coeffs = alt6_coeffs() if alternating else sum6_coeffs()
    s = symbolic_column_sums(7, alternating)
    rhs = MultiPoly()
    for i, c in enumerate(coeffs, start=1):
        rhs = rhs + c * s[6 - i]
    kind = "alternating sum" if alternating else "column sum"
    return ProofResult(f"{kind} recurrence, n=6", s[6] - rhs)


def base_case_suite() -> list[ProofResult]:
    """Every base-case identity with the canonical coefficients."""
    results = [verify_diagonal_base(ell) for ell in range(4)]
    results += [verify_column_base(k) for k in range(3, 6)]
    results.append(verify_sum_base())
    results.append(verify_sum_base(alternating=True))
    return results


def negative_controls() -> list[ProofResult]:
    """The same identities with one coefficient perturbed; all must fail."""
    s6 = list(sum6_coeffs())
    s6[0] = s6[0] + 1
    return [
        verify_diagonal_base(0, A=coeff_A() + 1),
        verify_column_base(3, Q=coeff_Q() + GAMMA),
        verify_sum_base(s6),
    ]
