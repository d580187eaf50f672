"""Exact integer helpers and dense univariate integer polynomials.

Python's ``int`` already is an arbitrary-precision signed integer, so it is
used directly as the scalar type everywhere in the package.  This module adds
the pieces ``int`` lacks: a division that refuses to truncate, a small
immutable polynomial type, and a fraction-free resultant.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Sequence, Union


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def exact_div(a: int, b: int) -> int:
    """Return ``a / b`` as an int, raising if ``b`` does not divide ``a``."""
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{b} does not divide {a}")
    return q


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Immutable univariate polynomial with integer coefficients.

    Coefficients are stored densely in ascending degree with no trailing
    zeros, so the zero polynomial has an empty coefficient tuple and degree
    ``-1``.
    """

    __slots__ = ("coeffs",)

    ZERO_DEGREE = -1

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"integer coefficient expected, got {a!r}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "UniPoly":
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative degree")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            m = abs(c)
            if d == 0:
                body = str(m)
            else:
                power = var if d == 1 else f"{var}^{d}"
                body = power if m == 1 else f"{m}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format

    def __neg__(self) -> "UniPoly":
        return UniPoly(-a for a in self.coeffs)

    def __add__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return uni_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return uni_add(self, -other)

    def __rsub__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return uni_add(other, -self)

    def __mul__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return uni_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_divide(self, other: "UniPoly") -> "UniPoly":
        """Quotient of an exact division in Z[t]; raises on any remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        if self.is_zero():
            return UniPoly()
        if dq < 0:
            raise InexactDivisionError(f"{other} does not divide {self}")
        quot = [0] * (dq + 1)
        lead = other.lead
        for i in range(dq, -1, -1):
            c = rem[i + other.degree]
            if c == 0:
                continue
            q = exact_div(c, lead)
            quot[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= q * b
        if any(rem):
            raise InexactDivisionError(f"{other} does not divide {self}")
        return UniPoly(quot)


def _coerce(x) -> Union[UniPoly, type(NotImplemented)]:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, int):
        return UniPoly.constant(x)
    return NotImplemented


def uni_add(p: UniPoly, q: UniPoly) -> UniPoly:
    """Coefficient-wise sum."""
    return UniPoly(a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0))


def uni_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    """Convolution product."""
    if p.is_zero() or q.is_zero():
        return UniPoly()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return UniPoly(out)


# A bivariate polynomial in t is a sequence of UniPoly coefficients in s,
# indexed by the power of t.
BiPoly = Sequence[UniPoly]


def _bareiss_det(m: list[list[UniPoly]]) -> UniPoly:
    """Determinant over Z[s] by fraction-free Gaussian elimination."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = UniPoly.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return UniPoly()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.exact_divide(prev)
            m[i][k] = UniPoly()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(p: BiPoly, q: BiPoly) -> list[list[UniPoly]]:
    """Sylvester matrix of two polynomials in t with coefficients in Z[s]."""
    m, d = len(p) - 1, len(q) - 1
    size = m + d
    zero = UniPoly()
    rows = []
    for i in range(d):
        row = [zero] * size
        for j, c in enumerate(reversed(p)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(q)):
            row[i + j] = c
        rows.append(row)
    return rows


def _trim_bi(r: BiPoly) -> list[UniPoly]:
    r = [c if isinstance(c, UniPoly) else UniPoly.constant(c) for c in r]
    while r and r[-1].is_zero():
        r.pop()
    return r


def resultant_in_t(p: UniPoly, r: BiPoly) -> UniPoly:
    """Res_t(p(t), r(s, t)) as a polynomial in s.

    ``p`` has integer coefficients in t.  ``r`` is given as its list of
    coefficients in t, each a :class:`UniPoly` in s.  The Sylvester
    determinant is evaluated with Bareiss elimination over Z[s], so no
    fractions appear.  The result is normalized to a positive leading
    coefficient.
    """
    if p.is_zero():
        raise ValueError("resultant of the zero polynomial")
    rt = _trim_bi(r)
    if not rt:
        raise ValueError("resultant of the zero polynomial")
    pt = [UniPoly.constant(c) for c in p.coeffs]
    if len(pt) == 1 and len(rt) == 1:
        res = UniPoly.constant(1)
    elif len(pt) == 1:
        res = pt[0] ** (len(rt) - 1)
    elif len(rt) == 1:
        res = rt[0] ** (len(pt) - 1)
    else:
        res = _bareiss_det(sylvester_matrix(pt, rt))
    if res.lead < 0:
        res = -res
    return res


def root_map_poly() -> list[UniPoly]:
    """Coefficients in t of ``s - t^2 - t - 1``."""
    return [UniPoly((-1, 1)), UniPoly.constant(-1), UniPoly.constant(-1)]
