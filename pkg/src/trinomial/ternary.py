"""Ternary linear recurrent base sequences and their fast recurrences.

For a base sequence ``a[k] = alpha a[k-1] + beta a[k-2] + gamma a[k-3]`` every
line of the transform triangle is again linearly recurrent: rows with the
same coefficients, diagonals with the derived coefficients ``(A, B, C)``,
columns with ``(P, Q, C) / gamma``, and column sums with sixth-order
recurrences.  The functions here compute those lines in O(1) ring operations
per term after seeding from a small triangle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from os import PathLike
from typing import Sequence

from . import triangle as tri
from .exact_math import UniPoly, exact_div, resultant_in_t, root_map_poly


class SpecError(ValueError):
    """Invalid ternary recurrence description."""


_KEYS = ("alpha", "beta", "gamma", "a0", "a1", "a2")


@dataclass(frozen=True)
class TernarySpec:
    alpha: int
    beta: int
    gamma: int
    a0: int
    a1: int
    a2: int

    def __post_init__(self):
        for key in _KEYS:
            if not isinstance(getattr(self, key), int) or isinstance(getattr(self, key), bool):
                raise SpecError(f"{key} must be an integer")
        if self.gamma == 0:
            raise SpecError("gamma must be nonzero")
        if self.a0 == self.a1 == self.a2 == 0:
            raise SpecError("initial values must not all be zero")

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def initials(self) -> tuple[int, int, int]:
        return (self.a0, self.a1, self.a2)

    @classmethod
    def from_dict(cls, doc: dict) -> "TernarySpec":
        missing = [k for k in _KEYS if k not in doc]
        if missing:
            raise SpecError(f"spec is missing keys: {', '.join(missing)}")
        values = {}
        for key in _KEYS:
            v = doc[key]
            if isinstance(v, str):
                try:
                    v = int(v.strip())
                except ValueError:
                    raise SpecError(f"{key}: not a decimal integer: {v!r}") from None
            elif isinstance(v, bool) or not isinstance(v, int):
                raise SpecError(f"{key}: expected an integer, got {v!r}")
            values[key] = v
        return cls(**values)

    @classmethod
    def from_json(cls, text: str) -> "TernarySpec":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise SpecError("spec JSON must be an object")
        return cls.from_dict(doc)

    @classmethod
    def from_file(cls, path: str | PathLike) -> "TernarySpec":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in _KEYS}

    def to_json(self) -> str:
        # large values as strings so JSON consumers without bignums stay exact
        return json.dumps({k: (v if abs(v) < 2**53 else str(v)) for k, v in self.to_dict().items()})


class LinearRecurrence:
    """Memoized sequence ``a[k] = sum_i c[i] a[k-1-i]`` with given initials.

    Negative indices read as zero.  Instances are callable, so they plug
    straight into :func:`triangle.build`.
    """

    def __init__(self, coeffs: Sequence[int], initials: Sequence[int]):
        if len(coeffs) != len(initials):
            raise ValueError("need as many initial values as coefficients")
        self.coeffs = tuple(coeffs)
        self._terms = list(initials)

    def __call__(self, k: int) -> int:
        if k < 0:
            return 0
        terms, coeffs = self._terms, self.coeffs
        while len(terms) <= k:
            terms.append(sum(c * terms[-1 - i] for i, c in enumerate(coeffs)))
        return terms[k]

    def take(self, count: int) -> list[int]:
        return [self(k) for k in range(count)]


def sequence(spec: TernarySpec) -> LinearRecurrence:
    return LinearRecurrence(spec.coeffs, spec.initials)


def seq_term(spec: TernarySpec, k: int) -> int:
    return sequence(spec)(k)


def run_recurrence(coeffs: Sequence[int], initials: Sequence[int], count: int) -> list[int]:
    """First ``count`` terms of a linear recurrence; ``initials`` may be longer
    or shorter than ``count``."""
    out = list(initials[:count])
    while len(out) < count:
        out.append(sum(c * out[-1 - i] for i, c in enumerate(coeffs)))
    return out


@dataclass(frozen=True)
class DerivedCoeffs:
    A: int
    B: int
    C: int
    P: int
    Q: int
    sum6: tuple[int, int, int, int, int, int]
    alt6: tuple[int, int, int, int, int, int]

    @property
    def diagonal(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)


def derive(spec: TernarySpec) -> DerivedCoeffs:
    """Diagonal, column and column-sum recurrence coefficients."""
    return derive_from(spec.alpha, spec.beta, spec.gamma)


def derive_from(a: int, b: int, g: int) -> DerivedCoeffs:
    A = a * a + a + 2 * b + 3
    B = -2 * a * a + a * b + 2 * a * g - b * b - 2 * a - 3 * b + 3 * g - 3
    C = a * a - a * b - a * g + b * b - b * g + g * g + a + b - 2 * g + 1
    P = a * g - b + 3 * g
    Q = a * b - 2 * a * g + b * g - a + 2 * b
    sum6 = (
        a + A,
        B - a * A + b,
        -(a * B + b * A - C - g),
        -(a * C + b * B + g * A),
        -(b * C + g * B),
        -g * C,
    )
    alt6 = (
        a - A,
        B + a * A + b,
        -(a * B - b * A + C - g),
        a * C - b * B + g * A,
        b * C - g * B,
        g * C,
    )
    return DerivedCoeffs(A, B, C, P, Q, sum6, alt6)


def transform_initials(spec: TernarySpec) -> tuple[int, int, int]:
    """b0, b1, b2 of the transform in closed form."""
    a, b, g = spec.coeffs
    x, y, z = spec.initials
    return (
        x,
        x + y + z,
        (a * g + 2 * g + 1) * x + (a * b + 2 * b + g + 2) * y + (a * a + 2 * a + b + 3) * z,
    )


def transform_fast(spec: TernarySpec, count: int) -> list[int]:
    """Trinomial transform via the derived diagonal recurrence."""
    if count < 1:
        raise ValueError("count must be positive")
    d = derive(spec)
    return run_recurrence(d.diagonal, transform_initials(spec), count)


def diagonal_fast(spec: TernarySpec, ell: int, count: int) -> list[int]:
    """Diagonal ``ell`` seeded from a small triangle, then extended with
    ``(A, B, C)``."""
    if count < 1:
        raise ValueError("count must be positive")
    if ell < 0:
        raise ValueError("diagonal offset must be non-negative")
    seed = tri.diagonal(tri.build(sequence(spec), 2 + ell), ell, 3)
    return run_recurrence(derive(spec).diagonal, seed, count)


def column_step(spec: TernarySpec, prev3: Sequence[int], derived: DerivedCoeffs | None = None) -> int:
    """Next column entry from ``(a[n-1][k], a[n-2][k], a[n-3][k])``.

    The numerator ``P x1 + Q x2 + C x3`` is divided exactly by gamma; a
    remainder means the inputs did not come from this spec's triangle and
    raises :class:`~trinomial.exact_math.InexactDivisionError`.
    """
    d = derive(spec) if derived is None else derived
    x1, x2, x3 = prev3
    return exact_div(d.P * x1 + d.Q * x2 + d.C * x3, spec.gamma)


def column_fast(spec: TernarySpec, k: int) -> list[int]:
    """Column ``k`` (rows ``0..k``): three entries from the triangle, the rest
    by :func:`column_step`."""
    t = tri.build(sequence(spec), k)
    out = list(t.column(k)[: min(3, k + 1)])
    d = derive(spec)
    while len(out) <= k:
        out.append(column_step(spec, (out[-1], out[-2], out[-3]), d))
    return out


def sums_fast(spec: TernarySpec, count: int) -> tuple[list[int], list[int]]:
    """Column sums and alternating column sums: six seeds from a triangle,
    then the sixth-order recurrences."""
    if count < 1:
        raise ValueError("count must be positive")
    t = tri.build(sequence(spec), 5)
    s0, sb0 = tri.column_sums(t)
    d = derive(spec)
    return run_recurrence(d.sum6, s0, count), run_recurrence(d.alt6, sb0, count)


def row_boundary(spec: TernarySpec, n: int) -> tuple[int, int, int]:
    """``(a[n][-n], a[n][-n+1], a[n][-n+2])`` with the base zero-extended to
    negative indices."""
    if n < 0:
        raise ValueError("row must be non-negative")
    x, y, z = spec.initials
    return (x, n * x + y, comb(n + 1, 2) * x + n * y + z)


def char_poly(spec: TernarySpec) -> UniPoly:
    """``t^3 - alpha t^2 - beta t - gamma``."""
    return UniPoly((-spec.gamma, -spec.beta, -spec.alpha, 1))


def char_poly_transform(p: UniPoly) -> UniPoly:
    """Characteristic polynomial whose roots are ``w^2 + w + 1`` for the roots
    ``w`` of the monic polynomial ``p``."""
    if p.degree < 1:
        raise ValueError("characteristic polynomial must have degree >= 1")
    if not p.is_monic():
        raise ValueError("characteristic polynomial must be monic")
    return resultant_in_t(p, root_map_poly())


def recurrence_from_char_poly(p: UniPoly) -> tuple[int, ...]:
    """Coefficients ``c`` with ``x[n] = sum c[i] x[n-1-i]`` for monic ``p``."""
    if not p.is_monic():
        raise ValueError("characteristic polynomial must be monic")
    d = p.degree
    return tuple(-p[d - 1 - i] for i in range(d))


def row_recurrence_check(spec: TernarySpec, t: tri.TransformTriangle, n: int, k: int) -> bool:
    """Whether entry ``(n, k)`` satisfies the base recurrence along its row."""
    if not 0 <= n <= k - 3:
        raise tri.TriangleRangeError(f"row recurrence needs n <= k - 3, got ({n}, {k})")
    a, b, g = spec.coeffs
    return t.entry(n, k) == a * t.entry(n, k - 1) + b * t.entry(n, k - 2) + g * t.entry(n, k - 3)
