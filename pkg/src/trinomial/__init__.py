"""Exact trinomial transforms of integer sequences.

The main entry points:

* :mod:`trinomial.trinomial_core` - trinomial coefficients T(n, k) and the
  partial-sum triangle S(n, k);
* :mod:`trinomial.triangle` - the transform triangle over any ring, its
  diagonals and column sums;
* :mod:`trinomial.ternary` - fast recurrences for ternary linear recurrent
  base sequences;
* :mod:`trinomial.symbolic` - polynomial-identity checks over
  Z[alpha, beta, gamma, x, y, z];
* :mod:`trinomial.catalog` - named example sequences.
"""

from .exact_math import InexactDivisionError, UniPoly, exact_div, resultant_in_t
from .ternary import TernarySpec, derive, diagonal_fast, sums_fast, transform_fast
from .triangle import TransformTriangle, build
from .trinomial_core import partial_sum, trinomial

__all__ = [
    "InexactDivisionError",
    "TernarySpec",
    "TransformTriangle",
    "UniPoly",
    "build",
    "derive",
    "diagonal_fast",
    "exact_div",
    "partial_sum",
    "resultant_in_t",
    "sums_fast",
    "transform_fast",
    "trinomial",
]

__version__ = "0.1.0"
