"""
Characteristic polynomials under the transform
==============================================

A root w of the base characteristic polynomial becomes w^2 + w + 1.  The
new polynomial comes from an exact resultant, without finding roots.
"""

# %%
from trinomial import TernarySpec
from trinomial.exact_math import UniPoly
from trinomial.ternary import char_poly, char_poly_transform, recurrence_from_char_poly

golden = UniPoly((-1, -1, 1))  # t^2 - t - 1
image = char_poly_transform(golden)
print(golden.format("t"), "->", image.format("s"))
print("so the Fibonacci transform satisfies b[n] =", recurrence_from_char_poly(image))

# %%
spec = TernarySpec(1, 1, 1, 0, 0, 1)
print(char_poly(spec).format("t"), "->", char_poly_transform(char_poly(spec)).format("s"))

# %%
# Degree is not limited to three.
quartic = UniPoly((2, 0, -3, 1, 1))
print(quartic.format("t"), "->", char_poly_transform(quartic).format("s"))
