"""
Fast recurrences for a ternary base sequence
============================================

When the base satisfies a[k] = alpha a[k-1] + beta a[k-2] + gamma a[k-3],
diagonals, columns and column sums are linearly recurrent too.
"""

# %%
from trinomial import TernarySpec, derive, diagonal_fast, sums_fast, transform_fast
from trinomial.ternary import column_fast

tribonacci = TernarySpec(alpha=1, beta=1, gamma=1, a0=0, a1=0, a2=1)
d = derive(tribonacci)
print("diagonal recurrence:", d.diagonal)
print("column numerators P, Q:", d.P, d.Q)
print("column sum recurrence:", d.sum6)

# %%
# Thousands of transform terms cost a few ring operations each.
b = transform_fast(tribonacci, 2000)
print("b[1999] has", len(str(b[-1])), "digits")

# %%
print("second diagonal:", diagonal_fast(tribonacci, 2, 8))
print("column 8:", column_fast(tribonacci, 8))
s, s_bar = sums_fast(tribonacci, 8)
print("s:", s)
print("s_bar:", s_bar)
