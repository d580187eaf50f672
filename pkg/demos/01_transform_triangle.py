"""
Building a transform triangle
=============================

Row 0 holds a base sequence; every deeper entry is the sum of the three
entries above it.  The main diagonal is the trinomial transform.
"""

# %%
# Build the triangle for the Fibonacci numbers, reading base terms 0..18.
from trinomial import build, trinomial
from trinomial import triangle as tri
from trinomial.catalog import fibonacci

t = build(fibonacci, 9)
for n in range(4):
    print(n, t.row(n))

# %%
# The diagonal is the transform, and each entry has a closed form as a
# trinomial-weighted sum of base terms.
print("transform:", tri.transform(t, 8))
print("direct (3, 5):", tri.entry_direct(t, 3, 5), "==", t[3, 5])
print("T(4, 4) =", trinomial(4, 4))

# %%
# Column sums and alternating column sums.
s, s_bar = tri.column_sums(t)
print("s:    ", s)
print("s_bar:", s_bar)
