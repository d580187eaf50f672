"""
Named sequences and the partial-sum triangle
============================================
"""

# %%
from trinomial import catalog
from trinomial.trinomial_core import partial_sum_row, row_sums

for n in range(5):
    print(n, partial_sum_row(n))

# %%
# Row sums of the partial-sum triangle, and the same numbers read off the
# constant, sign, natural and signed-natural triangles.
for n in range(5):
    print(n, tuple(row_sums(n)), tuple(catalog.row_sum_quadruple(n)))

# %%
for oeis_id, fx in catalog.FIXTURES.items():
    ok = catalog.fixture_values(oeis_id) == list(fx.terms)
    print(oeis_id, fx.role, "ok" if ok else "MISMATCH")
