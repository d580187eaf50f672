"""
Checking the recurrences as polynomial identities
=================================================

The fast recurrences rest on a handful of base cases.  Here they are checked
over Z[alpha, beta, gamma, x, y, z], where x, y, z are the initial values.
"""

# %%
from trinomial import symbolic

t = symbolic.symbolic_triangle(3, 3)
print("a(1,2) =", symbolic.pretty(t[1, 2]))
print("a(2,2) =", symbolic.pretty(t[2, 2]))

# %%
for result in symbolic.base_case_suite():
    print(result)

# %%
# Perturbing a coefficient breaks the identity, as it should.
for result in symbolic.negative_controls():
    print(result)
