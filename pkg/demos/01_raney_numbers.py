"""
Four ways to compute a Raney number
===================================

The Raney number R_{p,r}(k) has a closed form, a second closed form, a sum
over strong compositions of k (one binomial per tier of stars), and a
convolution of p-Catalan numbers (one factor per base attachment site).
All four are exact integers and agree.
"""

from raney.numbers import (
    compositions,
    p_catalan,
    raney_closed,
    raney_closed_alt,
    raney_composition_sum,
    raney_convolution,
)

# %%
# The familiar specializations: R_{2,1} is Catalan, R_{p,1} is p-Catalan,
# R_{1,r} counts weak compositions.
print("Catalan  ", [raney_closed(2, 1, k) for k in range(10)])
print("3-Catalan", [p_catalan(3, k) for k in range(10)])
print("R_{1,4}  ", [raney_closed(1, 4, k) for k in range(10)])

# %%
# The four routes side by side for R_{4,2}, the sequence behind the A2 tree
# webs in demo 04.
print(f"{'k':>2} {'closed':>8} {'alt':>8} {'tiers':>8} {'conv':>8}")
for k in range(8):
    alt = raney_closed_alt(4, 2, k) if k else 1
    print(f"{k:>2} {raney_closed(4, 2, k):>8} {alt:>8} "
          f"{raney_composition_sum(4, 2, k):>8} {raney_convolution(4, 2, k):>8}")

# %%
# The composition sum term by term for R_{2,2}(3) = 14: the composition
# (l1, l2, ...) contributes C(r, l1) C(p l1, l2) ...
from raney.numbers import binomial

for lam in compositions(3):
    sites, term = 2, 1
    for part in lam:
        term *= binomial(sites, part)
        sites = 2 * part
    print(lam, term)

# %%
# Values outgrow machine integers quickly; nothing here is approximate.
print(raney_closed(9, 4, 200))
