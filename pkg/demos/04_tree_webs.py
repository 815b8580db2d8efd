"""
Source/sink trees and A2 tree webs
==================================

Orient every edge of a (p+1)-valent tree so that each vertex is a source or
a sink. With all boundary vertices sinks, such trees are counted by
R_{p^2,p}(k); for p = 2 these are the connected A2 webs without internal
faces. Each count below comes out the same two ways: building the trees
from oriented two-level stars, and filtering every trivalent tree by
boundary parity.
"""

from raney.numbers import raney_closed
from raney.webs import (
    conjecture_values,
    count_sourcesink_by_filter,
    enumerate_a2_tree_webs_constant,
    enumerate_a2_tree_webs_minus,
    web_to_dot,
)

# %%
# The two trees with boundary ++++++ ('o' = source, 'i' = sink, preorder).
for web in enumerate_a2_tree_webs_constant(1):
    print(web.code, web.boundary, web.classes)

# %%
for k in range(4):
    built = sum(1 for _ in enumerate_a2_tree_webs_constant(k))
    print(k, built, count_sourcesink_by_filter(2, k), raney_closed(4, 2, k))

# %%
# One minus then pluses: counted by the 4-Catalan numbers.
for k in range(4):
    print(k, sum(1 for _ in enumerate_a2_tree_webs_minus(k)), raney_closed(4, 1, k))

# %%
# Arrows point from sources to sinks.
(web,) = enumerate_a2_tree_webs_minus(1)
print(web_to_dot(web))

# %%
# Predicted sl_n counts. These are conjectures: nothing here checks them.
for n in (3, 4, 5):
    print(n, [tuple(conjecture_values(n, 1, k)) for k in range(4)], "UNVERIFIED")
