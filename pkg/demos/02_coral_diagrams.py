"""
Coral diagrams
==============

A (p, r)-coral diagram starts from a base vertex with r + 1 edges and grows
by placing p-stars on terminal edges, never on the leftmost base edge. As a
plane tree it is written as its preorder child-count code.
"""

from pathlib import Path

from raney.coral import coral_tiers, enumerate_coral_tiered, enumerate_coral_tuple
from raney.numbers import raney_closed
from raney.trees import boundary_leaves, decode, leaf, node, to_dot

# %%
# The three-star (2, 2)-coral built step by step: two stars on the base,
# then one star on the right tip of the first of them.
star = node(leaf(), leaf())
grown = node(leaf(), node(leaf(), star), star)
print(grown, "boundary points:", len(boundary_leaves(grown)))

# %%
# Both generators list the same 14 diagrams, in sorted code order.
tiered = [d.code for d in enumerate_coral_tiered(2, 2, 3)]
tupled = [d.code for d in enumerate_coral_tuple(2, 2, 3)]
assert tiered == tupled and len(tiered) == raney_closed(2, 2, 3)
print(grown.code in tiered)

# %%
# Grouping the tiered construction by its tier sizes reproduces each term of
# the composition sum.
for lam, group in coral_tiers(2, 2, 3).items():
    print(lam, len(group))

# %%
# Graphviz output keeps the planar child order (``ordering=out``).
out = Path("coral_dots")
out.mkdir(exist_ok=True)
for i, code in enumerate(tiered):
    (out / f"coral_{i:02d}.dot").write_text(to_dot(decode(code), name=f"coral_{i:02d}"))
print(f"wrote {len(tiered)} files to {out}/ (render with: dot -Tpng -O {out}/*.dot)")
