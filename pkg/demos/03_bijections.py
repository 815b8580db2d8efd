"""
Two explicit bijections
=======================

Subdividing the leftmost base edge turns a (p, p)-coral with k stars into a
(p, 1)-coral with k + 1 stars, which gives R_{p,p}(k) = R_{p,1}(k + 1).
For p = 1 a coral diagram is a row of chains, i.e. a weak composition.
"""

from raney.coral import bijection_pp_to_p1, coral_to_weak_composition, enumerate_coral_tuple

# %%
for d in enumerate_coral_tuple(2, 2, 1):
    print(d.code, "->", bijection_pp_to_p1(d).code)

# %%
# The image is all of the target, with no collisions.
for p in (2, 3):
    for k in range(4):
        image = {bijection_pp_to_p1(d).code for d in enumerate_coral_tuple(p, p, k)}
        target = {d.code for d in enumerate_coral_tuple(p, 1, k + 1)}
        print(p, k, len(image), image == target)

# %%
# (1, 3)-corals with two stars read off as weak compositions of 2 into 3 parts.
for d in enumerate_coral_tuple(1, 3, 2):
    print(d.code, coral_to_weak_composition(d))
