"""Raney numbers, coral diagrams and source/sink tree webs, counted exactly."""

from .coral import (
    CoralDiagram,
    SizeLimitError,
    bijection_pp_to_p1,
    coral_to_weak_composition,
    count_coral,
    enumerate_coral_tiered,
    enumerate_coral_tuple,
)
from .numbers import (
    binomial,
    compositions,
    p_catalan,
    raney_closed,
    raney_closed_alt,
    raney_composition_sum,
    raney_convolution,
    weak_compositions,
)
from .trees import PlaneTree, boundary_leaves, decode, encode, enumerate_pary_trees, to_dot
from .webs import (
    OrientedTreeWeb,
    conjecture_values,
    count_sourcesink_by_filter,
    enumerate_a2_tree_webs_constant,
    enumerate_a2_tree_webs_minus,
    enumerate_sourcesink_trees,
    orient_with_word,
)

__version__ = "0.1.0"
