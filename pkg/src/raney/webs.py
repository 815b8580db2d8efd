"""Source/sink oriented trees and connected A2 tree webs.

An orientation of a tree is coherent when every vertex is a source (all
edges out) or a sink (all edges in). A tree is bipartite, so a coherent
orientation is one of the two ways of calling one depth-parity class
"sources"; a boundary word over ``+``/``-`` (``+`` = the boundary vertex is
a sink) picks at most one of them.

Webs are counted two ways here:

* constructively, by growing (p^2, p)-coral diagrams whose stars are the
  two-level oriented stars (a sink carrying p sources, each carrying p
  sinks) -- :func:`enumerate_sourcesink_trees`;
* by brute force, running :func:`orient_with_word` over every
  (p+1)-valent half-plane tree of the right boundary size --
  :func:`sourcesink_trees_by_filter` and
  :func:`enumerate_a2_tree_webs_minus`.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .coral import DEFAULT_CAP, check_size, coral_codes, enumerate_coral_tuple
from .numbers import raney_closed
from .trees import PlaneTree, edges, to_dot, vertex_depths

__all__ = [
    "SOURCE",
    "SINK",
    "OrientedTreeWeb",
    "orient_with_word",
    "enumerate_sourcesink_trees",
    "sourcesink_trees_by_filter",
    "count_sourcesink_by_filter",
    "enumerate_a2_tree_webs_constant",
    "enumerate_a2_tree_webs_minus",
    "conjecture_values",
    "ConjectureValues",
    "web_to_dot",
    "boundary_vertices",
    "boundary_length",
]

SOURCE = "o"  # all edges out
SINK = "i"  # all edges in


def _normalize_word(word: str) -> str:
    word = word.replace("−", "-")
    if not word or set(word) - {"+", "-"}:
        raise ValueError(f"boundary word must be a nonempty string over '+-': {word!r}")
    return word


@dataclass(frozen=True)
class OrientedTreeWeb:
    """A plane tree with a coherent source/sink orientation.

    ``classes[i]`` is :data:`SOURCE` or :data:`SINK` for the vertex with
    preorder index ``i``; ``boundary`` reads the boundary vertices left to
    right.
    """

    tree: PlaneTree
    classes: str
    boundary: str

    @property
    def code(self) -> tuple[int, ...]:
        return self.tree.code

    def directed_edges(self) -> list[tuple[int, int]]:
        """(tail, head) pairs, every edge pointing from a source to a sink."""
        return [(a, b) if self.classes[a] == SOURCE else (b, a) for a, b in edges(self.tree)]


def _degrees(code: Sequence[int]) -> list[int]:
    return [c + (i > 0) for i, c in enumerate(code)]


def boundary_vertices(t: PlaneTree) -> list[int]:
    """Vertices of degree at most 1, left to right.

    These are the terminal vertices plus, for a planted tree such as the
    bare arc ``(1, 0)``, the root itself (which then comes first).
    """
    return [i for i, d in enumerate(_degrees(t.code)) if d <= 1]


def _orientation(code: Sequence[int], leaves: Sequence[int], word: str) -> str | None:
    # Fast path shared by the brute-force filters: no validation, no objects.
    depths = vertex_depths(code)
    # parity class whose vertices are sinks, fixed by the first boundary vertex
    first = leaves[0]
    sink_parity = depths[first] & 1 if word[0] == "+" else (depths[first] & 1) ^ 1
    for v, s in zip(leaves, word):
        if ((depths[v] & 1) == sink_parity) != (s == "+"):
            return None
    return "".join(SINK if (d & 1) == sink_parity else SOURCE for d in depths)


def orient_with_word(t: PlaneTree, word: str, p: int | None = None) -> OrientedTreeWeb | None:
    """The unique coherent orientation of ``t`` realizing ``word``, or None.

    Every non-boundary vertex must have degree ``p + 1`` (``p`` inferred
    when omitted) and ``word`` must have one sign per boundary vertex.
    """
    word = _normalize_word(word)
    leaves = boundary_vertices(t)
    if len(word) != len(leaves):
        raise ValueError(f"word has {len(word)} signs, tree has {len(leaves)} boundary vertices")
    degrees = _degrees(t.code)
    on_boundary = set(leaves)
    inner = {degrees[v] for v in range(t.size) if v not in on_boundary}
    if p is not None:
        if inner - {p + 1}:
            raise ValueError(f"internal vertex degrees {sorted(inner)} are not all {p + 1}")
    elif len(inner) > 1:
        raise ValueError(f"internal vertices have mixed degrees {sorted(inner)}")
    classes = _orientation(t.code, leaves, word)
    if classes is None:
        return None
    return OrientedTreeWeb(t, classes, word)


def _expand_modified_stars(tree: PlaneTree, p: int) -> tuple[tuple[int, ...], str]:
    """Replace each p^2-star of a (p^2, p)-coral by the oriented two-level star.

    Returns the (p+1)-valent tree's code and the classes assigned by the
    construction: the root is a source, every original coral vertex above it
    is a sink, every inserted middle vertex is a source.
    """
    code: list[int] = []
    classes: list[str] = []

    def walk(t: PlaneTree) -> None:
        classes.append(SINK)
        kids = t.children
        if not kids:
            code.append(0)
            return
        code.append(p)
        for g in range(p):
            code.append(p)
            classes.append(SOURCE)
            for child in kids[g * p:(g + 1) * p]:
                walk(child)

    code.append(tree.code[0])
    classes.append(SOURCE)
    for child in tree.children:
        walk(child)
    return tuple(code), "".join(classes)


def boundary_length(p: int, k: int) -> int:
    return k * (p * p - 1) + p + 1


def enumerate_sourcesink_trees(p: int, k: int) -> Iterator[OrientedTreeWeb]:
    """Coherently oriented (p+1)-valent trees with all-sink boundary, built
    from (p^2, p)-corals with ``k`` modified stars. Sorted by code."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    word = "+" * boundary_length(p, k)
    webs = []
    for d in enumerate_coral_tuple(p * p, p, k):
        code, classes = _expand_modified_stars(d.tree, p)
        webs.append(OrientedTreeWeb(PlaneTree(code, check=False), classes, word))
    webs.sort(key=lambda w: w.code)
    return iter(webs)


def _filter(p: int, stars: int, word: str, cap: int | None) -> Iterator[OrientedTreeWeb]:
    check_size(raney_closed(p, p, stars), cap)  # eager, before the first item
    return _filtered(p, stars, word)


def _filtered(p: int, stars: int, word: str) -> Iterator[OrientedTreeWeb]:
    for code in coral_codes(p, p, stars):
        leaves = [i for i in range(1, len(code)) if code[i] == 0]
        classes = _orientation(code, leaves, word)
        if classes is not None:
            yield OrientedTreeWeb(PlaneTree(code, check=False), classes, word)


def sourcesink_trees_by_filter(p: int, k: int, cap: int | None = DEFAULT_CAP) -> Iterator[OrientedTreeWeb]:
    """Every (p+1)-valent half-plane tree with ``k(p^2-1)+p+1`` boundary
    vertices that accepts the all-``+`` word. Sorted by code.

    The candidates are the (p, p)-corals with ``k(p+1)`` stars; raises
    :class:`~raney.coral.SizeLimitError` if there are more than ``cap``.
    """
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    return _filter(p, k * (p + 1), "+" * boundary_length(p, k), cap)


def count_sourcesink_by_filter(p: int, k: int, cap: int | None = DEFAULT_CAP) -> int:
    return sum(1 for _ in sourcesink_trees_by_filter(p, k, cap))


def enumerate_a2_tree_webs_constant(k: int) -> Iterator[OrientedTreeWeb]:
    """Connected cycle-free A2 webs with boundary of ``3(k+1)`` pluses."""
    return enumerate_sourcesink_trees(2, k)


def enumerate_a2_tree_webs_minus(k: int, cap: int | None = DEFAULT_CAP) -> Iterator[OrientedTreeWeb]:
    """Connected cycle-free A2 webs with boundary ``-`` then ``3k+1`` pluses.

    Found by filtering all trivalent half-plane trees with ``3k+2`` boundary
    vertices. For ``k = 0`` the only candidate is a bare arc, code ``(1, 0)``.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    word = "-" + "+" * (3 * k + 1)
    if k == 0:
        return iter([OrientedTreeWeb(PlaneTree((1, 0), check=False), SOURCE + SINK, word)])
    return _filter(2, 3 * k - 1, word, cap)


class ConjectureValues(NamedTuple):
    """Predicted counts for sl_n tree webs. UNVERIFIED: no enumeration backs them."""

    constant: int  # (n-2)^k R_{n+1,n-1}(k)
    mixed: int  # (n-2)^k R_{n-1,n-j}(k)


def conjecture_values(n: int, j: int, k: int) -> ConjectureValues:
    """Conjectured sl_n tree-web counts. These are UNVERIFIED predictions.

    ``mixed`` evaluates ``R_{n-1,n-j}`` literally, although ``R_{n+1,n-j}``
    is the form that agrees with the n = 3 minus-word count.
    """
    if n < 3 or not 1 <= j <= n - 1 or k < 0:
        raise ValueError(f"need n >= 3, 1 <= j <= n-1, k >= 0; got n={n}, j={j}, k={k}")
    factor = (n - 2) ** k
    return ConjectureValues(factor * raney_closed(n + 1, n - 1, k),
                            factor * raney_closed(n - 1, n - j, k))


def web_to_dot(web: OrientedTreeWeb, name: str = "web") -> str:
    """Graphviz digraph with edges pointing source -> sink; boundary
    vertices are labelled with their sign."""
    signs = dict(zip(boundary_vertices(web.tree), web.boundary))
    labels = [signs.get(i, "") for i in range(web.tree.size)]
    return to_dot(web.tree, name=name, labels=labels, edge_list=web.directed_edges(), directed=True)
