"""Plane rooted trees and their canonical codes.

A plane tree is stored as its preorder child-count sequence, e.g. a root
with two leaf children is ``(2, 0, 0)``. Two trees are the same planar
embedding exactly when their codes are equal, so equality, hashing and
ordering all go through the code.

Vertices are addressed by their preorder index into the code.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property, lru_cache

__all__ = [
    "MalformedCodeError",
    "PlaneTree",
    "leaf",
    "node",
    "encode",
    "decode",
    "is_valid_code",
    "vertex_depths",
    "enumerate_pary_trees",
    "boundary_leaves",
    "edges",
    "pary_codes",
    "forest_codes",
    "to_dot",
    "format_code",
    "parse_code",
]


class MalformedCodeError(ValueError):
    """A child-count sequence that does not describe exactly one tree."""


def is_valid_code(code: Sequence[int]) -> bool:
    """True iff the running deficit ``1 + sum(c_i - 1)`` first hits 0 at the end."""
    deficit = 1
    for i, c in enumerate(code):
        if c < 0:
            return False
        deficit += c - 1
        if deficit == 0:
            return i == len(code) - 1
    return False


def vertex_depths(code: Sequence[int]) -> list[int]:
    """Depth of every vertex, in preorder. Assumes a valid code."""
    depths = []
    pending: list[int] = []  # unvisited children of each open ancestor
    for c in code:
        depths.append(len(pending))
        if c:
            pending.append(c)
            continue
        while pending:
            pending[-1] -= 1
            if pending[-1]:
                break
            pending.pop()
    return depths


class PlaneTree:
    """Immutable rooted tree with left-to-right ordered children."""

    def __init__(self, code: Iterable[int], *, check: bool = True):
        code = tuple(code)
        if check and not is_valid_code(code):
            raise MalformedCodeError(f"not a plane-tree code: {code}")
        self.code = code

    @classmethod
    def from_children(cls, children: Iterable[PlaneTree] = ()) -> PlaneTree:
        children = tuple(children)
        code = [len(children)]
        for child in children:
            code.extend(child.code)
        return cls(code, check=False)

    @cached_property
    def children(self) -> tuple[PlaneTree, ...]:
        out = []
        i = 1
        for _ in range(self.code[0]):
            j = _subtree_end(self.code, i)
            out.append(PlaneTree(self.code[i:j], check=False))
            i = j
        return tuple(out)

    @property
    def size(self) -> int:
        """Number of vertices."""
        return len(self.code)

    @property
    def internal_count(self) -> int:
        """Number of vertices with at least one child."""
        return sum(1 for c in self.code if c)

    def to_nested(self):
        """Nested-tuple form: a leaf is ``()``, a node the tuple of its children."""
        return tuple(child.to_nested() for child in self.children)

    @classmethod
    def from_nested(cls, nested) -> PlaneTree:
        code: list[int] = []
        stack = [nested]
        while stack:
            cur = stack.pop()
            code.append(len(cur))
            stack.extend(reversed(cur))
        return cls(code, check=False)

    def __eq__(self, other):
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.code == other.code

    def __lt__(self, other):
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.code < other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return f"PlaneTree({format_code(self.code)})"


def _subtree_end(code: Sequence[int], start: int) -> int:
    deficit = 1
    i = start
    while deficit:
        deficit += code[i] - 1
        i += 1
    return i


def leaf() -> PlaneTree:
    return PlaneTree((0,), check=False)


def node(*children: PlaneTree) -> PlaneTree:
    """Build a tree from its ordered children; ``node()`` is a leaf."""
    return PlaneTree.from_children(children)


def encode(t: PlaneTree) -> tuple[int, ...]:
    return t.code


def decode(code: Sequence[int]) -> PlaneTree:
    """Inverse of :func:`encode`; raises :class:`MalformedCodeError` on bad input."""
    return PlaneTree(code)


def format_code(code: Sequence[int]) -> str:
    return ",".join(map(str, code))


def parse_code(text: str) -> tuple[int, ...]:
    try:
        code = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise MalformedCodeError(f"not a comma-separated integer list: {text!r}") from exc
    if not is_valid_code(code):
        raise MalformedCodeError(f"not a plane-tree code: {text!r}")
    return code


# Full p-ary trees are generated as raw codes and memoized; the sorted order
# comes for free because codes are prefix-free, so concatenations of sorted
# pieces compare piece by piece.


@lru_cache(maxsize=None)
def pary_codes(p: int, j: int) -> tuple[tuple[int, ...], ...]:
    """Sorted codes of full p-ary plane trees with ``j`` internal vertices."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    if j == 0:
        return ((0,),)
    return tuple((p, *rest) for rest in forest_codes(p, p, j - 1))


@lru_cache(maxsize=None)
def _pary_codes_upto(p: int, j: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    pairs = [(code, size) for size in range(j + 1) for code in pary_codes(p, size)]
    pairs.sort()
    return tuple(pairs)


def forest_codes(p: int, slots: int, k: int) -> Iterator[tuple[int, ...]]:
    """Concatenated codes of ``slots`` full p-ary trees with ``k`` internal
    vertices in total, in sorted order."""
    if slots == 1:
        yield from pary_codes(p, k)
        return
    for code, size in _pary_codes_upto(p, k):
        for rest in forest_codes(p, slots - 1, k - size):
            yield code + rest


def enumerate_pary_trees(p: int, j: int) -> Iterator[PlaneTree]:
    """Every plane tree whose vertices have 0 or ``p`` children, with ``j``
    internal vertices, sorted by code."""
    for code in pary_codes(p, j):
        yield PlaneTree(code, check=False)


def boundary_leaves(t: PlaneTree) -> list[int]:
    """Preorder indices of the childless vertices, i.e. the terminal
    vertices in left-to-right planar order. A lone root is its own leaf."""
    return [i for i, c in enumerate(t.code) if c == 0]


def edges(t: PlaneTree) -> list[tuple[int, int]]:
    """(parent, child) preorder index pairs, in preorder of the child."""
    out = []
    stack: list[list[int]] = []  # [vertex, unvisited children]
    for i, c in enumerate(t.code):
        if stack:
            out.append((stack[-1][0], i))
            stack[-1][1] -= 1
            if not stack[-1][1]:
                stack.pop()
        if c:
            stack.append([i, c])
    return out


def to_dot(t: PlaneTree, name: str = "tree", labels: Sequence[str] | None = None,
           edge_list: Sequence[tuple[int, int]] | None = None, directed: bool = False) -> str:
    """Graphviz text for ``t``; ``ordering=out`` keeps the planar child order.

    ``edge_list`` overrides the parent-to-child edges (e.g. to draw
    orientations); ``labels`` gives one label per vertex.
    """
    arrow = "->" if directed else "--"
    kind = "digraph" if directed else "graph"
    lines = [f"{kind} {name} {{", "  ordering=out;", "  node [shape=point];"]
    for i in range(t.size):
        if labels is None:
            lines.append(f"  v{i};")
        else:
            lines.append(f'  v{i} [shape=circle, label="{labels[i]}"];')
    for a, b in (edges(t) if edge_list is None else edge_list):
        lines.append(f"  v{a} {arrow} v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
