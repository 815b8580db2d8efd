"""Coral diagrams of type (p, r).

A (p, r)-coral diagram is grown from a base vertex with ``r + 1`` edges by
repeatedly placing p-stars on terminal edges, never on the leftmost base
edge. As a plane tree: the root has ``r + 1`` children, the first of them a
leaf, and every other vertex has 0 or ``p`` children. The number of
non-root internal vertices is the star count ``k``.

Two independent generators are provided. :func:`enumerate_coral_tiered`
builds diagrams one tier of stars at a time (one tier per part of a strong
composition of ``k``); :func:`enumerate_coral_tuple` grafts an ``r``-tuple
of full p-ary trees onto the base. Both emit diagrams sorted by code.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .numbers import compositions
from .trees import PlaneTree, forest_codes

__all__ = [
    "DEFAULT_CAP",
    "SizeLimitError",
    "CoralDiagram",
    "coral_codes",
    "enumerate_coral_tiered",
    "coral_tiers",
    "enumerate_coral_tuple",
    "count_coral",
    "bijection_pp_to_p1",
    "coral_to_weak_composition",
    "check_size",
]

DEFAULT_CAP = 10**6


class SizeLimitError(RuntimeError):
    """An exhaustive enumeration would exceed the configured cap."""


def check_size(count: int, cap: int | None) -> None:
    if cap is not None and count > cap:
        raise SizeLimitError(f"enumeration of {count} objects exceeds cap {cap}")


def _check_coral_code(code, p: int, r: int, k: int) -> None:
    if code[0] != r + 1:
        raise ValueError(f"root must have {r + 1} children, has {code[0]}")
    if code[1] != 0:
        raise ValueError("leftmost base edge must end in a leaf")
    stars = 0
    for c in code[1:]:
        if c not in (0, p):
            raise ValueError(f"non-root vertex with {c} children (p={p})")
        stars += c != 0
    if stars != k:
        raise ValueError(f"expected {k} stars, found {stars}")


@dataclass(frozen=True, order=True)
class CoralDiagram:
    p: int
    r: int
    k: int
    tree: PlaneTree

    def __post_init__(self):
        if self.p < 1 or self.r < 1 or self.k < 0:
            raise ValueError(f"bad parameters p={self.p}, r={self.r}, k={self.k}")
        _check_coral_code(self.tree.code, self.p, self.r, self.k)

    @property
    def code(self) -> tuple[int, ...]:
        return self.tree.code

    @property
    def boundary_size(self) -> int:
        return self.r + 1 + self.k * (self.p - 1)


def _check_params(p: int, r: int, k: int) -> None:
    if p < 1 or r < 1:
        raise ValueError(f"p and r must be positive, got p={p}, r={r}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")


def coral_codes(p: int, r: int, k: int) -> Iterator[tuple[int, ...]]:
    """Sorted raw codes of all (p, r)-corals with ``k`` stars (tuple method).

    Cheap enough to stream hundreds of thousands of diagrams without
    building objects.
    """
    _check_params(p, r, k)
    head = (r + 1, 0)
    for rest in forest_codes(p, r, k):
        yield head + rest


def enumerate_coral_tuple(p: int, r: int, k: int) -> Iterator[CoralDiagram]:
    """One full p-ary tree on each of the ``r`` eligible base edges, with
    ``k`` stars in total over the tuple."""
    for code in coral_codes(p, r, k):
        yield CoralDiagram(p, r, k, PlaneTree(code, check=False))


def _nested_code(node: list) -> tuple[int, ...]:
    out = []
    stack = [node]
    while stack:
        cur = stack.pop()
        out.append(len(cur))
        stack.extend(reversed(cur))
    return tuple(out)


def _tiered_codes(p: int, r: int, parts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Mutable nested lists; each tier grows stars on a subset of the previous
    # tier's star tops and is undone on backtrack. Vertices not chosen drop
    # out of the frontier for good.
    base = [[] for _ in range(r + 1)]
    frontier = base[1:]

    def grow(tier: int, frontier: list) -> Iterator[tuple[int, ...]]:
        if tier == len(parts):
            yield _nested_code(base)
            return
        for chosen in combinations(frontier, parts[tier]):
            tops = []
            for site in chosen:
                site.extend([] for _ in range(p))
                tops.extend(site)
            yield from grow(tier + 1, tops)
            for site in chosen:
                site.clear()

    yield from grow(0, frontier)


def coral_tiers(p: int, r: int, k: int) -> dict[tuple[int, ...], list[CoralDiagram]]:
    """Tiered construction grouped by the composition that produced each
    diagram; a diagram's tier sizes are the composition's parts."""
    _check_params(p, r, k)
    out = {}
    for lam in compositions(k):
        out[lam] = [CoralDiagram(p, r, k, PlaneTree(c, check=False))
                    for c in _tiered_codes(p, r, lam)]
    return out


def enumerate_coral_tiered(p: int, r: int, k: int) -> Iterator[CoralDiagram]:
    """Tier-by-tier construction, emitted sorted by code."""
    tiers = coral_tiers(p, r, k)
    yield from sorted(d for group in tiers.values() for d in group)


def count_coral(p: int, r: int, k: int) -> int:
    """Number of (p, r)-coral diagrams with ``k`` stars, by enumeration."""
    return sum(1 for _ in coral_codes(p, r, k))


def bijection_pp_to_p1(d: CoralDiagram) -> CoralDiagram:
    """Subdivide the leftmost base edge and re-root at the new vertex.

    The old base becomes the single first-tier star of a (p, 1)-coral with
    one more star.
    """
    if d.r != d.p:
        raise ValueError(f"needs r == p, got p={d.p}, r={d.r}")
    # (p+1, 0, rest...) -> (2, 0, p, rest...)
    code = (2, 0, d.p) + d.code[2:]
    return CoralDiagram(d.p, 1, d.k + 1, PlaneTree(code, check=False))


def coral_to_weak_composition(d: CoralDiagram) -> tuple[int, ...]:
    """Chain length above each eligible base edge of a (1, r)-coral."""
    if d.p != 1:
        raise ValueError(f"needs p == 1, got p={d.p}")
    return tuple(child.internal_count for child in d.tree.children[1:])

