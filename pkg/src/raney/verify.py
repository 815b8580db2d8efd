"""Machine checks of every counting identity and bijection.

Each suite runs exhaustively over a fixed desk-scale range and reports a
pass flag plus the number of individual checks made. ``k_max`` trims every
``k`` range for quick runs.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass
from math import prod

from . import coral, numbers, trees, webs
from .coral import DEFAULT_CAP


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str = ""


class _Check:
    def __init__(self):
        self.count = 0
        self.failures: list[str] = []

    def __call__(self, ok: bool, what: str) -> None:
        self.count += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(what)


def _krange(default_max: int, k_max: int | None, start: int = 0) -> range:
    top = default_max if k_max is None else min(default_max, k_max)
    return range(start, top + 1)


def triple_identity(check, k_max, cap):
    for p in range(1, 6):
        for r in range(1, 6):
            for k in _krange(8, k_max):
                vals = [numbers.raney_closed(p, r, k),
                        numbers.raney_composition_sum(p, r, k),
                        numbers.raney_convolution(p, r, k)]
                if k >= 1:
                    vals.append(numbers.raney_closed_alt(p, r, k))
                check(len(set(vals)) == 1, f"R({p},{r},{k}): {vals}")


def catalan_recurrence(check, k_max, cap):
    c = [numbers.raney_closed(2, 1, n) for n in range(14)]
    check(c[0] == 1, "c_0 != 1")
    for n in range(13):
        rhs = sum(c[i] * c[n - i] for i in range(n + 1))
        check(c[n + 1] == rhs, f"c_{n + 1}={c[n + 1]} vs {rhs}")


def weak_composition_closed_form(check, k_max, cap):
    for r in range(1, 7):
        for k in _krange(10, k_max):
            check(numbers.raney_closed(1, r, k) == numbers.binomial(k + r - 1, k), f"R(1,{r},{k})")


def pp_shift_identity(check, k_max, cap):
    for p in range(1, 7):
        for k in _krange(8, k_max):
            check(numbers.raney_closed(p, p, k) == numbers.raney_closed(p, 1, k + 1), f"p={p} k={k}")


def composition_streams(check, k_max, cap):
    for k in _krange(10, k_max):
        comps = list(numbers.compositions(k))
        check(len(set(comps)) == len(comps), f"duplicate compositions of {k}")
        check(len(comps) == (2 ** (k - 1) if k else 1), f"count of compositions of {k}")
        check(all(sum(c) == k and min(c, default=1) >= 1 for c in comps), f"bad composition of {k}")
        check(comps == sorted(comps), f"compositions of {k} not lexicographic")
    for r in range(1, 6):
        for k in _krange(8, k_max):
            ws = list(numbers.weak_compositions(k, r))
            check(len(set(ws)) == len(ws) == numbers.binomial(k + r - 1, r - 1), f"weak({k},{r}) count")
            check(all(len(w) == r and sum(w) == k and min(w) >= 0 for w in ws), f"weak({k},{r}) shape")


def pary_tree_counts(check, k_max, cap):
    for p in range(1, 5):
        for j in _krange(6, k_max):
            ts = list(trees.enumerate_pary_trees(p, j))
            check(len(ts) == len(set(ts)) == numbers.p_catalan(p, j), f"|pary({p},{j})|")
            check(all(trees.is_valid_code(t.code) for t in ts), f"invalid code in pary({p},{j})")
            check(all(len(trees.boundary_leaves(t)) == j * (p - 1) + 1 for t in ts if t.size > 1),
                  f"leaf count in pary({p},{j})")


def _coral_ranges(k_max):
    for p in range(1, 4):
        for r in range(1, 4):
            for k in _krange(5, k_max):
                yield p, r, k
    for k in _krange(4, k_max):
        yield 4, 2, k


def coral_generator_agreement(check, k_max, cap):
    for p, r, k in _coral_ranges(k_max):
        tiered = [d.code for d in coral.enumerate_coral_tiered(p, r, k)]
        tupled = [d.code for d in coral.enumerate_coral_tuple(p, r, k)]
        expected = numbers.raney_closed(p, r, k)
        check(tiered == tupled, f"({p},{r},{k}) generators differ")
        check(len(set(tupled)) == len(tupled) == expected, f"({p},{r},{k}) count != {expected}")
        check(all(len(trees.boundary_leaves(trees.PlaneTree(c))) == r + 1 + k * (p - 1) for c in tupled),
              f"({p},{r},{k}) boundary size")


def tier_decomposition(check, k_max, cap):
    for p, r, k in _coral_ranges(k_max):
        for lam, group in coral.coral_tiers(p, r, k).items():
            sites = (r,) + tuple(p * part for part in lam[:-1])
            summand = prod(numbers.binomial(n, part) for n, part in zip(sites, lam))
            check(len(group) == summand, f"({p},{r},{k}) tier {lam}")


def bijection_pp_to_p1(check, k_max, cap):
    for p in range(1, 4):
        for k in _krange(4, k_max):
            image = [coral.bijection_pp_to_p1(d).code for d in coral.enumerate_coral_tuple(p, p, k)]
            target = [d.code for d in coral.enumerate_coral_tuple(p, 1, k + 1)]
            check(len(set(image)) == len(image), f"p={p} k={k} not injective")
            check(set(image) == set(target), f"p={p} k={k} image != target")


def bijection_weak_composition(check, k_max, cap):
    for r in range(1, 6):
        for k in _krange(8, k_max):
            image = [coral.coral_to_weak_composition(d) for d in coral.enumerate_coral_tuple(1, r, k)]
            check(sorted(image) == list(numbers.weak_compositions(k, r)), f"r={r} k={k}")
            check(len(image) == numbers.binomial(k + r - 1, k), f"r={r} k={k} count")


def sourcesink_oracle(check, k_max, cap):
    for p, top in ((2, 4), (3, 1)):
        for k in _krange(top, k_max):
            built = list(webs.enumerate_sourcesink_trees(p, k))
            filtered = list(webs.sourcesink_trees_by_filter(p, k, cap))
            expected = numbers.raney_closed(p * p, p, k)
            check(len(built) == len(filtered) == expected,
                  f"p={p} k={k}: {len(built)}, {len(filtered)}, {expected}")
            check([w.code for w in built] == [w.code for w in filtered], f"p={p} k={k} code sets")
            for w in built:
                again = webs.orient_with_word(w.tree, w.boundary, p)
                check(again is not None and again.classes == w.classes, f"p={p} k={k} idempotence")
                check(len(w.boundary) == webs.boundary_length(p, k), f"p={p} k={k} boundary length")


def a2_minus_word(check, k_max, cap):
    for k in _krange(3, k_max):
        found = list(webs.enumerate_a2_tree_webs_minus(k, cap))
        check(len(found) == numbers.raney_closed(4, 1, k), f"k={k}: {len(found)}")


def code_roundtrip(check, k_max, cap):
    rng = random.Random(20240917)
    for _ in range(10_000):
        nested = random_nested_tree(rng, rng.randint(1, 40))
        code = trees.encode(trees.PlaneTree.from_nested(nested))
        check(trees.is_valid_code(code) and trees.decode(code).to_nested() == nested, f"{nested}")


def random_nested_tree(rng: random.Random, size: int):
    """Random plane tree with ``size`` vertices as nested tuples, grown by
    inserting each new vertex at a random slot under a random parent."""
    kids: list[list[int]] = [[]]
    for v in range(1, size):
        parent = rng.randrange(v)
        kids[parent].insert(rng.randint(0, len(kids[parent])), v)
        kids.append([])

    def build(v):
        return tuple(build(c) for c in kids[v])

    return build(0)


SUITES: list[tuple[str, Callable]] = [
    ("triple-identity", triple_identity),
    ("catalan-recurrence", catalan_recurrence),
    ("weak-composition-closed-form", weak_composition_closed_form),
    ("pp-shift-identity", pp_shift_identity),
    ("composition-streams", composition_streams),
    ("pary-tree-counts", pary_tree_counts),
    ("coral-generator-agreement", coral_generator_agreement),
    ("tier-decomposition", tier_decomposition),
    ("bijection-pp-to-p1", bijection_pp_to_p1),
    ("bijection-weak-composition", bijection_weak_composition),
    ("sourcesink-oracle", sourcesink_oracle),
    ("a2-minus-word", a2_minus_word),
    ("code-roundtrip", code_roundtrip),
]


def run_suites(k_max: int | None = None, cap: int | None = DEFAULT_CAP) -> list[SuiteResult]:
    results = []
    for name, suite in SUITES:
        check = _Check()
        try:
            suite(check, k_max, cap)
        except Exception as exc:  # a crash is a failed suite, not a crashed report
            check(False, f"{type(exc).__name__}: {exc}")
        results.append(SuiteResult(name, not check.failures, check.count, "; ".join(check.failures)))
    return results
