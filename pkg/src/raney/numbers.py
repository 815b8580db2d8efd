"""Exact Raney and p-Catalan numbers.

Every count in this package is a plain Python ``int``; nothing here goes
through floating point. Four routes to the Raney number are provided so
they can be checked against one another:

* :func:`raney_closed` -- ``r/(np+r) * C(np+r, n)``
* :func:`raney_closed_alt` -- ``r/k * C(pk+r-1, k-1)`` (``k >= 1``)
* :func:`raney_composition_sum` -- a sum over strong compositions of ``k``
  of ``C(r, l1) C(p l1, l2) ... C(p l_{j-1}, l_j)`` (one factor per tier
  of a coral diagram)
* :func:`raney_convolution` -- the ``r``-fold convolution of p-Catalan
  numbers (one factor per base attachment site)
"""

from __future__ import annotations

from collections.abc import Iterator
from math import comb, prod

__all__ = [
    "binomial",
    "raney_closed",
    "raney_closed_alt",
    "p_catalan",
    "raney_composition_sum",
    "raney_convolution",
    "compositions",
    "weak_compositions",
]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


def _check_params(p: int, r: int) -> None:
    if p < 1 or r < 1:
        raise ValueError(f"p and r must be positive, got p={p}, r={r}")


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")


def raney_closed(p: int, r: int, n: int) -> int:
    """Raney number ``R_{p,r}(n) = r/(np+r) * C(np+r, n)``.

    >>> [raney_closed(4, 2, n) for n in range(4)]
    [1, 2, 9, 52]
    """
    _check_params(p, r)
    _check_k(n)
    m = n * p + r
    return _exact_div(r * binomial(m, n), m)


def raney_closed_alt(p: int, r: int, k: int) -> int:
    """``r/k * C(pk+r-1, k-1)``; only defined for ``k >= 1``."""
    _check_params(p, r)
    if k < 1:
        raise ValueError(f"raney_closed_alt needs k >= 1, got {k}")
    return _exact_div(r * binomial(p * k + r - 1, k - 1), k)


def p_catalan(p: int, k: int) -> int:
    """The k-th p-Catalan number ``C(pk, k-1)/k``, with the value 1 at k = 0.

    Counts full p-ary plane trees with ``k`` internal vertices.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    _check_k(k)
    if k == 0:
        return 1
    return _exact_div(binomial(p * k, k - 1), k)


def compositions(k: int) -> Iterator[tuple[int, ...]]:
    """Strong compositions of ``k`` in lexicographic order.

    ``k = 0`` yields only the empty composition.

    >>> list(compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    _check_k(k)
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for rest in compositions(k - first):
            yield (first, *rest)


def weak_compositions(k: int, r: int) -> Iterator[tuple[int, ...]]:
    """Length-``r`` weak compositions of ``k`` in lexicographic order.

    >>> list(weak_compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    _check_k(k)
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if r == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in weak_compositions(k - first, r - 1):
            yield (first, *rest)


def _tier_product(p: int, r: int, parts: tuple[int, ...]) -> int:
    # empty composition -> empty product
    sites = r
    out = 1
    for part in parts:
        out *= binomial(sites, part)
        sites = p * part
    return out


def raney_composition_sum(p: int, r: int, k: int) -> int:
    """Sum over strong compositions ``l`` of ``k`` of the tier products."""
    _check_params(p, r)
    return sum(_tier_product(p, r, lam) for lam in compositions(k))


def raney_convolution(p: int, r: int, k: int) -> int:
    """``r``-fold convolution of p-Catalan numbers evaluated at ``k``."""
    _check_params(p, r)
    cat = [p_catalan(p, i) for i in range(k + 1)]
    return sum(prod(cat[i] for i in w) for w in weak_compositions(k, r))
