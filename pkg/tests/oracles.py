"""Brute-force reference implementations used only by the tests.

They share no code with the package beyond plain tuples.
"""

from itertools import product


def _valid(code):
    deficit = 1
    for i, c in enumerate(code):
        deficit += c - 1
        if deficit == 0:
            return i == len(code) - 1
    return False


def brute_corals(p, r, k):
    """All (p, r)-coral codes with k stars, by sweeping every child-count
    sequence over {0, p} and keeping those that are trees of the right shape."""
    n = 1 + (r + 1) + p * k
    out = set()
    for tail in product((0, p), repeat=n - 1):
        code = (r + 1, *tail)
        if code[1] == 0 and sum(1 for c in tail if c) == k and _valid(code):
            out.add(code)
    return out


def brute_full_trees(p, j):
    """Codes of trees with j internal vertices, each with exactly p children."""
    n = 1 + p * j
    return {code for code in product((0, p), repeat=n)
            if sum(1 for c in code if c) == j and _valid(code)}


def adjacency(code):
    """Undirected edge list of a code, found by an explicit parent stack."""
    edges, stack = [], []
    for v, c in enumerate(code):
        if stack:
            parent = stack[-1]
            edges.append((parent[0], v))
            parent[1] -= 1
            if parent[1] == 0:
                stack.pop()
        if c:
            stack.append([v, c])
    return edges


def brute_orientations(code, word):
    """Every coherent edge orientation whose degree-1 vertices read `word`.

    Returns a list of class strings ('o' source / 'i' sink per vertex).
    """
    edges = adjacency(code)
    n = len(code)
    degree = [0] * n
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    boundary = [v for v in range(n) if degree[v] <= 1]
    assert len(boundary) == len(word)
    found = []
    for bits in product((0, 1), repeat=len(edges)):
        out_deg = [0] * n
        for (a, b), flip in zip(edges, bits):
            out_deg[b if flip else a] += 1
        classes = []
        for v in range(n):
            if out_deg[v] == degree[v]:
                classes.append("o")
            elif out_deg[v] == 0:
                classes.append("i")
            else:
                break
        else:
            if all((classes[v] == "i") == (s == "+") for v, s in zip(boundary, word)):
                found.append("".join(classes))
    return found
