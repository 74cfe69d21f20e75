"""Reference implementations that share no code with the package.

``stack_kappa`` evaluates a term by drawing every generator as a full layer
of strands on a finite window and gluing the layers with union-find.
``word_permutation`` multiplies transpositions directly.
"""

from __future__ import annotations

import numpy as np


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def stack_kappa(factors, width=None):
    """factors: sequence of (kind, index) read left to right as a term.

    Returns (top_width, bottom_width, partner, loops) where partner maps every
    window point (+i top, -i bottom) to its partner.  The window is wide
    enough that the tail beyond it is made of straight threads.
    """
    factors = list(factors)
    max_k = max((k for _, k in factors), default=0)
    w = width if width is not None else max_k + 2 + 2 * len(factors)
    uf = UnionFind()
    layer_top = [("L", 0, i) for i in range(1, w + 1)]
    current = layer_top
    nodes = set(layer_top)
    level = 0
    # the rightmost factor is on top
    for kind, k in reversed(factors):
        level += 1
        n = len(current)
        if kind == "u":
            assert n >= k + 1
            uf.union(current[k - 1], current[k])
            below = [("L", level, i) for i in range(1, n - 1)]
            rest = current[: k - 1] + current[k + 1:]
            for a, b in zip(rest, below):
                uf.union(a, b)
        elif kind == "n":
            assert n >= k - 1
            below = [("L", level, i) for i in range(1, n + 3)]
            uf.union(below[k - 1], below[k])
            rest = below[: k - 1] + below[k + 1:]
            for a, b in zip(current, rest):
                uf.union(a, b)
        else:
            assert n >= k + 1
            below = [("L", level, i) for i in range(1, n + 1)]
            perm = list(range(n))
            perm[k - 1], perm[k] = perm[k], perm[k - 1]
            for i, j in enumerate(perm):
                uf.union(current[i], below[j])
        nodes.update(below)
        current = below
    top = {("L", 0, i): i for i in range(1, w + 1)}
    bottom = {node: -(i + 1) for i, node in enumerate(current)}
    ends = {}
    for node, label in list(top.items()) + list(bottom.items()):
        ends.setdefault(uf.find(node), []).append(label)
    partner = {}
    for labels in ends.values():
        assert len(labels) == 2, labels
        a, b = labels
        partner[a] = b
        partner[b] = a
    roots = {uf.find(x) for x in nodes}
    loops = len(roots) - len(ends)
    return w, len(current), partner, loops


def diagram_partner(d, x):
    """Partner of x in a package Diagram, following the tail."""
    if x > d.top:
        return -(d.bottom + x - d.top)
    if x < -d.bottom:
        return d.top + (-x - d.bottom)
    for a, b in d.pairs:
        if a == x:
            return b
        if b == x:
            return a
    raise KeyError(x)


def matches_window(sk, factors) -> bool:
    w_top, w_bot, partner, loops = stack_kappa(factors)
    d = sk.diagram
    if w_top - w_bot != d.top - d.bottom:
        return False
    if loops != sk.circles:
        return False
    return all(diagram_partner(d, x) == y for x, y in partner.items())


def word_permutation(ks, n):
    """Image of each strand under s_{k_1} ... s_{k_r}, rightmost applied first."""
    pos = list(range(1, n + 1))  # pos[i] = where the strand starting at top i+1 currently is
    for k in reversed(ks):
        for i, p in enumerate(pos):
            if p == k:
                pos[i] = k + 1
            elif p == k + 1:
                pos[i] = k
    return tuple(pos)


def swap_matrix(m: int, n: int) -> np.ndarray:
    """The matrix sending x (x) y to y (x) x, built from basis vectors."""
    out = np.zeros((m * n, m * n), dtype=np.int64)
    for a in range(m):
        for b in range(n):
            x = np.zeros(m, dtype=np.int64)
            y = np.zeros(n, dtype=np.int64)
            x[a] = 1
            y[b] = 1
            out[:, int(np.argmax(np.kron(x, y)))] = np.kron(y, x)
    return out
