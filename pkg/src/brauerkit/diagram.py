"""Finite encodings of SJ and SK diagrams.

A diagram is a partition of the nonzero integers into two-element threads
which, from some point on, consists only of the shift pairs {n+k, -(m+k)}.
We store the smallest explicit boundary: ``top`` points +1..+n, ``bottom``
points -1..-m and a perfect matching on them.  The remaining threads are
implied.  With the smallest (n, m) the encoding is unique, so structural
equality is diagram equality.

Orientation: the top line is the source and the bottom line the target.
``compose(d2, d1)`` stacks d1 above d2, which is the order that makes
iota(t u) = iota(t) o iota(u).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import InputError

Pair = tuple[int, int]


def _orient(a: int, b: int) -> Pair:
    if a > 0 and b > 0:
        return (a, b) if a < b else (b, a)
    if a < 0 and b < 0:
        return (a, b) if a > b else (b, a)
    return (a, b) if a > 0 else (b, a)


@dataclass(frozen=True)
class Diagram:
    top: int
    bottom: int
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        pairs = tuple(tuple(p) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        n, m = self.top, self.bottom
        if not (isinstance(n, int) and isinstance(m, int) and n >= 0 and m >= 0):
            raise InputError("diagram boundaries must be natural numbers")
        _check_matching(n, m, pairs)
        if pairs != tuple(sorted(_orient(a, b) for a, b in pairs)):
            raise InputError("diagram pairs are not in canonical orientation and order")
        if n >= 1 and m >= 1 and (n, -m) in pairs:
            raise InputError(f"diagram is not minimal: {{{n}, {-m}}} belongs to the tail")

    @classmethod
    def _trusted(cls, top: int, bottom: int, pairs: tuple[Pair, ...]) -> Diagram:
        d = object.__new__(cls)
        object.__setattr__(d, "top", top)
        object.__setattr__(d, "bottom", bottom)
        object.__setattr__(d, "pairs", pairs)
        return d

    @cached_property
    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def cups(self) -> list[Pair]:
        return [p for p in self.pairs if p[1] > 0]

    def caps(self) -> list[Pair]:
        return [p for p in self.pairs if p[0] < 0]

    def transversals(self) -> list[Pair]:
        return [p for p in self.pairs if p[0] > 0 > p[1]]

    def to_json(self) -> dict:
        return {"top": self.top, "bottom": self.bottom, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, obj: dict) -> Diagram:
        return cls(obj["top"], obj["bottom"], tuple(tuple(p) for p in obj["pairs"]))


@dataclass(frozen=True)
class SKDiagram:
    diagram: Diagram
    circles: int = 0

    def __post_init__(self):
        if not isinstance(self.circles, int) or self.circles < 0:
            raise InputError("circle count must be a natural number")

    def to_json(self) -> dict:
        out = self.diagram.to_json()
        out["circles"] = self.circles
        return out

    @classmethod
    def from_json(cls, obj: dict) -> SKDiagram:
        return cls(Diagram.from_json(obj), obj["circles"])


def _check_matching(n: int, m: int, pairs: Iterable[Pair]) -> None:
    seen = set()
    for p in pairs:
        if len(p) != 2:
            raise InputError(f"thread {p!r} does not have two ends")
        for x in p:
            if not isinstance(x, int) or x == 0 or x > n or x < -m:
                raise InputError(f"point {x!r} is outside the boundary ({n}, {m})")
            if x in seen:
                raise InputError(f"point {x} appears in two threads")
            seen.add(x)
    if len(seen) != n + m:
        raise InputError("threads do not cover every boundary point")


def _canonical(n: int, m: int, partner: dict[int, int]) -> Diagram:
    while n >= 1 and m >= 1 and partner.get(n) == -m:
        del partner[n]
        del partner[-m]
        n -= 1
        m -= 1
    pairs = sorted({_orient(a, b) for a, b in partner.items()})
    return Diagram._trusted(n, m, tuple(pairs))


def canonicalize(top: int, bottom: int, raw_pairs: Iterable[Iterable[int]]) -> Diagram:
    raw = [tuple(p) for p in raw_pairs]
    if top < 0 or bottom < 0:
        raise InputError("diagram boundaries must be natural numbers")
    _check_matching(top, bottom, raw)
    partner = {}
    for a, b in raw:
        partner[a] = b
        partner[b] = a
    return _canonical(top, bottom, partner)


@lru_cache(maxsize=None)
def identity_diag() -> Diagram:
    return Diagram._trusted(0, 0, ())


@lru_cache(maxsize=None)
def cup_diag(k: int) -> Diagram:
    if not isinstance(k, int) or k < 1:
        raise InputError(f"cup index must be positive, got {k!r}")
    pairs = [(i, -i) for i in range(1, k)] + [(k, k + 1)]
    return Diagram(k + 1, k - 1, tuple(sorted(pairs)))


@lru_cache(maxsize=None)
def cap_diag(k: int) -> Diagram:
    if not isinstance(k, int) or k < 1:
        raise InputError(f"cap index must be positive, got {k!r}")
    pairs = [(i, -i) for i in range(1, k)] + [(-k, -(k + 1))]
    return Diagram(k - 1, k + 1, tuple(sorted(pairs)))


@lru_cache(maxsize=None)
def cross_diag(k: int) -> Diagram:
    if not isinstance(k, int) or k < 1:
        raise InputError(f"crossing index must be positive, got {k!r}")
    pairs = [(i, -i) for i in range(1, k)] + [(k, -(k + 1)), (k + 1, -k)]
    return Diagram(k + 1, k + 1, tuple(sorted(pairs)))


def _padded(d: Diagram, x: int) -> int:
    """Partner of point x in d, with tail threads beyond the explicit boundary."""
    if x > d.top:
        return -(d.bottom + x - d.top)
    if x < -d.bottom:
        return d.top + (-x - d.bottom)
    return d.partner[x]


def compose(d2: Diagram, d1: Diagram, pad: int = 0) -> tuple[Diagram, int]:
    """Stack d1 on top of d2.  Returns the composite and the number of closed loops.

    ``pad`` adds that many extra tail threads to the middle line; the result
    does not depend on it.
    """
    s = max(d1.bottom, d2.top) + pad
    n = d1.top + s - d1.bottom
    m = d2.bottom + s - d2.top
    seen_mid = bytearray(s + 1)
    partner: dict[int, int] = {}

    def walk_from_d1(x: int) -> int:
        # x is a point of d1's top line; follow until leaving the middle
        y = _padded(d1, x)
        while y < 0:
            j = -y
            seen_mid[j] = 1
            z = _padded(d2, j)
            if z < 0:
                return z
            seen_mid[z] = 1
            y = _padded(d1, -z)
        return y

    def walk_from_d2(x: int) -> int:
        # x is a (negative) point of d2's bottom line
        y = _padded(d2, x)
        while y > 0:
            seen_mid[y] = 1
            z = _padded(d1, -y)
            if z > 0:
                return z
            seen_mid[-z] = 1
            y = _padded(d2, -z)
        return y

    for x in range(1, n + 1):
        if x not in partner:
            y = walk_from_d1(x)
            partner[x] = y
            partner[y] = x
    for x in range(-1, -m - 1, -1):
        if x not in partner:
            y = walk_from_d2(x)
            partner[x] = y
            partner[y] = x

    loops = 0
    for j in range(1, s + 1):
        if seen_mid[j]:
            continue
        loops += 1
        cur = j
        while not seen_mid[cur]:
            seen_mid[cur] = 1
            nxt = _padded(d2, cur)  # a middle point reached through a d2 cup
            seen_mid[nxt] = 1
            cur = -_padded(d1, -nxt)  # back through a d1 cap
    return _canonical(n, m, partner), loops


def compose_sk(k2: SKDiagram, k1: SKDiagram) -> SKDiagram:
    d, loops = compose(k2.diagram, k1.diagram)
    return SKDiagram(d, k1.circles + k2.circles + loops)


def mirror(d: Diagram) -> Diagram:
    partner = {}
    for a, b in d.pairs:
        partner[-a] = -b
        partner[-b] = -a
    return _canonical(d.bottom, d.top, partner)


def mirror_sk(k: SKDiagram) -> SKDiagram:
    return SKDiagram(mirror(k.diagram), k.circles)


def permutation_of(d: Diagram) -> tuple[int, ...] | None:
    """For a diagram without cups or caps, the image of each top point (1-based)."""
    if d.top != d.bottom or any(a * b > 0 for a, b in d.pairs):
        return None
    return tuple(-d.partner[i] for i in range(1, d.top + 1))


def permutation_diag(perm: Iterable[int]) -> Diagram:
    perm = list(perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InputError(f"{perm!r} is not a permutation of 1..{n}")
    return canonicalize(n, n, [(i + 1, -p) for i, p in enumerate(perm)])
