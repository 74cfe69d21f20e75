"""Terms of the monoid SK_omega and their block abbreviations.

A term is a finite word in three families of generators: cups ``u_k``,
caps ``n_k`` and crossings ``s_k`` (k >= 1).  The empty word is the unit.
Juxtaposition is the monoid product, so associativity and the unit laws
hold on the nose.

Block generators abbreviate runs of crossings attached to a cup, a cap, or
another crossing:

    block-cup   u[j,i] = u_j s_{j+1} ... s_i
    block-cap   n[i,j] = s_i ... s_{j+1} n_j
    block-cross x[i,j] = s_i s_{i-1} ... s_j

with j <= i in every case.  Subscripts are written in the same order as in
the usual notation, so ``u[j,i]`` lists the low index first while ``n[i,j]``
and ``x[i,j]`` list the high index first.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError

CUP = "u"
CAP = "n"
CROSS = "s"
KINDS = (CUP, CAP, CROSS)


class Generator(NamedTuple):
    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def gen(kind: str, index: int) -> Generator:
    if kind not in KINDS:
        raise InputError(f"unknown generator kind {kind!r}")
    if not isinstance(index, int) or index < 1:
        raise InputError(f"generator index must be a positive integer, got {index!r}")
    return Generator(kind, index)


@dataclass(frozen=True)
class Term:
    """An element of the free monoid on cups, caps and crossings."""

    factors: tuple[Generator, ...] = ()

    def __post_init__(self):
        for g in self.factors:
            if not isinstance(g, Generator) or g.kind not in KINDS or g.index < 1:
                raise InputError(f"invalid generator {g!r}")

    @classmethod
    def of(cls, *factors: Generator | Term) -> Term:
        out: list[Generator] = []
        for f in factors:
            if isinstance(f, Term):
                out.extend(f.factors)
            else:
                out.append(f)
        return cls(tuple(out))

    def __mul__(self, other: Term) -> Term:
        if not isinstance(other, Term):
            return NotImplemented
        return Term(self.factors + other.factors)

    def __pow__(self, n: int) -> Term:
        return Term(self.factors * n)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __str__(self) -> str:
        return format_term(self)

    def __repr__(self) -> str:
        return f"Term({format_term(self)!r})"


UNIT = Term()


def cup(k: int) -> Term:
    return Term((gen(CUP, k),))


def cap(k: int) -> Term:
    return Term((gen(CAP, k),))


def cross(k: int) -> Term:
    return Term((gen(CROSS, k),))


# the circle; every u_k n_k is equal to it, index 1 is the stored representative
CIRCLE = Term((Generator(CUP, 1), Generator(CAP, 1)))


def circles(n: int) -> Term:
    return CIRCLE ** n


def format_term(t: Term) -> str:
    if not t.factors:
        return "1"
    return " ".join(str(g) for g in t.factors)


def dual_of(t: Term) -> Term:
    """Mirror image: reverse the word and swap cups with caps."""
    swap = {CUP: CAP, CAP: CUP, CROSS: CROSS}
    return Term(tuple(Generator(swap[g.kind], g.index) for g in reversed(t.factors)))


# -- blocks ------------------------------------------------------------------

BLOCK_CUP = "block_cup"
BLOCK_CAP = "block_cap"
BLOCK_CROSS = "block_cross"


@dataclass(frozen=True)
class BlockSpec:
    kind: str
    hi: int
    lo: int

    def __post_init__(self):
        if self.kind not in (BLOCK_CUP, BLOCK_CAP, BLOCK_CROSS):
            raise InputError(f"unknown block kind {self.kind!r}")
        if not (1 <= self.lo <= self.hi):
            raise InputError(f"block needs 1 <= lo <= hi, got lo={self.lo}, hi={self.hi}")

    def __str__(self) -> str:
        if self.kind == BLOCK_CUP:
            return f"u[{self.lo},{self.hi}]"
        letter = "n" if self.kind == BLOCK_CAP else "x"
        return f"{letter}[{self.hi},{self.lo}]"


def expand_block(spec: BlockSpec) -> Term:
    i, j = spec.hi, spec.lo
    if spec.kind == BLOCK_CUP:
        gens = [Generator(CUP, j)] + [Generator(CROSS, x) for x in range(j + 1, i + 1)]
    elif spec.kind == BLOCK_CAP:
        gens = [Generator(CROSS, x) for x in range(i, j, -1)] + [Generator(CAP, j)]
    else:
        gens = [Generator(CROSS, x) for x in range(i, j - 1, -1)]
    return Term(tuple(gens))


def block_cup(lo: int, hi: int) -> Term:
    return expand_block(BlockSpec(BLOCK_CUP, hi, lo))


def block_cap(hi: int, lo: int) -> Term:
    return expand_block(BlockSpec(BLOCK_CAP, hi, lo))


def block_cross(hi: int, lo: int) -> Term:
    return expand_block(BlockSpec(BLOCK_CROSS, hi, lo))


# -- normal forms ------------------------------------------------------------

Pair = tuple[int, int]


@dataclass(frozen=True)
class NormalForm:
    """c^l  n[i_p,j_p] ... n[i_1,j_1]  x[k_1,l_1] ... x[k_q,l_q]  u[m_1,n_1] ... u[m_r,n_r]

    ``caps`` holds the pairs (i, j) sorted by increasing j, so it is stored in
    the reverse of display order.  ``crossings`` holds (k, l) sorted by k and
    ``cups`` holds (m, n) sorted by m; both are in display order.  Each pair is
    written in the subscript order of its block, so caps and crossings are
    (hi, lo) and cups are (lo, hi).
    """

    circles: int = 0
    caps: tuple[Pair, ...] = ()
    crossings: tuple[Pair, ...] = ()
    cups: tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "caps", tuple(tuple(p) for p in self.caps))
        object.__setattr__(self, "crossings", tuple(tuple(p) for p in self.crossings))
        object.__setattr__(self, "cups", tuple(tuple(p) for p in self.cups))
        if not isinstance(self.circles, int) or self.circles < 0:
            raise InputError("circle count must be a natural number")
        for hi, lo in self.caps + self.crossings:
            if not 1 <= lo <= hi:
                raise InputError(f"bad block subscripts ({hi},{lo})")
        for lo, hi in self.cups:
            if not 1 <= lo <= hi:
                raise InputError(f"bad block-cup subscripts ({lo},{hi})")
        if not _strictly_increasing([j for _, j in self.caps]):
            raise InputError("cap blocks need strictly increasing lower indices")
        if not _strictly_increasing([k for k, _ in self.crossings]):
            raise InputError("crossing blocks need strictly increasing upper indices")
        if not _strictly_increasing([m for m, _ in self.cups]):
            raise InputError("cup blocks need strictly increasing lower indices")

    @property
    def is_unit(self) -> bool:
        return not (self.circles or self.caps or self.crossings or self.cups)

    def blocks(self) -> list[BlockSpec]:
        """Blocks in display order (circles excluded)."""
        out = [BlockSpec(BLOCK_CAP, i, j) for i, j in reversed(self.caps)]
        out += [BlockSpec(BLOCK_CROSS, k, l) for k, l in self.crossings]
        out += [BlockSpec(BLOCK_CUP, n, m) for m, n in self.cups]
        return out

    def __str__(self) -> str:
        parts = ["c"] * self.circles + [str(b) for b in self.blocks()]
        return " ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {
            "circles": self.circles,
            "caps": [list(p) for p in self.caps],
            "crossings": [list(p) for p in self.crossings],
            "cups": [list(p) for p in self.cups],
        }


def _strictly_increasing(xs: list[int]) -> bool:
    return all(a < b for a, b in zip(xs, xs[1:]))


def nf_to_term(nf: NormalForm) -> Term:
    parts = [CIRCLE] * nf.circles + [expand_block(b) for b in nf.blocks()]
    return Term.of(*parts)


# -- corpora -----------------------------------------------------------------

def all_generators(max_index: int) -> list[Generator]:
    return [Generator(kind, k) for kind in KINDS for k in range(1, max_index + 1)]


def enumerate_terms(max_index: int, max_len: int) -> Iterator[Term]:
    """Every term over generators of index <= max_index, shortest first."""
    gens = all_generators(max_index)
    for n in range(max_len + 1):
        for word in itertools.product(gens, repeat=n):
            yield Term(word)


def random_term(rng: random.Random, max_index: int, max_len: int) -> Term:
    n = rng.randint(0, max_len)
    return Term(tuple(Generator(rng.choice(KINDS), rng.randint(1, max_index)) for _ in range(n)))


def random_terms(seed: int, count: int, max_index: int, max_len: int) -> list[Term]:
    rng = random.Random(seed)
    return [random_term(rng, max_index, max_len) for _ in range(count)]


def index_bound(terms: Iterable[Term]) -> int:
    return max((g.index for t in terms for g in t.factors), default=0)
