"""The defining equations of SK_omega and the block equations used by the
rewriting procedure, written out as instantiable schemas.

Each schema names its index variables, an admissibility condition and the
two sides.  ``instances(max_index)`` yields every admissible instance with
all variables in 1..max_index.  The block schemas are transcribed
independently of the rewrite rules so that checking them against the
diagram semantics is a real cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .terms import (
    CIRCLE,
    UNIT,
    Term,
    block_cap,
    block_cross,
    block_cup,
    cap,
    cross,
    cup,
    dual_of,
)


@dataclass(frozen=True)
class Schema:
    family: str
    name: str
    variables: tuple[str, ...]
    condition: Callable[..., bool]
    lhs: Callable[..., Term]
    rhs: Callable[..., Term]


def _sigmas(first: int, last: int) -> Term:
    """sigma_first ... sigma_last, stepping up or down as needed."""
    step = 1 if last >= first else -1
    return Term.of(*(cross(x) for x in range(first, last + step, step)))


U, N, S = cup, cap, cross
BU, BN, BX = block_cup, block_cap, block_cross
T = Term.of


def _always(*_):
    return True


SCHEMAS: list[Schema] = [
    # cup-cap equations, j <= k
    Schema("cup-cap", "cup", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(U(k), U(j)), lambda j, k: T(U(j), U(k + 2))),
    Schema("cup-cap", "cap", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(N(j), N(k)), lambda j, k: T(N(k + 2), N(j))),
    Schema("cup-cap", "cup-cap 1", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(U(k + 2), N(j)), lambda j, k: T(N(j), U(k))),
    Schema("cup-cap", "cap-cup 1", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(U(j), N(k + 2)), lambda j, k: T(N(k), U(j))),
    Schema("cup-cap", "cup-cap", ("i",), _always,
           lambda i: T(U(i), N(i + 1)), lambda i: UNIT),
    # sigma equations
    Schema("sigma", "sigma", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(S(k + 2), S(j)), lambda j, k: T(S(j), S(k + 2))),
    Schema("sigma", "sigma2", ("i",), _always,
           lambda i: T(S(i), S(i)), lambda i: UNIT),
    Schema("sigma", "sigma3", ("i",), _always,
           lambda i: T(S(i + 1), S(i), S(i + 1)), lambda i: T(S(i), S(i + 1), S(i))),
    # sigma-cup and sigma-cap equations
    Schema("sigma-cup", "sigma-cup 1", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(U(k + 2), S(j)), lambda j, k: T(S(j), U(k + 2))),
    Schema("sigma-cup", "sigma-cup 2", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(U(j), S(k + 2)), lambda j, k: T(S(k), U(j))),
    Schema("sigma-cup", "sigma-cup 3", ("i",), _always,
           lambda i: T(U(i), S(i)), lambda i: U(i)),
    Schema("sigma-cup", "sigma-cup 4", ("i",), _always,
           lambda i: T(U(i + 1), S(i)), lambda i: T(U(i), S(i + 1))),
    Schema("sigma-cap", "sigma-cap 1", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(S(j), N(k + 2)), lambda j, k: T(N(k + 2), S(j))),
    Schema("sigma-cap", "sigma-cap 2", ("j", "k"), lambda j, k: j <= k,
           lambda j, k: T(S(k + 2), N(j)), lambda j, k: T(N(j), S(k))),
    Schema("sigma-cap", "sigma-cap 3", ("i",), _always,
           lambda i: T(S(i), N(i)), lambda i: N(i)),
    Schema("sigma-cap", "sigma-cap 4", ("i",), _always,
           lambda i: T(S(i), N(i + 1)), lambda i: T(S(i + 1), N(i))),
    # unit and circle equations
    Schema("unit-circle", "unit left", ("k",), _always,
           lambda k: T(UNIT, S(k)), lambda k: S(k)),
    Schema("unit-circle", "unit right", ("k",), _always,
           lambda k: T(N(k), UNIT), lambda k: N(k)),
    Schema("unit-circle", "circle index", ("k",), _always,
           lambda k: T(U(k), N(k)), lambda k: T(U(k + 1), N(k + 1))),
    Schema("unit-circle", "circle commutes with cup", ("k",), _always,
           lambda k: T(U(k), CIRCLE), lambda k: T(CIRCLE, U(k))),
    Schema("unit-circle", "circle commutes with cap", ("k",), _always,
           lambda k: T(N(k), CIRCLE), lambda k: T(CIRCLE, N(k))),
    Schema("unit-circle", "circle commutes with crossing", ("k",), _always,
           lambda k: T(S(k), CIRCLE), lambda k: T(CIRCLE, S(k))),
    # cup-block-cap equations
    Schema("cup-block-cap", "i", ("k", "i", "j"), lambda k, i, j: j <= i and k + 2 <= j,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: T(BN(i - 2, j - 2), U(k))),
    Schema("cup-block-cap", "ii.1", ("k", "i", "j"),
           lambda k, i, j: j <= i and k <= j <= k + 1 and k + 2 <= i,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: _sigmas(i - 2, k)),
    Schema("cup-block-cap", "ii.2", ("k", "i", "j"),
           lambda k, i, j: j <= i and k <= j <= k + 1 and i == k + 1,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: UNIT),
    Schema("cup-block-cap", "ii.3", ("k", "i", "j"),
           lambda k, i, j: j <= i and k <= j <= k + 1 and i == k,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: CIRCLE),
    Schema("cup-block-cap", "iii.1", ("k", "i", "j"),
           lambda k, i, j: j <= i and j <= k - 1 and k <= i - 1,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: T(BN(i - 2, j), U(k - 1))),
    Schema("cup-block-cap", "iii.2.1", ("k", "i", "j"),
           lambda k, i, j: j <= i and j <= k - 1 and i <= k <= i + 1 and j < k - 1,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: _sigmas(j, k - 2)),
    Schema("cup-block-cap", "iii.2.2", ("k", "i", "j"),
           lambda k, i, j: j <= i and i <= k <= i + 1 and j == k - 1,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: UNIT),
    Schema("cup-block-cap", "iii.3", ("k", "i", "j"),
           lambda k, i, j: j <= i and j <= k - 1 and i + 2 <= k,
           lambda k, i, j: T(U(k), BN(i, j)), lambda k, i, j: T(BN(i, j), U(k - 2))),
    # sigma-block-cap equations
    Schema("sigma-block-cap", "i", ("k", "i", "j"), lambda k, i, j: j <= i and k + 2 <= j,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: T(BN(i, j), S(k))),
    Schema("sigma-block-cap", "ii", ("k", "i", "j"), lambda k, i, j: j <= i and j == k + 1,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: BN(i, j - 1)),
    Schema("sigma-block-cap", "iii.1", ("k", "i", "j"), lambda k, i, j: j == k and j < i,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: BN(i, j + 1)),
    Schema("sigma-block-cap", "iii.2", ("k", "i", "j"), lambda k, i, j: j == k and i == j,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: BN(i, j)),
    Schema("sigma-block-cap", "iv.1", ("k", "i", "j"),
           lambda k, i, j: j <= i and j <= k - 1 and k + 1 <= i,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: T(BN(i, j), S(k - 1))),
    Schema("sigma-block-cap", "iv.2", ("k", "i", "j"), lambda k, i, j: j <= i and j <= k - 1 and i == k,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: BN(i - 1, j)),
    Schema("sigma-block-cap", "iv.3", ("k", "i", "j"), lambda k, i, j: j <= i and j <= k - 1 and i == k - 1,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: BN(i + 1, j)),
    Schema("sigma-block-cap", "iv.4", ("k", "i", "j"), lambda k, i, j: j <= i and j <= k - 1 and i <= k - 2,
           lambda k, i, j: T(S(k), BN(i, j)), lambda k, i, j: T(BN(i, j), S(k - 2))),
    # double block-cap equations, j <= l
    Schema("double-block-cap", "i", ("i", "j", "k", "l"),
           lambda i, j, k, l: j <= i and l <= k and j <= l and i <= l,
           lambda i, j, k, l: T(BN(i, j), BN(k, l)), lambda i, j, k, l: T(BN(k + 2, l + 2), BN(i, j))),
    Schema("double-block-cap", "ii", ("i", "j", "k", "l"),
           lambda i, j, k, l: j <= i and l <= k and j <= l and l + 1 <= i <= k + 1,
           lambda i, j, k, l: T(BN(i, j), BN(k, l)), lambda i, j, k, l: T(BN(k + 2, l + 1), BN(i - 1, j))),
    Schema("double-block-cap", "iii", ("i", "j", "k", "l"),
           lambda i, j, k, l: j <= i and l <= k and j <= l and k + 2 <= i,
           lambda i, j, k, l: T(BN(i, j), BN(k, l)), lambda i, j, k, l: T(BN(k + 1, l + 1), BN(i - 2, j))),
    # block-sigma equations, k <= i
    Schema("block-sigma", "i", ("i", "j", "k", "l"),
           lambda i, j, k, l: j <= i and l <= k <= i and k + 2 <= j,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: T(BX(k, l), BX(i, j))),
    Schema("block-sigma", "ii", ("i", "j", "k", "l"),
           lambda i, j, k, l: j <= i and l <= k <= i and j == k + 1,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: BX(i, l)),
    Schema("block-sigma", "iii.1", ("i", "j", "k", "l"),
           lambda i, j, k, l: l <= k <= i and j == k and j < i and l < k,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: T(BX(k - 1, l), BX(i, j + 1))),
    Schema("block-sigma", "iii.2", ("i", "j", "k", "l"),
           lambda i, j, k, l: l <= k <= i and j == k and j < i and l == k,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: BX(i, j + 1)),
    Schema("block-sigma", "iii.3", ("i", "j", "k", "l"),
           lambda i, j, k, l: l <= k <= i and j == k and j == i and l < k,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: BX(k - 1, l)),
    Schema("block-sigma", "iii.4", ("i", "j", "k", "l"),
           lambda i, j, k, l: l <= k <= i and j == k and j == i and l == k,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: UNIT),
    Schema("block-sigma", "iv.1", ("i", "j", "k", "l"),
           lambda i, j, k, l: j <= i and l <= k <= i and j <= k - 1 and l <= j,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: T(BX(k - 1, l), BX(i, j + 1))),
    Schema("block-sigma", "iv.2", ("i", "j", "k", "l"),
           lambda i, j, k, l: j <= i and l <= k <= i and j <= k - 1 and j < l,
           lambda i, j, k, l: T(BX(i, j), BX(k, l)), lambda i, j, k, l: T(BX(k - 1, l - 1), BX(i, j))),
]

# the rules used for cups are the mirror images of these two families
MIRRORED_FAMILIES = ("sigma-block-cap", "double-block-cap")


@dataclass(frozen=True)
class Instance:
    family: str
    name: str
    values: tuple[int, ...]
    lhs: Term
    rhs: Term

    def label(self) -> str:
        return f"{self.family} {self.name} {self.values}"


def instances(max_index: int = 6) -> Iterator[Instance]:
    for sch in SCHEMAS:
        for values in itertools.product(range(1, max_index + 1), repeat=len(sch.variables)):
            if not sch.condition(*values):
                continue
            lhs, rhs = sch.lhs(*values), sch.rhs(*values)
            yield Instance(sch.family, sch.name, values, lhs, rhs)
            if sch.family in MIRRORED_FAMILIES:
                yield Instance("mirror " + sch.family, sch.name, values, dual_of(lhs), dual_of(rhs))


def families() -> list[str]:
    seen = []
    for sch in SCHEMAS:
        for fam in [sch.family] + (["mirror " + sch.family] if sch.family in MIRRORED_FAMILIES else []):
            if fam not in seen:
                seen.append(fam)
    return seen
