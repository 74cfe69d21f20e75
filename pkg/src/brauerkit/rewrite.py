"""Three-phase rewriting of terms into normal form.

Phase 1 turns caps into block-caps and pushes them left, collecting circles
at the far left.  Phase 2 does the same for cups on the right, using the
mirror images of the phase-1 rules.  Phase 3 sorts the remaining crossings
into block-crossings.  Within a phase the leftmost redex is always rewritten
first; since normal forms are unique, the strategy does not affect the
result.

Tokens are plain tuples:

    ("u", k) ("s", k)   cup and crossing generators
    ("N", i, j)         block-cap n[i,j]
    ("U", j, i)         block-cup u[j,i]
    ("X", i, j)         block-crossing x[i,j]
    ("c",)              circle
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence

from .errors import RewriteBudgetExceeded
from .terms import CAP, CROSS, CUP, NormalForm, Term

STEP_BUDGET = 10**7

Token = tuple
Rule = Callable[[Token, Token], Optional[list]]

C = ("c",)


def _N(i, j):
    return ("N", i, j)


def _u(k):
    return ("u", k)


def _s(k):
    return ("s", k)


# -- phase 1 -----------------------------------------------------------------

def cup_block_cap(k: int, i: int, j: int) -> list:
    """u_k n[i,j]."""
    if k + 2 <= j:
        return [_N(i - 2, j - 2), _u(k)]
    if k <= j <= k + 1:
        if k + 2 <= i:
            return [_s(x) for x in range(i - 2, k - 1, -1)]
        if i == k + 1:
            return []
        return [C]  # i == k
    # j <= k - 1
    if k <= i - 1:
        return [_N(i - 2, j), _u(k - 1)]
    if i <= k <= i + 1:
        if j < k - 1:
            return [_s(x) for x in range(j, k - 1)]
        return []  # j == k - 1
    return [_N(i, j), _u(k - 2)]  # i + 2 <= k


def sigma_block_cap(k: int, i: int, j: int) -> list:
    """s_k n[i,j]."""
    if k + 2 <= j:
        return [_N(i, j), _s(k)]
    if j == k + 1:
        return [_N(i, j - 1)]
    if j == k:
        return [_N(i, j + 1)] if j < i else [_N(i, j)]
    # j <= k - 1
    if k + 1 <= i:
        return [_N(i, j), _s(k - 1)]
    if i == k:
        return [_N(i - 1, j)]
    if i == k - 1:
        return [_N(i + 1, j)]
    return [_N(i, j), _s(k - 2)]  # i <= k - 2


def double_block_cap(i: int, j: int, k: int, l: int) -> list:
    """n[i,j] n[k,l] with j <= l."""
    if i <= l:
        return [_N(k + 2, l + 2), _N(i, j)]
    if l + 1 <= i <= k + 1:
        return [_N(k + 2, l + 1), _N(i - 1, j)]
    return [_N(k + 1, l + 1), _N(i - 2, j)]  # k + 2 <= i


def phase1_rule(a: Token, b: Token):
    if b is C or b == C:
        return None if a == C else [C, a]
    if b[0] != "N":
        return None
    _, i, j = b
    tag = a[0]
    if tag == "u":
        return cup_block_cap(a[1], i, j)
    if tag == "s":
        return sigma_block_cap(a[1], i, j)
    if tag == "N" and a[2] <= j:
        return double_block_cap(a[1], a[2], i, j)
    return None


# -- phase 2: mirror images of the sigma-block-cap and double block-cap rules

def _mirror_token(t: Token) -> Token:
    tag = t[0]
    if tag == "N":
        return ("U", t[2], t[1])
    if tag == "U":
        return ("N", t[2], t[1])
    return t


def _mirror_seq(seq: Sequence[Token]) -> list:
    return [_mirror_token(t) for t in reversed(seq)]


def phase2_rule(a: Token, b: Token):
    if a[0] != "U":
        return None
    if b[0] == "s":
        # u[j,i] s_k  is the mirror of  s_k n[i,j]
        _, j, i = a
        return _mirror_seq(sigma_block_cap(b[1], i, j))
    if b[0] == "U":
        # u[l,k] u[j,i] with j <= l  is the mirror of  n[i,j] n[k,l]
        _, l, k = a
        _, j, i = b
        if j <= l:
            return _mirror_seq(double_block_cap(i, j, k, l))
    return None


# -- phase 3 -----------------------------------------------------------------

def block_sigma(i: int, j: int, k: int, l: int) -> list:
    """x[i,j] x[k,l] with k <= i."""
    if k + 2 <= j:
        return [("X", k, l), ("X", i, j)]
    if j == k + 1:
        return [("X", i, l)]
    if j == k:
        if j < i and l < k:
            return [("X", k - 1, l), ("X", i, j + 1)]
        if j < i:
            return [("X", i, j + 1)]
        if l < k:
            return [("X", k - 1, l)]
        return []
    # j <= k - 1
    if l <= j:
        return [("X", k - 1, l), ("X", i, j + 1)]
    return [("X", k - 1, l - 1), ("X", i, j)]


def phase3_rule(a: Token, b: Token):
    if a[0] == "X" and b[0] == "X" and b[1] <= a[1]:
        return block_sigma(a[1], a[2], b[1], b[2])
    return None


# -- driver ------------------------------------------------------------------

def rewrite_to_fixpoint(seq: list, rule: Rule, budget: int = STEP_BUDGET) -> tuple[list, int]:
    """Rewrite the leftmost redex until none is left.  Returns (tokens, steps)."""
    steps = 0
    pos = 0
    while pos < len(seq) - 1:
        out = rule(seq[pos], seq[pos + 1])
        if out is None:
            pos += 1
            continue
        seq[pos:pos + 2] = out
        steps += 1
        if steps > budget:
            raise RewriteBudgetExceeded(f"normalization exceeded {budget} steps")
        # only the pair straddling the left edge of the replacement can be new
        pos = max(pos - 1, 0)
    return seq, steps


def normalize_rewrite(t: Term, budget: int = STEP_BUDGET) -> NormalForm:
    nf, _ = normalize_rewrite_counted(t, budget)
    return nf


def normalize_rewrite_counted(t: Term, budget: int = STEP_BUDGET) -> tuple[NormalForm, int]:
    seq = []
    for g in t.factors:
        if g.kind == CAP:
            seq.append(("N", g.index, g.index))
        else:
            seq.append((g.kind, g.index))
    seq, steps1 = rewrite_to_fixpoint(seq, phase1_rule, budget)

    n_circles = 0
    while n_circles < len(seq) and seq[n_circles] == C:
        n_circles += 1
    pos = n_circles
    caps = []
    while pos < len(seq) and seq[pos][0] == "N":
        caps.append((seq[pos][1], seq[pos][2]))
        pos += 1
    rest = seq[pos:]
    assert all(tok[0] in (CUP, CROSS) for tok in rest), rest

    rest = [("U", tok[1], tok[1]) if tok[0] == CUP else tok for tok in rest]
    rest, steps2 = rewrite_to_fixpoint(rest, phase2_rule, budget - steps1)
    split = 0
    while split < len(rest) and rest[split][0] == "s":
        split += 1
    cups = [(tok[1], tok[2]) for tok in rest[split:]]
    assert all(tok[0] == "U" for tok in rest[split:]), rest

    crossings = [("X", tok[1], tok[1]) for tok in rest[:split]]
    crossings, steps3 = rewrite_to_fixpoint(crossings, phase3_rule, budget - steps1 - steps2)

    nf = NormalForm(
        circles=n_circles,
        caps=tuple(reversed(caps)),
        crossings=tuple((tok[1], tok[2]) for tok in crossings),
        cups=tuple(cups),
    )
    return nf, steps1 + steps2 + steps3
