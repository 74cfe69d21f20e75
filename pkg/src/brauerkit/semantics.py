"""Evaluation of terms as diagrams, extraction of normal forms from diagrams,
and the equality procedures for SK_omega and SJ_omega."""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .diagram import (
    Diagram,
    SKDiagram,
    _canonical,
    cap_diag,
    compose,
    cross_diag,
    cup_diag,
    identity_diag,
)
from .terms import CAP, CIRCLE, CROSS, CUP, Generator, NormalForm, Term

_GEN_DIAG = {CUP: cup_diag, CAP: cap_diag, CROSS: cross_diag}


def generator_diag(g: Generator) -> Diagram:
    return _GEN_DIAG[g.kind](g.index)


def eval_kappa(t: Term) -> SKDiagram:
    acc = identity_diag()
    circles = 0
    for g in t.factors:
        acc, loops = compose(acc, generator_diag(g))
        circles += loops
    return SKDiagram(acc, circles)


def eval_iota(t: Term) -> Diagram:
    return eval_kappa(t).diagram


# -- extraction ----------------------------------------------------------------

def _extract_cups(n: int, m: int, partner: dict[int, int]):
    """Pull maximal cups off the top.  Returns recorded (lo, hi) block-cups in
    extraction order and the remaining boundary."""
    found = []
    while True:
        cups = [(a, b) for a, b in partner.items() if 0 < a < b]
        if not cups:
            return found, n
        lo, right = max(cups)
        hi = right - 1
        found.append((lo, hi))
        del partner[lo]
        del partner[right]

        def shift(x: int) -> int:
            if x <= 0 or x < lo:
                return x
            if x <= hi:
                return x - 1
            return x - 2

        new = {shift(a): shift(b) for a, b in partner.items()}
        partner.clear()
        partner.update(new)
        n -= 2


def _mirror_partner(partner: dict[int, int]) -> dict[int, int]:
    return {-a: -b for a, b in partner.items()}


def extract_normal_form(sk: SKDiagram) -> NormalForm:
    d = sk.diagram
    partner = dict(d.partner)
    n, m = d.top, d.bottom

    cups, n = _extract_cups(n, m, partner)
    # caps are cups of the mirror image
    mirrored = _mirror_partner(partner)
    caps, m = _extract_cups(m, n, mirrored)
    partner = _mirror_partner(mirrored)

    # what remains is a permutation of max(n, m) points with tail threads
    size = max(n, m)
    perm = {}
    for x in range(1, size + 1):
        perm[x] = -partner[x] if x in partner else x
    crossings = []
    while True:
        falling = [(b, a) for a, b in perm.items() if a < b]
        if not falling:
            break
        bottom, l = max(falling)
        k = bottom - 1
        crossings.append((k, l))
        new = {}
        for x, y in perm.items():
            if l + 1 <= x <= k + 1:
                new[x - 1] = y
            elif x != l:
                new[x] = y
        new[k + 1] = k + 1
        perm = new

    return NormalForm(
        circles=sk.circles,
        caps=tuple((hi, lo) for lo, hi in reversed(caps)),
        crossings=tuple(reversed(crossings)),
        cups=tuple(reversed(cups)),
    )


def normalize_diagram(t: Term) -> NormalForm:
    return extract_normal_form(eval_kappa(t))


# -- equality ------------------------------------------------------------------

def equal_sk(t: Term, u: Term) -> bool:
    return eval_kappa(t) == eval_kappa(u)


def equal_sj(t: Term, u: Term) -> bool:
    return eval_iota(t) == eval_iota(u)


def circle_pad_witness(t: Term, u: Term) -> Optional[tuple[int, int]]:
    """Smallest (n, m) with c^n t = c^m u in SK_omega, or None if t != u in SJ_omega."""
    kt, ku = eval_kappa(t), eval_kappa(u)
    if kt.diagram != ku.diagram:
        return None
    if kt.circles <= ku.circles:
        return (ku.circles - kt.circles, 0)
    return (0, kt.circles - ku.circles)
