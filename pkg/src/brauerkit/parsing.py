"""Text syntax for terms and arrow terms.

Terms::

    term   := factor+
    factor := u<k> | n<k> | s<k> | 1 | c
            | u[j,i] | n[i,j] | x[i,j] | ( term )

``u`` is a cup, ``n`` a cap, ``s`` a crossing; ``c`` is the circle u1 n1.
Block forms expand to generators.  Factors are read left to right.

Arrow terms::

    arrow  := factor ( o factor )*
    factor := id<n> | phi<n> | gamma<n> | chi<n> | F( arrow ) | ( arrow )

``g o f`` means g after f; a chain ``h o g o f`` nests to the right.
"""

from __future__ import annotations

import re

from .adjunction import ArrowTerm, Chi, Comp, Fap, Gamma, Id, Phi
from .errors import InputError
from .terms import (
    BLOCK_CAP,
    BLOCK_CROSS,
    BLOCK_CUP,
    CIRCLE,
    BlockSpec,
    Generator,
    Term,
    expand_block,
)

_TERM_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<block>[unx])\[\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*\]
  | (?P<gen>[uns])(?P<k>\d+)
  | (?P<unit>1)(?!\d)
  | (?P<circle>c)
  | (?P<lp>\()
  | (?P<rp>\))
    """,
    re.VERBOSE,
)


_KINDS = ("ws", "block", "gen", "unit", "circle", "F", "o", "lp", "rp")


def _tokenize(text: str, pattern: re.Pattern, what: str) -> list[tuple[str, re.Match]]:
    kinds = [name for name in pattern.groupindex if name in _KINDS]
    out = []
    pos = 0
    while pos < len(text):
        m = pattern.match(text, pos)
        if m is None:
            raise InputError(f"unexpected character {text[pos]!r} in {what}", pos)
        kind = next(name for name in kinds if m.group(name) is not None)
        if kind != "ws":
            out.append((kind, m))
        pos = m.end()
    return out


def _positive(m: re.Match, group: str) -> int:
    k = int(m.group(group))
    if k < 1:
        raise InputError("generator and block indices must be at least 1", m.start(group))
    return k


def parse_term(text: str) -> Term:
    tokens = _tokenize(text, _TERM_TOKEN, "term")
    factors: list[Generator] = []
    depth_stack: list[int] = []
    seen_factor = [False]
    for kind, m in tokens:
        if kind == "lp":
            depth_stack.append(m.start())
            seen_factor.append(False)
            continue
        if kind == "rp":
            if not depth_stack:
                raise InputError("unmatched ')'", m.start())
            if not seen_factor.pop():
                raise InputError("empty parentheses", m.start())
            depth_stack.pop()
            seen_factor[-1] = True
            continue
        seen_factor[-1] = True
        if kind == "gen":
            factors.append(Generator(m.group("gen"), _positive(m, "k")))
        elif kind == "unit":
            pass
        elif kind == "circle":
            factors.extend(CIRCLE.factors)
        elif kind == "block":
            letter = m.group("block")
            a, b = _positive(m, "a"), _positive(m, "b")
            if letter == "u":
                lo, hi, block = a, b, BLOCK_CUP
            else:
                hi, lo, block = a, b, BLOCK_CAP if letter == "n" else BLOCK_CROSS
            if lo > hi:
                raise InputError(f"block {m.group(0)!r} needs its low index <= its high index", m.start())
            factors.extend(expand_block(BlockSpec(block, hi, lo)).factors)
    if depth_stack:
        raise InputError("unclosed '('", depth_stack[-1])
    if not seen_factor[0]:
        raise InputError("empty term (write 1 for the unit)", 0)
    return Term(tuple(factors))


# -- arrow terms ---------------------------------------------------------------------

_ARROW_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>id|phi|gamma|chi)(?P<n>\d+)
  | (?P<F>F)\s*\(
  | (?P<o>o)(?![A-Za-z0-9])
  | (?P<lp>\()
  | (?P<rp>\))
    """,
    re.VERBOSE,
)

_ARROW_GEN = {"id": Id, "phi": Phi, "gamma": Gamma, "chi": Chi}


class _ArrowParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text, _ARROW_TOKEN, "arrow term")
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1].start() if self.i < len(self.tokens) else len(self.text)

    def take(self, kind: str):
        if self.peek() != kind:
            found = self.peek() or "end of input"
            raise InputError(f"expected {kind!r}, found {found!r}", self.pos())
        tok = self.tokens[self.i][1]
        self.i += 1
        return tok

    def arrow(self) -> ArrowTerm:
        parts = [self.factor()]
        while self.peek() == "o":
            self.take("o")
            parts.append(self.factor())
        out = parts[-1]
        for g in reversed(parts[:-1]):
            out = Comp(g, out)
        return out

    def factor(self) -> ArrowTerm:
        kind = self.peek()
        if kind == "gen":
            m = self.take("gen")
            return _ARROW_GEN[m.group("gen")](int(m.group("n")))
        if kind == "F":
            self.take("F")
            inner = self.arrow()
            self.take("rp")
            return Fap(inner)
        if kind == "lp":
            self.take("lp")
            inner = self.arrow()
            self.take("rp")
            return inner
        found = kind or "end of input"
        raise InputError(f"expected an arrow term, found {found!r}", self.pos())


def parse_arrow(text: str) -> ArrowTerm:
    p = _ArrowParser(text)
    out = p.arrow()
    if p.peek() is not None:
        raise InputError(f"unexpected {p.peek()!r} after arrow term", p.pos())
    return out


def format_arrow(f: ArrowTerm) -> str:
    if isinstance(f, Id):
        return f"id{f.n}"
    if isinstance(f, Phi):
        return f"phi{f.n}"
    if isinstance(f, Gamma):
        return f"gamma{f.n}"
    if isinstance(f, Chi):
        return f"chi{f.n}"
    if isinstance(f, Fap):
        return f"F({format_arrow(f.f)})"
    if isinstance(f, Comp):
        left = format_arrow(f.g)
        if isinstance(f.g, Comp):
            left = f"({left})"
        return f"{left} o {format_arrow(f.f)}"
    raise InputError(f"not an arrow term: {f!r}")
