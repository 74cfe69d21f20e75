"""The free symmetric self-adjunction category K on one object.

Objects are natural numbers (the n-fold application of the endofunctor F to
the generating object).  Arrow terms are built from

    Id(n)    : n -> n
    Phi(n)   : n+2 -> n      counit
    Gamma(n) : n -> n+2      unit
    Chi(n)   : n+2 -> n+2    symmetry
    Fap(f)   : src+1 -> tgt+1
    Comp(g, f): src(f) -> tgt(g)

Equality of arrows is decided through SK diagrams: two arrows of the same
type are equal exactly when their translations into SK_omega are.

On the strand picture, F adds a strand at the high end and the subscript of
a generator counts the strands below it.  The monoidal product puts its
second argument on the low strands, so ``tensor(f, Id(k))`` shifts every
subscript of f by k while ``tensor(Id(k), f)`` is F^k f.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .diagram import SKDiagram
from .errors import ArrowTypeError, InputError
from .semantics import eval_iota, eval_kappa
from .terms import CAP, CROSS, CUP, Generator, Term


class ArrowTerm:
    src: int
    tgt: int

    def __str__(self) -> str:
        from .parsing import format_arrow

        return format_arrow(self)


def _nat(n, what: str) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(f"{what} needs a natural number, got {n!r}")
    return n


@dataclass(frozen=True, repr=True)
class Id(ArrowTerm):
    n: int
    src: int = field(init=False, compare=False, repr=False)
    tgt: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _nat(self.n, "Id")
        object.__setattr__(self, "src", self.n)
        object.__setattr__(self, "tgt", self.n)


@dataclass(frozen=True)
class Phi(ArrowTerm):
    n: int
    src: int = field(init=False, compare=False, repr=False)
    tgt: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _nat(self.n, "Phi")
        object.__setattr__(self, "src", self.n + 2)
        object.__setattr__(self, "tgt", self.n)


@dataclass(frozen=True)
class Gamma(ArrowTerm):
    n: int
    src: int = field(init=False, compare=False, repr=False)
    tgt: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _nat(self.n, "Gamma")
        object.__setattr__(self, "src", self.n)
        object.__setattr__(self, "tgt", self.n + 2)


@dataclass(frozen=True)
class Chi(ArrowTerm):
    n: int
    src: int = field(init=False, compare=False, repr=False)
    tgt: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _nat(self.n, "Chi")
        object.__setattr__(self, "src", self.n + 2)
        object.__setattr__(self, "tgt", self.n + 2)


@dataclass(frozen=True)
class Fap(ArrowTerm):
    f: ArrowTerm
    src: int = field(init=False, compare=False, repr=False)
    tgt: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.f, ArrowTerm):
            raise InputError(f"F applies to arrow terms, got {self.f!r}")
        object.__setattr__(self, "src", self.f.src + 1)
        object.__setattr__(self, "tgt", self.f.tgt + 1)


@dataclass(frozen=True)
class Comp(ArrowTerm):
    g: ArrowTerm
    f: ArrowTerm
    src: int = field(init=False, compare=False, repr=False)
    tgt: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not (isinstance(self.g, ArrowTerm) and isinstance(self.f, ArrowTerm)):
            raise InputError("composition needs two arrow terms")
        if self.f.tgt != self.g.src:
            raise ArrowTypeError(
                f"cannot compose {self.g} : {self.g.src} -> {self.g.tgt} "
                f"after {self.f} : {self.f.src} -> {self.f.tgt}"
            )
        object.__setattr__(self, "src", self.f.src)
        object.__setattr__(self, "tgt", self.g.tgt)


def comp(*arrows: ArrowTerm) -> ArrowTerm:
    """comp(h, g, f) = h o g o f."""
    if not arrows:
        raise InputError("comp needs at least one arrow")
    out = arrows[-1]
    for g in reversed(arrows[:-1]):
        out = Comp(g, out)
    return out


def fpow(f: ArrowTerm, k: int) -> ArrowTerm:
    for _ in range(k):
        f = Fap(f)
    return f


def kappa_arrow(n: int) -> ArrowTerm:
    return Comp(Phi(n), Gamma(n))


def typ(f: ArrowTerm) -> tuple[int, int]:
    return (f.src, f.tgt)


def max_object(f: ArrowTerm) -> int:
    """Largest object occurring as the source or target of a subterm."""
    if isinstance(f, Fap):
        return max(max_object(f.f) + 1, f.src, f.tgt)
    if isinstance(f, Comp):
        return max(max_object(f.g), max_object(f.f))
    return max(f.src, f.tgt)


# -- translations ---------------------------------------------------------------

def _psi_into(f: ArrowTerm, out: list) -> None:
    if isinstance(f, Comp):
        _psi_into(f.g, out)
        _psi_into(f.f, out)
    elif isinstance(f, Fap):
        _psi_into(f.f, out)
    elif isinstance(f, Phi):
        out.append(Generator(CUP, f.n + 1))
    elif isinstance(f, Gamma):
        out.append(Generator(CAP, f.n + 1))
    elif isinstance(f, Chi):
        out.append(Generator(CROSS, f.n + 1))
    elif not isinstance(f, Id):
        raise InputError(f"not an arrow term: {f!r}")


def psi(f: ArrowTerm) -> Term:
    out: list = []
    _psi_into(f, out)
    return Term(tuple(out))


def star(g: ArrowTerm, f: ArrowTerm) -> ArrowTerm:
    """Compose after padding the side with the smaller middle object by F."""
    n, k = f.tgt, g.src
    if n <= k:
        return Comp(g, fpow(f, k - n))
    return Comp(fpow(g, n - k), f)


_XI_GEN = {CUP: Phi, CAP: Gamma, CROSS: Chi}


def xi(t: Term) -> ArrowTerm:
    if not t.factors:
        return Id(0)
    arrows = [_XI_GEN[g.kind](g.index - 1) for g in t.factors]
    out = arrows[-1]
    for a in reversed(arrows[:-1]):
        out = star(a, out)
    return out


# -- equality --------------------------------------------------------------------

def kappa_of(f: ArrowTerm) -> SKDiagram:
    return eval_kappa(psi(f))


def equal_k(f: ArrowTerm, g: ArrowTerm) -> bool:
    return typ(f) == typ(g) and eval_kappa(psi(f)) == eval_kappa(psi(g))


def equal_j(f: ArrowTerm, g: ArrowTerm) -> bool:
    return typ(f) == typ(g) and eval_iota(psi(f)) == eval_iota(psi(g))


def equiv_k(f: ArrowTerm, g: ArrowTerm) -> bool:
    """Equality after padding both sides with F until the types agree."""
    if f.src - f.tgt != g.src - g.tgt:
        return False
    return eval_kappa(psi(f)) == eval_kappa(psi(g))


# -- monoidal structure ------------------------------------------------------------

def shift(f: ArrowTerm, k: int) -> ArrowTerm:
    """f (x) 1_k: add k strands below f."""
    if k == 0:
        return f
    if isinstance(f, Id):
        return Id(f.n + k)
    if isinstance(f, Phi):
        return Phi(f.n + k)
    if isinstance(f, Gamma):
        return Gamma(f.n + k)
    if isinstance(f, Chi):
        return Chi(f.n + k)
    if isinstance(f, Fap):
        return Fap(shift(f.f, k))
    if isinstance(f, Comp):
        return Comp(shift(f.g, k), shift(f.f, k))
    raise InputError(f"not an arrow term: {f!r}")


def tensor(f: ArrowTerm, g: ArrowTerm) -> ArrowTerm:
    if isinstance(g, Id):
        return shift(f, g.n)
    if isinstance(f, Id):
        return fpow(g, f.n)
    return Comp(fpow(g, f.tgt), shift(f, g.src))


def tensor_all(*arrows: ArrowTerm) -> ArrowTerm:
    out = arrows[0]
    for a in arrows[1:]:
        out = tensor(out, a)
    return out


def sym(n: int, m: int) -> ArrowTerm:
    """s_{n,m} : n (x) m -> m (x) n."""
    _nat(n, "sym")
    _nat(m, "sym")
    if n == 0 or m == 0:
        return Id(n + m)
    if m == 1:
        return Comp(tensor(sym(n - 1, 1), Id(1)), tensor(Id(n - 1), Chi(0)))
    return Comp(tensor(Id(m - 1), sym(n, 1)), tensor(sym(n, m - 1), Id(1)))


def epsilon(m: int, n: int) -> ArrowTerm:
    """eps_{m,n} : m (x) m (x) n -> n."""
    _nat(m, "epsilon")
    _nat(n, "epsilon")
    if m == 0:
        return Id(n)
    k = m - 1
    middle = tensor_all(Id(1), epsilon(k, n), Id(1))
    return comp(Phi(n), middle, tensor(sym(k, 1), Id(n + k + 1)))


def eta(m: int, n: int) -> ArrowTerm:
    """eta_{m,n} : n -> m (x) m (x) n."""
    _nat(m, "eta")
    _nat(n, "eta")
    if m == 0:
        return Id(n)
    k = m - 1
    middle = tensor_all(Id(1), eta(k, n), Id(1))
    return comp(tensor(sym(1, k), Id(n + k + 1)), middle, Gamma(n))


# -- enumeration ---------------------------------------------------------------------

def enumerate_arrows(max_index: int, max_size: int) -> list[ArrowTerm]:
    """All well-typed arrow terms with generator subscripts <= max_index and at
    most max_size constructor nodes, smallest first."""
    by_size: list[list[ArrowTerm]] = [[]]
    if max_size >= 1:
        by_size.append([c(n) for c in (Id, Phi, Gamma, Chi) for n in range(max_index + 1)])
    for size in range(2, max_size + 1):
        level = [Fap(f) for f in by_size[size - 1]]
        for a in range(1, size - 1):
            b = size - 1 - a
            by_src: dict[int, list[ArrowTerm]] = {}
            for g in by_size[a]:
                by_src.setdefault(g.src, []).append(g)
            for f in by_size[b]:
                for g in by_src.get(f.tgt, ()):
                    level.append(Comp(g, f))
        by_size.append(level)
    return [f for level in by_size for f in level]


def iter_generator_arrows(max_index: int) -> Iterator[ArrowTerm]:
    for n in range(max_index + 1):
        yield Phi(n)
        yield Gamma(n)
        yield Chi(n)


# -- equation instances -----------------------------------------------------------------

def small_arrows(max_object: int) -> list[ArrowTerm]:
    """Generators, identities and their F-images with all objects <= max_object."""
    out: list[ArrowTerm] = []
    for n in range(max_object + 1):
        for f in (Id(n), Phi(n), Gamma(n), Chi(n)):
            while max(f.src, f.tgt) <= max_object:
                out.append(f)
                f = Fap(f)
    return out


def axiom_instances(max_object: int = 3) -> Iterator[tuple[str, ArrowTerm, ArrowTerm]]:
    """The equations of a symmetric self-adjunction, instantiated at objects
    0..max_object, with naturality checked on ``small_arrows``."""
    F = Fap
    for a in range(max_object + 1):
        yield "phi gamma F", Comp(Phi(a + 1), F(Gamma(a))), Id(a + 1)
        yield "phi gamma G", Comp(F(Phi(a)), Gamma(a + 1)), Id(a + 1)
        yield "phi gamma", Comp(Phi(a + 1), F(Gamma(a))), Comp(F(Phi(a)), Gamma(a + 1))
        yield "chi chi", Comp(Chi(a), Chi(a)), Id(a + 2)
        yield ("chi chi chi", comp(Chi(a + 1), F(Chi(a)), Chi(a + 1)),
               comp(F(Chi(a)), Chi(a + 1), F(Chi(a))))
        yield "chi phi 1", Comp(Phi(a), Chi(a)), Phi(a)
        yield "chi gamma 1", Comp(Chi(a), Gamma(a)), Gamma(a)
        yield "chi phi 2", Comp(Phi(a + 1), F(Chi(a))), Comp(F(Phi(a)), Chi(a + 1))
        yield "chi gamma 2", Comp(Chi(a + 1), F(Gamma(a))), Comp(F(Chi(a)), Gamma(a + 1))
        yield "F kappa", F(kappa_arrow(a)), kappa_arrow(a + 1)
        yield "fun 1", F(Id(a)), Id(a + 1)
    for f in small_arrows(max_object):
        a, b = f.src, f.tgt
        yield "nat phi", Comp(f, Phi(a)), Comp(Phi(b), F(F(f)))
        yield "nat gamma", Comp(F(F(f)), Gamma(a)), Comp(Gamma(b), f)
        yield "nat chi", Comp(F(F(f)), Chi(a)), Comp(Chi(b), F(F(f)))
        yield "nat kappa", Comp(f, kappa_arrow(a)), Comp(kappa_arrow(b), f)
        yield "cat 1", Comp(Id(b), f), Comp(f, Id(a))


def subsided_instances_k(max_n: int = 3) -> Iterator[tuple[str, ArrowTerm, ArrowTerm]]:
    """The equations of a subsided category for the structure defined above,
    with objects up to max_n."""
    rng = range(max_n + 1)
    for a in rng:
        for b in rng:
            yield "s2", Comp(sym(b, a), sym(a, b)), Id(a + b)
            yield "eps eta 1", Comp(epsilon(a, a + b), tensor(Id(a), eta(a, b))), Id(a + b)
            yield "eps eta 2", Comp(tensor(Id(a), epsilon(a, b)), eta(a, a + b)), Id(a + b)
            yield "eps1", epsilon(a, b), Comp(epsilon(a, b), tensor(sym(a, a), Id(b)))
            yield "eta1", eta(a, b), Comp(tensor(sym(a, a), Id(b)), eta(a, b))
            for c in rng:
                yield "s3", sym(a + b, c), Comp(tensor(sym(a, c), Id(b)), tensor(Id(a), sym(b, c)))
                yield ("eps2", epsilon(a + b, c),
                       comp(epsilon(b, c), epsilon(a, 2 * b + c), tensor_all(Id(a), sym(b, a), Id(b + c))))
                yield ("eta2", eta(a + b, c),
                       comp(tensor_all(Id(a), sym(a, b), Id(b + c)), eta(a, 2 * b + c), eta(b, c)))
    gens = [f for f in small_arrows(2) if not isinstance(f, Id)]
    for f in gens:
        for g in gens:
            yield ("nat s", Comp(sym(f.tgt, g.tgt), tensor(f, g)),
                   Comp(tensor(g, f), sym(f.src, g.src)))
        for a in range(3):
            yield ("nat eps", Comp(f, epsilon(a, f.src)),
                   Comp(epsilon(a, f.tgt), tensor(Id(2 * a), f)))
            yield ("nat eta", Comp(eta(a, f.tgt), f),
                   Comp(tensor(Id(2 * a), f), eta(a, f.src)))
