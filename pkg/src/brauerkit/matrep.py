"""Exact matrices, the Kronecker product, and the matrix representation of K.

An arrow m -> n of Mat is an n x m matrix; composition is matrix product and
the monoidal product is the Kronecker product.  ``IntMatrix`` keeps entries
exact: it computes with int64 (or float64 when every partial sum provably
stays below 2**53) and falls back to Python integers when a result might
overflow.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .adjunction import (
    ArrowTerm,
    Chi,
    Comp,
    Fap,
    Gamma,
    Id,
    Phi,
    enumerate_arrows,
    max_object,
    psi,
)
from .errors import DimensionCapError, InputError
from .semantics import eval_iota, eval_kappa
from .terms import CIRCLE

DEFAULT_DIM_CAP = 4096
_FLOAT_EXACT = 2**53
_INT64_SAFE = 2**62


def dimension_cap() -> int:
    raw = os.environ.get("BRAUERKIT_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"BRAUERKIT_DIM_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError("BRAUERKIT_DIM_CAP must be positive")
    return cap


def _as_array(data) -> np.ndarray:
    if isinstance(data, np.ndarray) and data.ndim == 2:
        arr = data
    else:
        arr = np.array(data, dtype=object)
        if arr.ndim != 2:
            raise InputError("matrix data must be two-dimensional")
    if arr.dtype == object:
        vals = [int(x) for x in arr.flat]
        if all(abs(v) < _INT64_SAFE for v in vals):
            return np.array(vals, dtype=np.int64).reshape(arr.shape)
        out = np.empty(arr.shape, dtype=object)
        out.flat[:] = vals
        return out
    if arr.dtype.kind in "iub":
        return arr.astype(np.int64)
    raise InputError(f"matrix entries must be integers, got dtype {arr.dtype}")


def _bound(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max(abs(int(x)) for x in arr.flat)
    return int(np.abs(arr).max())


@dataclass(frozen=True, eq=False)
class IntMatrix:
    data: np.ndarray
    rows: int = field(init=False)
    cols: int = field(init=False)

    def __post_init__(self):
        arr = _as_array(self.data)
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "rows", arr.shape[0])
        object.__setattr__(self, "cols", arr.shape[1])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(np.zeros((rows, cols), dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.data == other.data))

    def __hash__(self):
        return hash((self.shape, self.key()))

    def key(self) -> bytes:
        if self.data.dtype == object:
            return repr(self.tolist()).encode()
        return self.data.tobytes()

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def __getitem__(self, ij) -> int:
        return int(self.data[ij])

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return matmul(self, other)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": [[str(x) for x in row] for row in self.tolist()]}

    @classmethod
    def from_json(cls, obj: dict) -> IntMatrix:
        data = [[int(x) for x in row] for row in obj["data"]]
        arr = np.array(data, dtype=object).reshape(obj["rows"], obj["cols"])
        return cls(arr)


@dataclass(frozen=True, eq=False)
class BoolMatrix:
    """0-1 matrices with the semiring in which 1 + 1 = 1."""

    data: np.ndarray
    rows: int = field(init=False)
    cols: int = field(init=False)

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2:
            raise InputError("matrix data must be two-dimensional")
        if arr.dtype != bool:
            if arr.size and not np.isin(arr, (0, 1)).all():
                raise InputError("boolean matrix entries must be 0 or 1")
            arr = arr.astype(bool)
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "rows", arr.shape[0])
        object.__setattr__(self, "cols", arr.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.data == other.data))

    def __hash__(self):
        return hash((self.shape, self.key()))

    def key(self) -> bytes:
        return np.packbits(self.data).tobytes()

    def tolist(self) -> list[list[int]]:
        return self.data.astype(int).tolist()

    def __matmul__(self, other: BoolMatrix) -> BoolMatrix:
        return matmul(self, other)

    def __repr__(self) -> str:
        return f"BoolMatrix({self.tolist()!r})"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": [[str(x) for x in row] for row in self.tolist()]}


def to_bool(a: IntMatrix) -> BoolMatrix:
    return BoolMatrix(a.data != 0)


# -- basic operations --------------------------------------------------------------

def matmul(a, b):
    if a.cols != b.rows:
        raise InputError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if isinstance(a, BoolMatrix) and isinstance(b, BoolMatrix):
        if a.data.size == 0 or b.data.size == 0:
            return BoolMatrix(np.zeros((a.rows, b.cols), dtype=bool))
        prod = a.data.astype(np.float64) @ b.data.astype(np.float64)
        return BoolMatrix(prod > 0)
    if isinstance(a, BoolMatrix) or isinstance(b, BoolMatrix):
        raise InputError("cannot mix integer and boolean matrices")
    if a.cols == 0:
        return IntMatrix.zeros(a.rows, b.cols)
    bound = _bound(a.data) * _bound(b.data) * a.cols
    if a.data.dtype != object and b.data.dtype != object:
        if bound < _FLOAT_EXACT:
            prod = a.data.astype(np.float64) @ b.data.astype(np.float64)
            return IntMatrix(np.rint(prod).astype(np.int64))
        if bound < _INT64_SAFE:
            return IntMatrix(a.data @ b.data)
    return IntMatrix(a.data.astype(object) @ b.data.astype(object))


def kron(a, b):
    if isinstance(a, BoolMatrix) and isinstance(b, BoolMatrix):
        return BoolMatrix(np.kron(a.data, b.data).astype(bool) if a.data.size and b.data.size
                          else np.zeros((a.rows * b.rows, a.cols * b.cols), dtype=bool))
    if isinstance(a, BoolMatrix) or isinstance(b, BoolMatrix):
        raise InputError("cannot mix integer and boolean matrices")
    if a.data.size == 0 or b.data.size == 0:
        return IntMatrix.zeros(a.rows * b.rows, a.cols * b.cols)
    if a.data.dtype != object and b.data.dtype != object and _bound(a.data) * _bound(b.data) < _INT64_SAFE:
        return IntMatrix(np.kron(a.data, b.data))
    return IntMatrix(np.kron(a.data.astype(object), b.data.astype(object)))


def transpose(a):
    return type(a)(a.data.T.copy())


def id_matrix(n: int) -> IntMatrix:
    return IntMatrix(np.eye(n, dtype=np.int64))


def s_matrix(m: int, n: int) -> IntMatrix:
    """The permutation m (x) n -> n (x) m, an nm x mn matrix."""
    size = m * n
    out = np.zeros((size, size), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            out[(i - 1) * m + j - 1, (j - 1) * n + i - 1] = 1
    return IntMatrix(out)


def e_matrix(m: int, n: int) -> IntMatrix:
    """The pairing m (x) m (x) n -> n, an n x m^2 n matrix."""
    row = np.zeros((1, m * m), dtype=np.int64)
    for i in range(m):
        row[0, i * m + i] = 1
    return kron(IntMatrix(row), id_matrix(n))


def h_matrix(m: int, n: int) -> IntMatrix:
    return transpose(e_matrix(m, n))


# -- the representation ---------------------------------------------------------------

def _check_cap(f: ArrowTerm, p: int, dim_cap: int | None) -> None:
    if not isinstance(p, int) or p < 2:
        raise InputError(f"dimension parameter p must be an integer >= 2, got {p!r}")
    cap = dimension_cap() if dim_cap is None else dim_cap
    top = max_object(f)
    if p**top > cap:
        raise DimensionCapError(
            f"representing this arrow needs {p}^{top} = {p**top} rows/columns, above the cap of {cap}"
        )


def _rep(f: ArrowTerm, p: int, memo: dict, conv: Callable) -> object:
    hit = memo.get(f)
    if hit is not None:
        return hit
    if isinstance(f, Id):
        out = conv(id_matrix(p**f.n))
    elif isinstance(f, Phi):
        out = conv(e_matrix(p, p**f.n))
    elif isinstance(f, Gamma):
        out = conv(h_matrix(p, p**f.n))
    elif isinstance(f, Chi):
        out = conv(kron(s_matrix(p, p), id_matrix(p**f.n)))
    elif isinstance(f, Fap):
        out = kron(conv(id_matrix(p)), _rep(f.f, p, memo, conv))
    elif isinstance(f, Comp):
        out = matmul(_rep(f.g, p, memo, conv), _rep(f.f, p, memo, conv))
    else:
        raise InputError(f"not an arrow term: {f!r}")
    memo[f] = out
    return out


def rep_k(f: ArrowTerm, p: int = 2, dim_cap: int | None = None, memo: dict | None = None) -> IntMatrix:
    _check_cap(f, p, dim_cap)
    return _rep(f, p, {} if memo is None else memo, lambda m: m)


def rep_j(f: ArrowTerm, p: int = 2, dim_cap: int | None = None, memo: dict | None = None) -> BoolMatrix:
    _check_cap(f, p, dim_cap)
    return _rep(f, p, {} if memo is None else memo, to_bool)


# -- verification sweeps --------------------------------------------------------------

@dataclass
class FaithfulnessReport:
    arrows: int = 0
    types: int = 0
    pairs: int = 0
    classes_k: int = 0
    mismatches: list = field(default_factory=list)
    circle_values: list = field(default_factory=list)
    circles_distinct: bool = False
    classes_j: int = 0
    mismatches_j: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.circles_distinct

    def summary(self) -> str:
        return (
            f"arrows={self.arrows} types={self.types} pairs={self.pairs} "
            f"K-classes={self.classes_k} mismatches={len(self.mismatches)} "
            f"circles={self.circle_values} distinct={self.circles_distinct} "
            f"J-classes={self.classes_j} J-mismatches={len(self.mismatches_j)}"
        )


def _partition_mismatches(items: Sequence[tuple[ArrowTerm, object, object]]) -> list:
    """items are (arrow, matrix key, diagram key).  Returns pairs of arrows on
    which the two equivalence relations disagree."""
    by_mat: dict = {}
    by_diag: dict = {}
    out = []
    for f, mk, dk in items:
        g = by_mat.setdefault(mk, (f, dk))
        if g[1] != dk:
            out.append((g[0], f, "same matrix, different diagrams"))
        h = by_diag.setdefault(dk, (f, mk))
        if h[1] != mk:
            out.append((h[0], f, "same diagram, different matrices"))
    return out


def verify_faithfulness(max_index: int = 2, max_size: int = 5, p: int = 2,
                        max_circles: int = 8, dim_cap: int | None = None) -> FaithfulnessReport:
    report = FaithfulnessReport()
    arrows = [f for f in enumerate_arrows(max_index, max_size)
              if p ** max_object(f) <= (dimension_cap() if dim_cap is None else dim_cap)]
    report.arrows = len(arrows)
    memo_k: dict = {}
    memo_j: dict = {}
    groups: dict[tuple[int, int], list[ArrowTerm]] = {}
    for f in arrows:
        groups.setdefault((f.src, f.tgt), []).append(f)
    report.types = len(groups)
    for members in groups.values():
        report.pairs += len(members) * (len(members) - 1) // 2
        items_k = []
        items_j = []
        for f in members:
            term = psi(f)
            items_k.append((f, rep_k(f, p, dim_cap, memo_k).key(), eval_kappa(term)))
            items_j.append((f, rep_j(f, p, dim_cap, memo_j).key(), eval_iota(term)))
        report.classes_k += len({dk for _, _, dk in items_k})
        report.classes_j += len({dk for _, _, dk in items_j})
        report.mismatches.extend(_partition_mismatches(items_k))
        report.mismatches_j.extend(_partition_mismatches(items_j))

    circle = Comp(Phi(0), Gamma(0))
    values = []
    acc: ArrowTerm = Id(0)
    for k in range(max_circles + 1):
        m = rep_k(acc, p, dim_cap)
        values.append(m.tolist())
        if k == 0:
            acc = circle
        else:
            acc = Comp(circle, acc)
    report.circle_values = [v[0][0] for v in values]
    report.circles_distinct = (
        all(v == [[p**k]] for k, v in enumerate(values))
        and len(set(report.circle_values)) == len(values)
    )
    assert psi(circle) == CIRCLE
    return report


@dataclass
class SubsidedReport:
    checks: int = 0
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        per = " ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return f"checks={self.checks} failures={len(self.failures)} [{per}]"


def _random_matrix(rng: random.Random, rows: int, cols: int) -> IntMatrix:
    return IntMatrix(np.array([[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)],
                              dtype=np.int64).reshape(rows, cols))


def subsided_instances(a: int, b: int, c: int, d: int, f: IntMatrix, g: IntMatrix):
    """Yield (name, lhs, rhs) for every equation, at objects a, b, c, d and
    arrows f : a -> b, g : c -> d."""
    I = id_matrix
    S, E, H = s_matrix, e_matrix, h_matrix

    def k(*ms):
        out = ms[0]
        for x in ms[1:]:
            out = kron(out, x)
        return out

    yield "nat s", S(b, d) @ kron(f, g), kron(g, f) @ S(a, c)
    yield "s2", S(b, a) @ S(a, b), I(a * b)
    yield "s3", S(a * b, c), k(S(a, c), I(b)) @ k(I(a), S(b, c))
    # f : a -> b used as an arrow B -> C with A = c
    yield "nat eps", f @ E(c, a), E(c, b) @ k(I(c * c), f)
    yield "nat eta", H(c, b) @ f, k(I(c * c), f) @ H(c, a)
    yield "eps eta 1", E(a, a * b) @ k(I(a), H(a, b)), I(a * b)
    yield "eps eta 2", k(I(a), E(a, b)) @ H(a, a * b), I(a * b)
    yield "eps1", E(a, b), E(a, b) @ k(S(a, a), I(b))
    yield "eps2", E(a * b, c), E(b, c) @ E(a, b * b * c) @ k(I(a), S(b, a), I(b * c))
    yield "eta1", H(a, b), k(S(a, a), I(b)) @ H(a, b)
    yield "eta2", H(a * b, c), k(I(a), S(a, b), I(b * c)) @ H(a, b * b * c) @ H(b, c)
    yield "compact 1", k(E(a, 1), I(a)) @ k(I(a), H(a, 1)), I(a)
    yield "compact 2", k(I(a), E(a, 1)) @ k(H(a, 1), I(a)), I(a)


def verify_subsided_mat(max_dim: int = 4, trials: int = 200, seed: int = 0) -> SubsidedReport:
    rng = random.Random(seed)
    report = SubsidedReport()
    for _ in range(trials):
        a, b, c, d = (rng.randint(1, max_dim) for _ in range(4))
        f = _random_matrix(rng, b, a)
        g = _random_matrix(rng, d, c)
        for name, lhs, rhs in subsided_instances(a, b, c, d, f, g):
            report.checks += 1
            report.counts[name] = report.counts.get(name, 0) + 1
            if lhs != rhs:
                report.failures.append((name, a, b, c, d))
    return report
