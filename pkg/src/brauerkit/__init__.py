"""Diagram monoids SK_omega and SJ_omega, their normal forms, the free
symmetric self-adjunction on one object, and its matrix representation."""

from .adjunction import (
    ArrowTerm,
    Chi,
    Comp,
    Fap,
    Gamma,
    Id,
    Phi,
    enumerate_arrows,
    epsilon,
    equal_j,
    equal_k,
    equiv_k,
    eta,
    kappa_arrow,
    psi,
    star,
    sym,
    tensor,
    xi,
)
from .diagram import (
    Diagram,
    SKDiagram,
    canonicalize,
    cap_diag,
    compose,
    compose_sk,
    cross_diag,
    cup_diag,
    identity_diag,
    mirror,
)
from .errors import ArrowTypeError, DimensionCapError, InputError, RewriteBudgetExceeded
from .matrep import (
    BoolMatrix,
    IntMatrix,
    e_matrix,
    h_matrix,
    id_matrix,
    kron,
    matmul,
    rep_j,
    rep_k,
    s_matrix,
    transpose,
    verify_faithfulness,
    verify_subsided_mat,
)
from .parsing import format_arrow, parse_arrow, parse_term
from .render import render_ascii
from .rewrite import normalize_rewrite
from .semantics import (
    circle_pad_witness,
    equal_sj,
    equal_sk,
    eval_iota,
    eval_kappa,
    extract_normal_form,
)
from .terms import (
    BlockSpec,
    Generator,
    NormalForm,
    Term,
    dual_of,
    expand_block,
    nf_to_term,
)

__all__ = [name for name in dir() if not name.startswith("_")]
