"""Verification suites shared by the CLI and the test-suite."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from . import adjunction as adj
from .catalogue import instances
from .diagram import SKDiagram, permutation_diag, permutation_of
from .errors import InputError
from .matrep import verify_faithfulness, verify_subsided_mat
from .rewrite import normalize_rewrite
from .semantics import eval_iota, eval_kappa, extract_normal_form
from .terms import NormalForm, Term, cross, enumerate_terms, nf_to_term, random_terms


@dataclass
class SuiteReport:
    name: str
    lines: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, label: str, passed: bool, detail: str = "") -> None:
        self.lines.append(f"{'PASS' if passed else 'FAIL'} {label}" + (f": {detail}" if detail else ""))
        if not passed:
            self.failures.append(label)

    def render(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failure(s)"
        return "\n".join(self.lines + [f"suite {self.name}: {status} in {self.seconds:.2f}s"]) + "\n"


# -- engine agreement -----------------------------------------------------------------

def nf_corpus(max_index: int = 3, max_len: int = 5, seed: int = 0,
              random_count: int = 2000, random_index: int = 6, random_len: int = 12) -> list[Term]:
    return list(enumerate_terms(max_index, max_len)) + random_terms(seed, random_count, random_index, random_len)


def engine_disagreements(terms, limit: int = 20) -> tuple[int, list[tuple[Term, NormalForm, NormalForm]]]:
    bad = []
    count = 0
    for t in terms:
        sk = eval_kappa(t)
        a = normalize_rewrite(t)
        b = extract_normal_form(sk)
        if a != b:
            count += 1
            if len(bad) < limit:
                bad.append((t, a, b))
    return count, bad


def catalogue_failures(max_index: int = 6) -> tuple[int, list[str]]:
    n = 0
    bad = []
    for ins in instances(max_index):
        n += 1
        if eval_kappa(ins.lhs) != eval_kappa(ins.rhs):
            bad.append(ins.label())
    return n, bad


def suite_nf(max_index: int = 3, max_len: int = 5, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("nf")
    start = time.perf_counter()
    corpus = nf_corpus(max_index, max_len, seed)
    count = 0
    round_trip_bad = 0
    bad_examples = []
    for t in corpus:
        sk = eval_kappa(t)
        a = normalize_rewrite(t)
        b = extract_normal_form(sk)
        if a != b:
            count += 1
            if len(bad_examples) < 3:
                bad_examples.append(f"{t} -> {a} vs {b}")
        if eval_kappa(nf_to_term(a)) != sk:
            round_trip_bad += 1
    rep.check("rewriting and diagram extraction agree", count == 0,
              f"{len(corpus)} terms, {count} mismatches" + ("; " + "; ".join(bad_examples) if bad_examples else ""))
    rep.check("normal forms evaluate to the original diagram", round_trip_bad == 0,
              f"{round_trip_bad} failures")
    n, bad = catalogue_failures(6)
    rep.check("equation catalogue is sound for the diagram semantics", not bad,
              f"{n} instances, {len(bad)} failures" + ("; " + "; ".join(bad[:3]) if bad else ""))
    rep.seconds = time.perf_counter() - start
    return rep


# -- symmetric groups ---------------------------------------------------------------------

def symmetric_normal_forms(n: int) -> dict[tuple[int, ...], NormalForm]:
    """Closure of the unit under right multiplication by s_1 .. s_{n-1},
    normalized by rewriting.  Keys are the permutations the diagrams realize."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"number of strands must be a natural number, got {n!r}")
    unit = normalize_rewrite(Term())
    seen = {unit}
    frontier = [unit]
    while frontier:
        nxt = []
        for nf in frontier:
            base = nf_to_term(nf)
            for k in range(1, n):
                out = normalize_rewrite(base * cross(k))
                if out not in seen:
                    seen.add(out)
                    nxt.append(out)
        frontier = nxt
    out = {}
    for nf in seen:
        perm = permutation_of(eval_iota(nf_to_term(nf))) or ()
        perm = perm + tuple(range(len(perm) + 1, n + 1))
        out[perm] = nf
    if len(out) != len(seen):
        raise AssertionError("two crossing normal forms realize the same permutation")
    return dict(sorted(out.items()))


def suite_group(max_n: int = 5) -> SuiteReport:
    rep = SuiteReport("group")
    start = time.perf_counter()
    for n in range(1, max_n + 1):
        forms = symmetric_normal_forms(n)
        oracle = set(itertools.permutations(range(1, n + 1)))
        rep.check(f"S_{n}: crossing normal forms match the permutations", set(forms) == oracle,
                  f"{len(forms)} normal forms, {len(oracle)} permutations")
        extracted = all(extract_normal_form(SKDiagram(permutation_diag(p))) == forms.get(p) for p in oracle)
        rep.check(f"S_{n}: extraction from each permutation gives the same normal form", extracted)
    a = normalize_rewrite(Term.of(cross(1), cross(2), cross(1)))
    b = normalize_rewrite(Term.of(cross(2), cross(1), cross(2)))
    rep.check("s1 s2 s1 and s2 s1 s2 share a normal form", a == b, str(a))
    rep.seconds = time.perf_counter() - start
    return rep


# -- adjunction -------------------------------------------------------------------------------

def suite_adjunction(max_index: int = 3, max_len: int = 5) -> SuiteReport:
    rep = SuiteReport("adjunction")
    start = time.perf_counter()
    bad = [name for name, l, r in adj.axiom_instances(max_index) if not adj.equal_k(l, r)]
    total = sum(1 for _ in adj.axiom_instances(max_index))
    rep.check("symmetric self-adjunction equations", not bad, f"{total} instances, failures: {sorted(set(bad))}")
    bad = [name for name, l, r in adj.subsided_instances_k(max_index) if not adj.equal_k(l, r)]
    total = sum(1 for _ in adj.subsided_instances_k(max_index))
    rep.check("subsided equations for tensor, s, epsilon, eta", not bad,
              f"{total} instances, failures: {sorted(set(bad))}")
    terms = list(enumerate_terms(min(max_index, 3), max_len))
    bad_psi_xi = sum(1 for t in terms if adj.psi(adj.xi(t)) != t)
    rep.check("psi(xi(t)) is t", bad_psi_xi == 0, f"{len(terms)} terms, {bad_psi_xi} failures")
    arrows = adj.enumerate_arrows(2, 5)
    bad_xi_psi = sum(1 for f in arrows if not adj.equiv_k(adj.xi(adj.psi(f)), f))
    rep.check("xi(psi(f)) agrees with f up to F", bad_xi_psi == 0, f"{len(arrows)} arrows, {bad_xi_psi} failures")
    bad_cancel = cancellation_failures(arrows)
    rep.check("F f = F g implies f = g", bad_cancel == 0, f"{bad_cancel} failures")
    rep.seconds = time.perf_counter() - start
    return rep


def cancellation_failures(arrows) -> int:
    groups: dict = {}
    for f in arrows:
        groups.setdefault((f.src, f.tgt), []).append(f)
    bad = 0
    for members in groups.values():
        classes: dict = {}
        for f in members:
            key_f = adj.kappa_of(adj.Fap(f))
            key = adj.kappa_of(f)
            prev = classes.setdefault(key_f, key)
            if prev != key:
                bad += 1
    return bad


# -- matrices -------------------------------------------------------------------------------

def suite_subsided(max_dim: int = 4, trials: int = 200, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("subsided")
    start = time.perf_counter()
    r = verify_subsided_mat(max_dim, trials, seed)
    rep.check("subsided equations hold exactly in Mat", r.ok,
              r.summary() + ("; " + str(r.failures[:3]) if r.failures else ""))
    rep.seconds = time.perf_counter() - start
    return rep


def suite_faithful(max_index: int = 2, max_size: int = 5, p: int = 2) -> SuiteReport:
    rep = SuiteReport("faithful")
    start = time.perf_counter()
    r = verify_faithfulness(max_index, max_size, p)
    rep.check("integer representation separates exactly the unequal arrows", not r.mismatches,
              f"{r.arrows} arrows, {r.pairs} same-type pairs, {r.classes_k} classes, "
              f"{len(r.mismatches)} mismatches")
    rep.check("circle powers map to distinct scalars", r.circles_distinct, str(r.circle_values))
    rep.check("boolean representation separates exactly the SJ-unequal arrows", not r.mismatches_j,
              f"{r.classes_j} classes, {len(r.mismatches_j)} mismatches")
    rep.seconds = time.perf_counter() - start
    return rep


SUITES = ("nf", "group", "adjunction", "subsided", "faithful")


def run_suite(name: str, max_len: int | None = None, max_index: int | None = None,
              seed: int | None = None) -> SuiteReport:
    seed = 0 if seed is None else seed
    if name == "nf":
        return suite_nf(3 if max_index is None else max_index, 5 if max_len is None else max_len, seed)
    if name == "group":
        return suite_group(5 if max_index is None else max_index)
    if name == "adjunction":
        return suite_adjunction(3 if max_index is None else max_index, 5 if max_len is None else max_len)
    if name == "subsided":
        return suite_subsided(4 if max_index is None else max_index, 200, seed)
    if name == "faithful":
        return suite_faithful(2 if max_index is None else max_index, 5 if max_len is None else max_len)
    raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
