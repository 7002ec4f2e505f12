"""Verification suites and the command line interface.

Every suite returns a ``VerificationReport``.  Checks compare exact values;
a failing check keeps both sides as strings so the report can be printed or
written to JSON without losing precision.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Any, Callable, Sequence

from .bracket import (BracketContext, a_tensor, compute_A, compute_A_from_Psi, compute_A_largest,
                      compute_A_shifted, compute_A_weighted, compute_Psi, compute_Psi_shifted,
                      psi_vector)
from .combinat import (Diagram, LinkPattern, boxes, contains, diagram_from_partition, dyck_word, embed, enumerate_basis,
                       parse_diagram, staircase, to_link_pattern, transpose)
from .fpl import enumerate_fpl_square, enumerate_fpl_triangle
from .linalg import ExactMatrix, vecmat
from .opalgebra import (a_empty, c_link_jacobi_trudi, c_link, c_link_total, c_matrix, c_tilde_matrix,
                        c_total, c_z_link_kroute, c_z_link_pext, k_matrix, lr_matrix, lr_tilde_matrix,
                        lr_total, mirror_permutation, p_entry, p_inverse, p_matrix, phi_matrix,
                        psi_link, r_link, r_matrix, recurrence_shifted_psi, recurrence_step,
                        recurrence_step_general_t)
from .polyring import TPoly, parse_t, scalar_str
from .symfun import hook_content_poly, lr_coefficient
from .tlmodel import ground_state

# Largest sizes run without --force.
TRIANGLE_LIMIT = 3
SQUARE_LIMIT = 5


_MEASURED = {"square": {1: 1e-3, 2: 1e-3, 3: 1e-3, 4: 1e-2, 5: 0.1},
             "triangle": {1: 1e-3, 2: 0.02, 3: 3.0}}
_GROWTH = {"square": 20.0, "triangle": 2000.0}


def estimated_seconds(kind: str, n: int) -> float:
    """Order-of-magnitude runtime of an exhaustive enumeration, extrapolated from measured sizes."""
    if kind not in _MEASURED:
        raise ValueError(f"unknown enumeration {kind!r}")
    table = _MEASURED[kind]
    last = max(table)
    if n <= last:
        return table[n]
    return table[last] * _GROWTH[kind] ** (n - last)


class CostGuardError(ValueError):
    pass


def _guard(kind: str, n: int, limit: int, force: bool, out=None):
    if n <= limit:
        return
    secs = estimated_seconds(kind, n)
    print(f"estimated cost of {kind} enumeration at n={n}: about {secs:.3g} s", file=out or sys.stderr)
    if not force:
        raise CostGuardError(f"{kind} enumeration at n={n} exceeds the default limit n={limit}; pass --force")


# reports

def _text(x) -> Any:
    """Exact value rendered with strings for every number."""
    if isinstance(x, ExactMatrix):
        return x.to_strings()
    if isinstance(x, dict):
        return {str(k): _text(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_text(v) for v in x]
    if isinstance(x, (Diagram, LinkPattern)):
        return str(x)
    return scalar_str(x)


@dataclass
class Check:
    check_id: str
    passed: bool
    lhs: Any = None
    rhs: Any = None

    def to_json(self) -> dict:
        out = {"id": self.check_id, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        return out


@dataclass
class VerificationReport:
    suite: str
    n: int
    t: Any
    checks: list[Check] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, check_id: str, lhs, rhs) -> bool:
        ok = lhs == rhs
        self.checks.append(Check(check_id, ok, None if ok else _text(lhs), None if ok else _text(rhs)))
        return ok

    def require(self, check_id: str, condition: bool, witness=None) -> bool:
        """A boolean check; ``witness`` is the counterexample kept on failure."""
        ok = bool(condition)
        self.checks.append(Check(check_id, ok, None if ok else _text(witness), None if ok else "expected to hold"))
        return ok

    def extend(self, other: "VerificationReport"):
        for c in other.checks:
            self.checks.append(Check(f"{other.suite}/{c.check_id}", c.passed, c.lhs, c.rhs))
        self.duration += other.duration

    def summary(self) -> str:
        bad = len(self.failures)
        state = "PASS" if not bad else f"FAIL ({bad} failing)"
        return f"{self.suite} n={self.n} t={t_label(self.t)}: {len(self.checks)} checks, {state}, {self.duration:.2f}s"

    def to_json(self) -> dict:
        return {"suite": self.suite, "n": self.n, "t": t_label(self.t), "passed": self.passed,
                "duration": f"{self.duration:.3f}",
                "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.check_id)]}


def t_label(t) -> str:
    if isinstance(t, TPoly):
        return "symbolic"
    f = Fraction(t)
    return f"{f.numerator}/{f.denominator}"


class _timed:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.duration += time.perf_counter() - self.start
        return False


def _check_n(n: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


# suites

def bracket_link_tensor(n: int, t=1) -> dict[tuple[Diagram, Diagram, Diagram], Any]:
    """sum_alpha A_{sigma,alpha,tau} (P^-1)^alpha_pi over all triples, zeros included."""
    basis = enumerate_basis(n)
    tensor = a_tensor(BracketContext(n, t))
    pinv = p_inverse(n, t)
    out = {}
    for s, sigma in enumerate(basis):
        for k, tau in enumerate(basis):
            row = vecmat([tensor[s][a][k] for a in range(len(basis))], pinv)
            for pi, value in zip(basis, row):
                out[(sigma, pi, tau)] = value
    return out


def verify_conjecture1(n: int, force: bool = False) -> VerificationReport:
    _check_n(n)
    _guard("triangle", n, TRIANGLE_LIMIT, force)
    report = VerificationReport("conjecture1", n, 1)
    with _timed(report):
        bracket_side = bracket_link_tensor(n)
        fpl_side = enumerate_fpl_triangle(n)
        report.require("fpl-keys-in-basis", set(fpl_side) <= set(bracket_side),
                       sorted(map(str, set(fpl_side) - set(bracket_side))))
        for (sigma, pi, tau), value in bracket_side.items():
            report.check(f"a[{sigma}|{pi}|{tau}]", value, fpl_side.get((sigma, pi, tau), 0))
    return report


def verify_rs(n: int, force: bool = False) -> VerificationReport:
    _check_n(n)
    _guard("square", n, SQUARE_LIMIT, force)
    report = VerificationReport("rs", n, 1)
    with _timed(report):
        psi = ground_state(n)
        counts = enumerate_fpl_square(n)
        basis = enumerate_basis(n)
        report.check("total", sum(counts.values()), sum(psi))
        for b, value in zip(basis, psi):
            report.check(f"psi[{b}]", counts[b], value)
    return report


def _summation_coefficients(n: int, k: int):
    basis = enumerate_basis(n)
    left = [hook_content_poly(transpose(s), -k) for s in basis]
    right = [hook_content_poly(transpose(t), k - n + 1) for t in basis]
    return left, right


def _contract(tensor, ia: int, left, right):
    total = 0
    for s, ls in enumerate(left):
        if ls == 0:
            continue
        for t, rt in enumerate(right):
            if rt:
                total += tensor[s][ia][t] * ls * rt
    return total


def verify_summation(n: int, k_lo: int | None = None, k_hi: int | None = None) -> VerificationReport:
    _check_n(n)
    k_lo = -3 if k_lo is None else k_lo
    k_hi = n + 3 if k_hi is None else k_hi
    if k_lo > k_hi:
        raise ValueError(f"empty k window [{k_lo}, {k_hi}]")
    report = VerificationReport("summation", n, 1)
    with _timed(report):
        ctx = BracketContext(n)
        basis = enumerate_basis(n)
        tensor = a_tensor(ctx)
        psi = psi_vector(ctx)
        for k in range(k_lo, k_hi + 1):
            left, right = _summation_coefficients(n, k)
            got = [_contract(tensor, ia, left, right) for ia in range(len(basis))]
            report.check(f"k={k}", got, psi)
        # at k = 0 only sigma = empty survives, with weights P_tau'(1-n)
        left, right = _summation_coefficients(n, 0)
        report.check("k=0/left-is-delta", left, [1] + [0] * (len(basis) - 1))
        got = [sum(tensor[0][ia][t] * right[t] for t in range(len(basis))) for ia in range(len(basis))]
        report.check("k=0/first-rows", got, psi)
    return report


def _selfdual_vector(n: int) -> list[int]:
    return [1 if b.partition == (1,) * len(b.partition) else 0 for b in enumerate_basis(n)]


def verify_lemma_suite(n: int) -> VerificationReport:
    _check_n(n)
    report = VerificationReport("lemmas", n, 1)
    with _timed(report):
        basis = enumerate_basis(n)
        tensor = a_tensor(BracketContext(n))
        vanish, equal, upper = [], [], []
        for (s, sigma), (a, alpha), (t, tau) in iproduct(enumerate(basis), repeat=3):
            value = tensor[s][a][t]
            gap = boxes(alpha) - boxes(sigma) - boxes(tau)
            if gap < 0 and value != 0:
                vanish.append((str(sigma), str(alpha), str(tau), value))
            if gap == 0:
                expected = lr_coefficient(transpose(sigma), tau, alpha)
                if value != expected:
                    equal.append((str(sigma), str(alpha), str(tau), value, expected))
            if value != 0 and not (contains(tau, alpha) and contains(transpose(sigma), alpha)):
                upper.append((str(sigma), str(alpha), str(tau), value))
        report.require("degree-vanishing", not vanish, vanish[:5])
        report.require("degree-equality-lr", not equal, equal[:5])
        report.require("triangularity", not upper, upper[:5])
        phi = phi_matrix(n)
        size = len(basis)
        report.check("phi-squared", phi @ phi, ExactMatrix.identity(size, phi.labels))
        v = _selfdual_vector(n)
        report.check("selfdual", vecmat(v, phi.T), v)
        support, lead = [], []
        for c, sigma in enumerate(basis):
            conj = transpose(sigma)
            for r, beta in enumerate(basis):
                if phi[r][c] != 0 and not contains(conj, beta):
                    support.append((str(sigma), str(beta), phi[r][c]))
            if phi[basis.index(conj)][c] != 1:
                lead.append((str(sigma), phi[basis.index(conj)][c]))
        report.require("tilde-support", not support, support[:5])
        report.require("tilde-leading", not lead, lead)
    return report


def _abar(tensor, a: int, size: int) -> ExactMatrix:
    return ExactMatrix([[tensor[s][a][t] for t in range(size)] for s in range(size)])


def _asig(tensor, s: int, size: int) -> ExactMatrix:
    return ExactMatrix([[tensor[s][a][t] for a in range(size)] for t in range(size)])


def verify_matrix_suite(n: int, t=1) -> VerificationReport:
    _check_n(n)
    report = VerificationReport("matrices", n, t)
    with _timed(report):
        ctx = BracketContext(n, t)
        basis = enumerate_basis(n)
        size = len(basis)
        tensor = a_tensor(ctx)
        abar = [_abar(tensor, a, size) for a in range(size)]
        asig = [_asig(tensor, s, size) for s in range(size)]
        a0 = a_empty(n, t)
        a0inv = a0.inverse()
        report.check("A(empty)=A(sigma=empty)", asig[0], a0)
        lrs = [lr_matrix(lam, n) for lam in basis]
        lrt = [lr_tilde_matrix(lam, n, t) for lam in basis]
        cs = [c_matrix(lam, n, t) for lam in basis]
        cts = [c_tilde_matrix(lam, n, t) for lam in basis]
        for li, lam in enumerate(basis):
            for ai, alpha in enumerate(basis):
                report.check(f"first[{lam}|{alpha}]", lrt[li].T @ abar[ai], abar[ai] @ lrs[li])
                report.check(f"third[{lam}|{alpha}]", lrs[li].T @ abar[ai], abar[ai] @ lrt[li])
            for si, sigma in enumerate(basis):
                report.check(f"second[{lam}|{sigma}]", lrs[li].T @ asig[si], asig[si] @ cs[li])
                report.check(f"last[{lam}|{sigma}]", lrt[li].T @ asig[si], asig[si] @ cts[li])
            report.check(f"A-sigma-from-empty[{lam}]", asig[li], lrt[li].T @ a0)
        lr = lr_total(n)
        c = c_total(n, t)
        # C multiplies by prod(1 + t u_i), so its LR partner weights e_k by t^k
        lr_t = ExactMatrix.zeros(size)
        for k in range(n):
            lr_t = lr_t + lrs[basis.index(diagram_from_partition((1,) * k, n))] * (t ** k)
        for si, sigma in enumerate(basis):
            report.check(f"total[{sigma}]", lr_t.T @ asig[si], asig[si] @ c)
        if t == 1:
            for ai, alpha in enumerate(basis):
                report.check(f"total-bar[{alpha}]", lr.T @ abar[ai], abar[ai] @ lr)
            # three expansions of <prod(1+u_i)>, against the bracket with one extra factor
            bad = []
            for (si, sigma), (ai, alpha), (ti, tau) in iproduct(enumerate(basis), repeat=3):
                direct = compute_A_weighted(ctx, sigma, alpha, tau, n)
                ways = ((abar[ai] @ lr)[si][ti], (lr.T @ abar[ai])[si][ti], (asig[si] @ c)[ti][ai])
                if any(w != direct for w in ways):
                    bad.append((str(sigma), str(alpha), str(tau), direct, ways))
            report.require("triple-equality", not bad, bad[:3])
        # multiplication operators commute
        ms = [asig[i] @ a0inv for i in range(size)]
        comm = [(str(basis[i]), str(basis[j])) for i in range(size) for j in range(i + 1, size)
                if ms[i] @ ms[j] != ms[j] @ ms[i]]
        report.require("commutativity", not comm, comm[:5])
        rel = []
        for i, j in iproduct(range(size), repeat=2):
            rhs = ExactMatrix.zeros(size)
            for k in range(size):
                coeff = lr_coefficient(basis[i], basis[j], basis[k])
                if coeff:
                    rhs = rhs + ms[k] * coeff
            if ms[i] @ ms[j] != rhs:
                rel.append((str(basis[i]), str(basis[j])))
        report.require("algebra-relations", not rel, rel[:5])
        r = r_matrix(n, t)
        ident = ExactMatrix.identity(size)
        report.check("R-squared", r @ r, ident)
        if t == 1:
            report.check("mirror", r_link(n, t), mirror_permutation(n))
        for li, lam in enumerate(basis):
            report.check(f"C~=A0^-1 A[{lam}]", cts[li], a0inv @ asig[li])
            report.check(f"C~=RCR[{lam}]", cts[li], r @ cs[li] @ r)
        # sum_beta A_{sigma,beta,tau} R^beta_alpha = A_{tau,alpha,sigma}
        bad = []
        for si in range(size):
            ar = asig[si] @ r
            bad += [(str(basis[si]), str(basis[ti])) for ti in range(size) if ar[ti] != asig[ti][si]]
        report.require("mirror-identity", not bad, bad[:5])
        top = basis.index(staircase(n))
        if t == 1:
            cl = c_link_total(n, t)
            report.check("c(1_n)", [cl[r_][top] for r_ in range(size)], [1] * size)
        for si, sigma in enumerate(basis):
            for ti, tau in enumerate(basis):
                report.check(f"A-from-Psi[{sigma}|{tau}]", compute_A_from_Psi(ctx, sigma, tau),
                             [tensor[si][a][ti] for a in range(size)])
        for z in (0, 1, 2):
            report.check(f"c_z-routes[z={z}]", c_z_link_kroute(n, z, t), c_z_link_pext(n, z, t))
        for lam in basis:
            report.check(f"jacobi-trudi[{lam}]", c_link_jacobi_trudi(lam, n, t), c_link(lam, n, t))
        if t == 1:
            report.check("A-largest", [compute_A_largest(ctx, s, tau) for s in basis for tau in basis],
                         [tensor[si][top][ti] for si in range(size) for ti in range(size)])
            _largest_sum_rule(report, n)
    return report


def _largest_sum_rule(report: VerificationReport, n: int):
    """sum over eps of P^pi at (0, 2-eps_1, ..., 2(n-1)-eps_{n-1}) is 1, hence psi_(1_{n+1}) = sum psi."""
    sums = []
    for pi in enumerate_basis(n):
        lp = to_link_pattern(pi)
        total = 0
        for eps in iproduct((0, 1), repeat=n - 1):
            seq = (0,) + tuple(2 * i - e for i, e in zip(range(1, n), eps))
            total += p_entry(lp, seq)
        sums.append(total)
    report.check("largest-sum-rule", sums, [1] * len(sums))
    if n <= 3:
        small, big = ground_state(n), ground_state(n + 1)
        top = enumerate_basis(n + 1).index(staircase(n + 1))
        report.check("largest-component", big[top] * small[0], sum(small) * big[0])


def verify_recurrences(n: int, t_samples: Sequence = (0, 1, 2, Fraction(1, 2))) -> VerificationReport:
    _check_n(n)
    report = VerificationReport("recurrences", n, 1)
    with _timed(report):
        basis = enumerate_basis(n)
        if n <= 4:
            report.check("recur-embedded", recurrence_step(ground_state(n)),
                         [ground_state(n + 1)[enumerate_basis(n + 1).index(embed(b, 1))] for b in basis])
            report.check("recur-full", recurrence_step_general_t(ground_state(n)), list(ground_state(n + 1)))
        ctx = BracketContext(n)
        tensor = a_tensor(ctx)
        for m in (1, 2):
            big = BracketContext(n + m)
            direct = [compute_Psi(big, embed(a, m)) for a in basis]
            report.check(f"recura[m={m}]", recurrence_shifted_psi(n, m), direct)
            report.check(f"shifted-psi[m={m}]", [compute_Psi_shifted(ctx, a, m) for a in basis], direct)
            for k in (-1, 0, 1, 2):
                left = [hook_content_poly(transpose(s), 2 * m - k) for s in basis]
                right = [hook_content_poly(transpose(t), k - n - m + 1) for t in basis]
                got = [_contract(tensor, ia, left, right) for ia in range(len(basis))]
                report.check(f"shifted-summation[m={m},k={k}]", got, direct)
            if n + m <= 4:
                mismatch = []
                for sigma, alpha, tau in iproduct(basis, repeat=3):
                    lhs = compute_A_shifted(ctx, sigma, alpha, tau, m)
                    rhs = compute_A(big, embed(sigma, m), embed(alpha, m), embed(tau, m))
                    if lhs != rhs:
                        mismatch.append((str(sigma), str(alpha), str(tau), lhs, rhs))
                report.require(f"shifted-A[m={m}]", not mismatch, mismatch[:3])
        if n <= 3:
            for t in t_samples:
                t = parse_t(t)
                p = p_matrix(n + 1, t)
                report.require(f"P-unit-diagonal[t={t_label(t)}]", all(p[i][i] == 1 for i in range(len(p))))
                report.check(f"closed-recursion[t={t_label(t)}]",
                             recurrence_step_general_t(psi_link(n, t), t), psi_link(n + 1, t))
    return report


SUITES = ("conjecture1", "rs", "summation", "lemmas", "matrices", "recurrences")


def verify_all(n: int, t=1, force: bool = False, k_range=None) -> VerificationReport:
    _check_n(n)
    total = VerificationReport("all", n, t)
    parts = []
    if n <= TRIANGLE_LIMIT or force:
        parts.append(lambda: verify_conjecture1(n, force))
    if n <= 4 or force:
        parts.append(lambda: verify_rs(n, force))
    lo, hi = k_range if k_range else (None, None)
    parts.append(lambda: verify_summation(n, lo, hi))
    parts.append(lambda: verify_lemma_suite(n))
    parts.append(lambda: verify_matrix_suite(n, t))
    parts.append(lambda: verify_recurrences(n))
    for run in parts:
        total.extend(run())
    return total


# command line

def _payload(n: int, t, data) -> dict:
    return {"n": n, "t": t_label(t), "basis": [str(b) for b in enumerate_basis(n)], "data": _text(data)}


def _parse_k_range(text: str | None):
    if text is None:
        return None
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise ValueError(f"--k-range expects LO:HI, got {text!r}") from None
    return lo, hi


def _matrix_lines(m: ExactMatrix, labels: Sequence[str]) -> list[str]:
    cells = m.to_strings()
    width = max([len(x) for row in cells for x in row] + [1])
    lab = max(len(x) for x in labels)
    return [f"{labels[i]:>{lab}} | " + " ".join(f"{x:>{width}}" for x in row) for i, row in enumerate(cells)]


def _cmd_bij(args):
    rows = []
    lines = []
    for b in enumerate_basis(args.n):
        lp = to_link_pattern(b)
        rows.append({"diagram": str(b), "partition": list(b.partition), "dyck": dyck_word(b),
                     "pairs": [list(p) for p in lp.pairs()]})
        lines.append(f"{str(b):<{3 * args.n}} partition={b.partition} dyck={dyck_word(b)} pairs={lp.pairs()}")
    return rows, lines, True


def _cmd_compute(args):
    n, t = args.n, args.t
    ctx = BracketContext(n, t)
    basis = enumerate_basis(n)
    if args.what == "psi":
        if args.m:
            vec = [compute_Psi_shifted(ctx, a, args.m) for a in basis]
        else:
            vec = psi_vector(ctx)
        return vec, [f"{b}: {scalar_str(v)}" for b, v in zip(basis, vec)], True
    tensor = a_tensor(ctx)
    lines = []
    for ai, alpha in enumerate(basis):
        lines.append(f"A-bar({alpha}) rows sigma, columns tau")
        lines += _matrix_lines(_abar(tensor, ai, len(basis)), [str(b) for b in basis])
    data = {str(s): {str(a): {str(tau): tensor[si][ai][ti] for ti, tau in enumerate(basis)}
                     for ai, a in enumerate(basis)} for si, s in enumerate(basis)}
    return data, lines, True


def _cmd_tl(args):
    vec = ground_state(args.n)
    return list(vec), [f"{b}: {v}" for b, v in zip(enumerate_basis(args.n), vec)], True


def _cmd_fpl(args):
    n = args.n
    if args.what == "square":
        _guard("square", n, SQUARE_LIMIT, args.force)
        counts = enumerate_fpl_square(n)
        lines = [f"{b}: {c}" for b, c in counts.items()] + [f"total: {sum(counts.values())}"]
        return {str(b): c for b, c in counts.items()}, lines, True
    _guard("triangle", n, TRIANGLE_LIMIT, args.force)
    counts = enumerate_fpl_triangle(n)
    keys = sorted(counts, key=lambda k: tuple(x.sort_key() for x in k))
    data = [{"sigma": str(s), "pi": str(p), "tau": str(tau), "count": counts[(s, p, tau)]}
            for s, p, tau in keys]
    lines = [f"sigma={s} pi={p} tau={tau}: {counts[(s, p, tau)]}" for s, p, tau in keys]
    return data, lines, True


def _lambda(args) -> Diagram | None:
    return None if args.lam is None else parse_diagram(args.lam, args.n)


def _cmd_op(args):
    n, t = args.n, args.t
    lam = _lambda(args)
    labels = [str(b) for b in enumerate_basis(n)]
    if args.what == "p":
        m = p_matrix(n, t)
    elif args.what == "c":
        m = c_total(n, t) if lam is None else c_matrix(lam, n, t)
    elif args.what == "lr":
        m = lr_total(n) if lam is None else lr_matrix(lam, n)
    elif args.what == "r":
        m = r_matrix(n, t)
    elif args.what == "phi":
        m = phi_matrix(n, t)
    else:
        cols = [b.seq for b in enumerate_basis(n)]
        m = k_matrix(n, cols, t)
    return m, _matrix_lines(m, labels), True


def _cmd_verify(args):
    n, t = args.n, args.t
    k_range = _parse_k_range(args.k_range)
    suite = args.what
    if suite == "conjecture1":
        report = verify_conjecture1(n, args.force)
    elif suite == "rs":
        report = verify_rs(n, args.force)
    elif suite == "summation":
        lo, hi = k_range if k_range else (None, None)
        report = verify_summation(n, lo, hi)
    elif suite == "lemmas":
        report = verify_lemma_suite(n)
    elif suite == "matrices":
        report = verify_matrix_suite(n, t)
    elif suite == "recurrences":
        report = verify_recurrences(n)
    else:
        report = verify_all(n, t, args.force, k_range)
    lines = [report.summary()]
    for c in report.failures:
        lines.append(f"  FAIL {c.check_id}: lhs={c.lhs} rhs={c.rhs}")
    return report.to_json(), lines, report.passed


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="size (default 3)")
    common.add_argument("--t", default="1", help='loop parameter: integer, "p/q" or "symbolic"')
    common.add_argument("--m", type=int, default=0, help="embedding depth for shifted components")
    common.add_argument("--k-range", dest="k_range", help="LO:HI window for the summation suite")
    common.add_argument("--lambda", dest="lam", help='diagram "0,1,3" or partition "p:2,1"')
    common.add_argument("--json", dest="json_path", help="write the result as JSON to PATH ('-' for stdout)")
    common.add_argument("--force", action="store_true", help="run enumerations beyond the cost guard")

    parser = argparse.ArgumentParser(prog="fpltriangle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("bij", parents=[common], help="diagrams, Dyck words and link patterns")
    p = sub.add_parser("compute", parents=[common], help="bracket-side quantities")
    p.add_argument("what", choices=("a", "psi"))
    p = sub.add_parser("tl", parents=[common], help="Temperley-Lieb loop model")
    p.add_argument("what", choices=("ground-state",))
    p = sub.add_parser("fpl", parents=[common], help="exhaustive FPL enumeration")
    p.add_argument("what", choices=("square", "triangle"))
    p = sub.add_parser("op", parents=[common], help="operator matrices")
    p.add_argument("what", choices=("p", "c", "k", "r", "lr", "phi"))
    p = sub.add_parser("verify", parents=[common], help="verification suites")
    p.add_argument("what", choices=SUITES + ("all",))
    return parser


COMMANDS: dict[str, Callable] = {
    "bij": _cmd_bij, "compute": _cmd_compute, "tl": _cmd_tl,
    "fpl": _cmd_fpl, "op": _cmd_op, "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_n(args.n)
        if args.m < 0:
            raise ValueError("--m must be non-negative")
        args.t = parse_t(args.t)
        data, lines, ok = COMMANDS[args.command](args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json_path:
        doc = _payload(args.n, args.t, data)
        text = json.dumps(doc, indent=2)
        if args.json_path == "-":
            print(text)
        else:
            with open(args.json_path, "w") as fh:
                fh.write(text + "\n")
    if args.json_path != "-":
        print("\n".join(lines))
    return 0 if ok else 1
