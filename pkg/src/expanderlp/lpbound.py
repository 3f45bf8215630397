"""Linear programming bounds on the order of regular graphs with given eigenvalues.

A feasibility certificate is a polynomial f = sum f_i * S_i over the sphere
basis with

    f(k) > 0,   f(tau) <= 0 for every prescribed eigenvalue tau,
    f_0 > 0,    f_i >= 0 for i >= 1.

Any connected k-regular graph whose adjacency eigenvalues other than k lie in
the prescribed set has at most f(k)/f_0 vertices.  The optimal such bound is
the optimum of a small linear program, solved here by a self-contained
two-phase dense simplex with Bland's rule; with rational data the pivoting is
exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .graphcore import Graph, is_connected, regularity
from .orthopoly import MAX_DEGREE, MonomialPoly, SphereBasisPoly, sphere_poly, to_sphere_basis
from .spectral import spectrum, sphere_poly_matrix

__all__ = [
    "ConditionReport",
    "CertificateConditions",
    "BoundCertificate",
    "check_certificate",
    "certificate_from_spectrum",
    "LPSolution",
    "lp_bound_dual",
    "lp_bound_primal",
    "TightnessReport",
    "check_attainment",
]

DEFAULT_SLACK_TOL = 1e-9


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _validate_eigenvalues(k: int, eigenvalues: Sequence) -> tuple:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"degree k must be an integer >= 2, got {k!r}")
    taus = tuple(eigenvalues)
    if not taus:
        raise ValueError("eigenvalue list must be nonempty")
    if len(set(taus)) != len(taus):
        raise ValueError("prescribed eigenvalues must be distinct")
    for t in taus:
        if not t < k:
            raise ValueError(f"prescribed eigenvalue {t} not below k = {k}")
    return tuple(sorted(taus, reverse=True))


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a single certificate condition; slack > 0 means margin."""

    ok: bool
    slack: object
    witness: object = None


@dataclass(frozen=True)
class CertificateConditions:
    value_at_k_positive: ConditionReport
    nonpositive_at_eigenvalues: ConditionReport
    constant_term_positive: ConditionReport
    coeffs_nonnegative: ConditionReport

    def all_ok(self) -> bool:
        return (
            self.value_at_k_positive.ok
            and self.nonpositive_at_eigenvalues.ok
            and self.constant_term_positive.ok
            and self.coeffs_nonnegative.ok
        )

    def to_json_dict(self) -> dict:
        def entry(rep: ConditionReport) -> dict:
            out = {"ok": rep.ok, "slack": float(rep.slack)}
            if rep.witness is not None:
                out["witness"] = rep.witness if isinstance(rep.witness, int) else float(rep.witness)
            return out

        return {
            "f_at_k_positive": entry(self.value_at_k_positive),
            "f_nonpositive_at_eigenvalues": entry(self.nonpositive_at_eigenvalues),
            "f0_positive": entry(self.constant_term_positive),
            "coeffs_nonnegative": entry(self.coeffs_nonnegative),
        }


@dataclass(frozen=True)
class BoundCertificate:
    """A checked certificate; bound is set only when every condition holds."""

    k: int
    poly: SphereBasisPoly
    eigenvalues: tuple
    value_at_k: object
    constant_term: object
    conditions: CertificateConditions
    bound: object


def check_certificate(
    k: int,
    eigenvalues: Sequence,
    poly: SphereBasisPoly,
    tol: float = DEFAULT_SLACK_TOL,
) -> BoundCertificate:
    """Evaluate the four certificate conditions and the resulting bound.

    The tolerance applies to the two inequality conditions (values at
    eigenvalues <= 0, coefficients >= 0); the strict positivity conditions are
    checked as given.  Invalid certificates are reported, not raised.
    """
    if poly.k != k:
        raise ValueError(f"certificate basis degree {poly.k} differs from k = {k}")
    taus = _validate_eigenvalues(k, eigenvalues)
    value_at_k = poly(k)
    cond1 = ConditionReport(value_at_k > 0, value_at_k)
    worst_val, worst_tau = None, None
    for t in taus:
        val = poly(t)
        if worst_val is None or val > worst_val:
            worst_val, worst_tau = val, t
    cond2 = ConditionReport(worst_val <= tol, -worst_val, worst_tau)
    f0 = poly.coeffs[0]
    cond3 = ConditionReport(f0 > 0, f0)
    worst_c, worst_i = None, None
    for i, c in enumerate(poly.coeffs[1:], start=1):
        if worst_c is None or c < worst_c:
            worst_c, worst_i = c, i
    if worst_c is None:
        cond4 = ConditionReport(True, 0, None)
    else:
        cond4 = ConditionReport(worst_c >= -tol, worst_c, worst_i)
    conditions = CertificateConditions(cond1, cond2, cond3, cond4)
    if not conditions.all_ok():
        bound = None
    elif _is_rational(value_at_k) and _is_rational(f0):
        bound = Fraction(value_at_k) / Fraction(f0)
    else:
        bound = value_at_k / f0
    return BoundCertificate(k, poly, taus, value_at_k, f0, conditions, bound)


def certificate_from_spectrum(
    k: int,
    eigenvalues: Sequence,
    tol: float = DEFAULT_SLACK_TOL,
) -> BoundCertificate:
    """Certificate (x - t_1) * prod_{i>=2} (x - t_i)**2 for eigenvalues t_1 > t_2 > ...

    For a graph with d+1 distinct eigenvalues and girth >= 2d this certificate
    is valid and attains the optimal bound.  Rational inputs are processed
    exactly.
    """
    taus = _validate_eigenvalues(k, eigenvalues)
    roots = [taus[0]] + [t for t in taus[1:] for _ in range(2)]
    if len(roots) > MAX_DEGREE:
        raise ValueError(f"certificate degree {len(roots)} exceeds maximum {MAX_DEGREE}")
    poly = to_sphere_basis(k, MonomialPoly.from_roots(roots))
    return check_certificate(k, taus, poly, tol=tol)


@dataclass(frozen=True)
class LPSolution:
    """Solved LP: status is one of optimal, infeasible, unbounded."""

    status: str
    objective: object
    variables: tuple


def _simplex(c: list, rows: list, exact: bool) -> tuple[str, list, object]:
    """Minimize c.x subject to rows of (coeffs, sense, rhs) with x >= 0.

    Dense two-phase tableau with Bland's rule; Fractions throughout when
    exact, float64 with a pivot tolerance otherwise.
    """
    if exact:
        conv = Fraction
        zero, one = Fraction(0), Fraction(1)
        tol = Fraction(0)
    else:
        conv = float
        zero, one = 0.0, 1.0
        tol = 1e-9
    nvars = len(c)
    norm = []
    for coeffs, sense, rhs in rows:
        coeffs = [conv(a) for a in coeffs]
        rhs = conv(rhs)
        if rhs < zero:
            coeffs = [-a for a in coeffs]
            rhs = -rhs
            sense = {"<=": ">=", ">=": "<=", "==": "=="}[sense]
        norm.append((coeffs, sense, rhs))
    m = len(norm)
    ncols = nvars
    slack_col = {}
    for r, (_, sense, _) in enumerate(norm):
        if sense in ("<=", ">="):
            slack_col[r] = ncols
            ncols += 1
    art_col = {}
    for r, (_, sense, _) in enumerate(norm):
        if sense in (">=", "=="):
            art_col[r] = ncols
            ncols += 1
    real_cols = nvars + len(slack_col)
    tableau = [[zero] * (ncols + 1) for _ in range(m)]
    basis = [-1] * m
    for r, (coeffs, sense, rhs) in enumerate(norm):
        for j, a in enumerate(coeffs):
            tableau[r][j] = a
        tableau[r][-1] = rhs
        if sense == "<=":
            tableau[r][slack_col[r]] = one
            basis[r] = slack_col[r]
        elif sense == ">=":
            tableau[r][slack_col[r]] = -one
            tableau[r][art_col[r]] = one
            basis[r] = art_col[r]
        else:
            tableau[r][art_col[r]] = one
            basis[r] = art_col[r]

    def nonzero(a) -> bool:
        return a != zero if exact else abs(a) > tol

    def pivot(r: int, col: int) -> None:
        piv = tableau[r][col]
        tableau[r] = [a / piv for a in tableau[r]]
        for rr in range(len(tableau)):
            if rr != r and tableau[rr][col] != zero:
                f = tableau[rr][col]
                tableau[rr] = [a - f * b for a, b in zip(tableau[rr], tableau[r])]
        basis[r] = col

    def run(cost: list) -> str:
        width = len(tableau[0]) - 1
        z = list(cost[:width]) + [zero]
        for r in range(len(tableau)):
            cb = cost[basis[r]]
            if cb != zero:
                for j in range(width + 1):
                    z[j] = z[j] - cb * tableau[r][j]
        while True:
            enter = -1
            for j in range(width):
                if z[j] < -tol:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            best_ratio = None
            for r in range(len(tableau)):
                a = tableau[r][enter]
                if a > tol:
                    ratio = tableau[r][-1] / a
                    if best_ratio is None or ratio < best_ratio - tol or (
                        not ratio > best_ratio + tol and basis[r] < basis[leave]
                    ):
                        best_ratio = ratio
                        leave = r
            if leave < 0:
                return "unbounded"
            piv_row = leave
            f = z[enter]
            pivot(piv_row, enter)
            if f != zero:
                for j in range(width + 1):
                    z[j] = z[j] - f * tableau[piv_row][j]

    if art_col:
        phase1 = [zero] * ncols
        for col in art_col.values():
            phase1[col] = one
        run(phase1)
        art_set = set(art_col.values())
        infeas = sum(tableau[r][-1] for r in range(len(tableau)) if basis[r] in art_set)
        if (infeas > zero) if exact else (infeas > 1e-7):
            return "infeasible", [], None
        # Drive leftover zero-valued artificials out of the basis, dropping
        # rows that have become redundant, then discard artificial columns.
        drop = []
        for r in range(len(tableau)):
            if basis[r] in art_set:
                for j in range(real_cols):
                    if nonzero(tableau[r][j]):
                        pivot(r, j)
                        break
                else:
                    drop.append(r)
        if drop:
            tableau = [row for r, row in enumerate(tableau) if r not in drop]
            basis = [b for r, b in enumerate(basis) if r not in drop]
        tableau = [row[:real_cols] + [row[-1]] for row in tableau]
    cost2 = [conv(a) for a in c] + [zero] * (real_cols - nvars)
    status = run(cost2) if tableau else "optimal"
    if status != "optimal":
        return status, [], None
    x = [zero] * nvars
    for r in range(len(tableau)):
        if basis[r] < nvars:
            x[basis[r]] = tableau[r][-1]
    objective = sum(ci * xi for ci, xi in zip(c, x))
    return "optimal", x, objective


def _sphere_values(k: int, u: int, x, exact: bool) -> list:
    """S_1(x)..S_u(x) in one forward pass, exact or float."""
    val = Fraction(x) if exact and not isinstance(x, (int, Fraction)) else x
    if not exact:
        val = float(x)
    out = []
    prev, cur = 1, val
    out.append(cur)
    for m in range(2, u + 1):
        prev, cur = cur, val * cur - (k if m == 2 else k - 1) * prev
        out.append(cur)
    return out


def lp_bound_dual(k: int, eigenvalues: Sequence, u: Optional[int] = None) -> LPSolution:
    """Least certificate bound using coefficients up to degree u.

    Minimizes 1 + sum_j f_j * S_j(k) subject to -sum_j f_j * S_j(tau) >= 1 for
    every prescribed eigenvalue, f_j >= 0.  Defaults to u = 2d - 1 where d is
    the number of prescribed eigenvalues.  Exact with rational data.
    """
    taus = _validate_eigenvalues(k, eigenvalues)
    d = len(taus)
    if u is None:
        u = 2 * d - 1
    if u < 1:
        raise ValueError(f"coefficient degree u must be >= 1, got {u}")
    if u > MAX_DEGREE:
        raise ValueError(f"coefficient degree {u} exceeds maximum {MAX_DEGREE}")
    exact = all(_is_rational(t) for t in taus)
    c = [k * (k - 1) ** (j - 1) for j in range(1, u + 1)]
    if not exact:
        c = [float(a) for a in c]
    rows = []
    for t in taus:
        vals = _sphere_values(k, u, t, exact)
        rows.append(([-a for a in vals], ">=", 1))
    status, x, objective = _simplex(c, rows, exact)
    if status != "optimal":
        return LPSolution(status, None, ())
    return LPSolution("optimal", 1 + objective, tuple(x))


def lp_bound_primal(k: int, eigenvalues: Sequence, u: Optional[int] = None) -> LPSolution:
    """Largest order consistent with the first u moment constraints.

    Maximizes 1 + sum_i m_i subject to -sum_i m_i * S_j(tau_i) <= S_j(k) for
    j = 1..u, m_i >= 0.  u = 0 leaves no constraints and yields the one-vertex
    objective.  Exact with rational data.
    """
    taus = _validate_eigenvalues(k, eigenvalues)
    d = len(taus)
    if u is None:
        u = 2 * d - 1
    if u < 0:
        raise ValueError(f"constraint degree u must be >= 0, got {u}")
    if u > MAX_DEGREE:
        raise ValueError(f"constraint degree {u} exceeds maximum {MAX_DEGREE}")
    exact = all(_is_rational(t) for t in taus)
    if u == 0:
        one = Fraction(1) if exact else 1.0
        return LPSolution("optimal", one, ())
    cols = [_sphere_values(k, u, t, exact) for t in taus]
    rows = []
    for j in range(u):
        rhs = k * (k - 1) ** j
        rows.append(([-cols[i][j] for i in range(d)], "<=", rhs if exact else float(rhs)))
    c = [-1] * d if exact else [-1.0] * d
    status, x, objective = _simplex(c, rows, exact)
    if status != "optimal":
        return LPSolution(status, None, ())
    return LPSolution("optimal", 1 - objective, tuple(x))


@dataclass(frozen=True)
class TightnessReport:
    """Whether a certificate's bound is attained by a concrete graph."""

    applicable: bool
    reason: Optional[str]
    tight: bool
    trace_products: tuple
    eigenvalue_residuals: tuple
    v: Optional[int]
    bound: object
    order_matches: Optional[bool]


def check_attainment(g: Graph, cert: BoundCertificate, tol: float = 1e-6) -> TightnessReport:
    """Check the equality conditions of the bound against a concrete graph.

    The bound is attained iff f_i * trace(S_i(A)) = 0 for i = 1..deg f and
    f vanishes at every eigenvalue of the graph other than k.  A degree
    mismatch makes the certificate inapplicable, reported rather than raised.
    """
    k = regularity(g)
    if k is None:
        return TightnessReport(False, "graph is not regular", False, (), (), g.n, cert.bound, None)
    if k != cert.k:
        return TightnessReport(
            False, f"certificate k = {cert.k} does not match graph k = {k}",
            False, (), (), g.n, cert.bound, None,
        )
    if not is_connected(g):
        return TightnessReport(False, "graph is not connected", False, (), (), g.n, cert.bound, None)
    if not cert.conditions.all_ok():
        return TightnessReport(False, "certificate conditions fail", False, (), (), g.n, cert.bound, None)
    products = []
    for i in range(1, cert.poly.degree + 1):
        tr = int(np.trace(sphere_poly_matrix(g, i)))
        products.append(cert.poly.coeffs[i] * tr)
    residuals = tuple(cert.poly(t) for t in spectrum(g).nontrivial)
    exact = all(_is_rational(c) for c in cert.poly.coeffs)
    if exact:
        traces_ok = all(p == 0 for p in products)
    else:
        traces_ok = all(abs(p) <= tol for p in products)
    eigs_ok = all(abs(r) <= tol for r in residuals)
    tight = traces_ok and eigs_ok
    order_matches = None
    if tight and cert.bound is not None:
        order_matches = abs(float(cert.bound) - g.n) <= tol
    return TightnessReport(True, None, tight, tuple(products), residuals, g.n, cert.bound, order_matches)
