"""Orthogonal polynomial family attached to the k-regular tree.

The degree-i member S_i of the family is defined by

    S_0 = 1,  S_1 = x,  S_2 = x**2 - k,
    S_i = x*S_{i-1} - (k-1)*S_{i-2}        (i >= 3).

Evaluated at the adjacency matrix of a k-regular graph, S_i gives the matrix
counting non-backtracking walks of length i; on the infinite k-regular tree it
is the indicator of the distance-i sphere.  The family is orthogonal on
[-2*sqrt(k-1), 2*sqrt(k-1)] with respect to the weight

    w(x) = sqrt(4*(k-1) - x**2) / (k**2 - x**2).

Partial sums B_i = S_0 + ... + S_i (ball polynomials) satisfy
(x - k)*B_i = S_{i+1} - (k-1)*S_i and are monic orthogonal for (k - x)*w(x).

All coefficient manipulation is exact when inputs are ints or Fractions;
evaluation at floats (or numpy arrays) runs in double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "MAX_DEGREE",
    "MonomialPoly",
    "SphereBasisPoly",
    "sphere_poly",
    "ball_poly",
    "sphere_poly_monomial",
    "to_sphere_basis",
    "linearize_product",
    "tree_weight",
    "weight_quadrature",
]

# Coefficient growth is ~ k*(k-1)**i, so degrees beyond this are not useful
# for graphs within the size caps and are rejected outright.
MAX_DEGREE = 64


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"tree degree k must be an integer >= 2, got {k!r}")


def _check_index(i: int) -> None:
    if not isinstance(i, int) or isinstance(i, bool) or i < 0:
        raise ValueError(f"polynomial index must be a nonnegative integer, got {i!r}")
    if i > MAX_DEGREE:
        raise ValueError(f"degree {i} exceeds supported maximum {MAX_DEGREE}")


def sphere_poly(k: int, i: int, x):
    """Value of S_i at x.  x may be an int, Fraction, float or numpy array."""
    _check_k(k)
    _check_index(i)
    if i == 0:
        return np.ones_like(x) if isinstance(x, np.ndarray) else 1
    if i == 1:
        return x
    prev, cur = 1, x
    for m in range(2, i + 1):
        prev, cur = cur, x * cur - (k if m == 2 else k - 1) * prev
    return cur


def ball_poly(k: int, i: int, x):
    """Value of the partial sum B_i = S_0 + ... + S_i at x."""
    _check_k(k)
    _check_index(i)
    if i == 0:
        return np.ones_like(x) if isinstance(x, np.ndarray) else 1
    total = 1 + x
    prev, cur = 1, x
    for m in range(2, i + 1):
        prev, cur = cur, x * cur - (k if m == 2 else k - 1) * prev
        total = total + cur
    return total


@dataclass(frozen=True)
class MonomialPoly:
    """Polynomial as coefficients in ascending powers of x.

    Trailing exact zeros are stripped so degree() reflects the true degree.
    """

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if not cs:
            cs = (0,)
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return MonomialPoly(tuple(out))

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, bj in enumerate(b):
            out[j] = out[j] + bj
        return MonomialPoly(tuple(out))

    @staticmethod
    def from_roots(roots) -> "MonomialPoly":
        poly = MonomialPoly((1,))
        for r in roots:
            poly = poly * MonomialPoly((-r, 1))
        return poly


@lru_cache(maxsize=None)
def sphere_poly_monomial(k: int, i: int) -> MonomialPoly:
    """S_i expanded in the monomial basis; coefficients are exact ints."""
    _check_k(k)
    _check_index(i)
    if i == 0:
        return MonomialPoly((1,))
    if i == 1:
        return MonomialPoly((0, 1))
    prev, cur = [1], [0, 1]
    for m in range(2, i + 1):
        coef = k if m == 2 else k - 1
        nxt = [0] + cur
        for j, a in enumerate(prev):
            nxt[j] -= coef * a
        prev, cur = cur, nxt
    return MonomialPoly(tuple(cur))


@dataclass(frozen=True)
class SphereBasisPoly:
    """Polynomial stored as coefficients over the basis {S_0, S_1, ...}.

    The coefficient tuple is kept exactly as given; degree is the index of the
    last stored coefficient.
    """

    k: int
    coeffs: tuple

    def __post_init__(self):
        _check_k(self.k)
        cs = tuple(self.coeffs)
        if not cs:
            raise ValueError("coefficient sequence must be nonempty")
        if len(cs) - 1 > MAX_DEGREE:
            raise ValueError(f"degree {len(cs) - 1} exceeds supported maximum {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        cs = self.coeffs
        one = np.ones_like(x) if isinstance(x, np.ndarray) else 1
        total = cs[0] * one
        if len(cs) == 1:
            return total
        prev, cur = one, x
        total = total + cs[1] * x
        for m in range(2, len(cs)):
            prev, cur = cur, x * cur - (self.k if m == 2 else self.k - 1) * prev
            total = total + cs[m] * cur
        return total

    def to_monomial(self) -> MonomialPoly:
        out = [0] * (len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, a in enumerate(sphere_poly_monomial(self.k, i).coeffs):
                out[j] = out[j] + c * a
        return MonomialPoly(tuple(out))


def to_sphere_basis(k: int, poly: MonomialPoly) -> SphereBasisPoly:
    """Rewrite a monomial-basis polynomial over the basis {S_0, S_1, ...}.

    Elimination runs from the leading term down; each S_i is monic, so the
    conversion is exact for int/Fraction coefficients.
    """
    _check_k(k)
    n = poly.degree
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds supported maximum {MAX_DEGREE}")
    work = list(poly.coeffs)
    out = [0] * (n + 1)
    for deg in range(n, -1, -1):
        lead = work[deg]
        out[deg] = lead
        if lead != 0:
            for j, a in enumerate(sphere_poly_monomial(k, deg).coeffs):
                work[j] = work[j] - lead * a
    return SphereBasisPoly(k, tuple(out))


def linearize_product(k: int, i: int, j: int) -> tuple:
    """Coefficients p_0..p_{i+j} with S_i*S_j = sum_l p_l*S_l, exact ints.

    p_l >= 0 always and p_0 = S_i(k) when i == j (else 0).  For k >= 3,
    p_l > 0 exactly when |i-j| <= l <= i+j and l = i+j (mod 2); at k = 2 the
    tree degenerates to the two-way infinite path and some interior
    coefficients vanish (e.g. S_2*S_2 = S_4 + 2*S_0).
    """
    _check_k(k)
    _check_index(i)
    _check_index(j)
    if i + j > MAX_DEGREE:
        raise ValueError(f"product degree {i + j} exceeds supported maximum {MAX_DEGREE}")
    prod = sphere_poly_monomial(k, i) * sphere_poly_monomial(k, j)
    coeffs = to_sphere_basis(k, prod).coeffs
    return tuple(coeffs) + (0,) * (i + j + 1 - len(coeffs))


def tree_weight(k: int, x: float) -> float:
    """Orthogonality weight sqrt(4*(k-1) - x**2) / (k**2 - x**2).

    Defined on |x| <= 2*sqrt(k-1); the numerator vanishes at the endpoints.
    For k = 2 the endpoints coincide with the poles at +-k and are rejected.
    """
    _check_k(k)
    x = float(x)
    edge = 2.0 * math.sqrt(k - 1)
    if abs(x) > edge:
        raise ValueError(f"|x| = {abs(x)} outside support [{-edge}, {edge}]")
    den = float(k * k) - x * x
    if den == 0.0:
        raise ValueError(f"weight has a pole at x = {x} for k = {k}")
    return math.sqrt(max(4.0 * (k - 1) - x * x, 0.0)) / den


def weight_quadrature(k: int, min_nodes: int = 2000):
    """Nodes x and weights q with sum(f(x)*q) ~ integral of f*w over the support.

    Composite Gauss-Legendre on [-a + eps, a - eps], a = 2*sqrt(k-1),
    eps = 1e-9, with panels geometrically refined toward the endpoints where
    the weight has square-root behaviour.  The returned weights include the
    orthogonality weight w.
    """
    _check_k(k)
    a = 2.0 * math.sqrt(k - 1)
    eps = 1e-9
    # Panel edges: uniform across the middle, dyadically graded near +-a.
    levels = int(math.floor(math.log2(a / eps)))
    right = [a - a / 2.0**m for m in range(1, levels + 1)] + [a - eps]
    middle = [-a / 2.0 + t * (a / 8.0) for t in range(1, 8)]
    edges = sorted({-e for e in right} | set(middle) | set(right))
    panels = list(zip(edges[:-1], edges[1:]))
    per_panel = max(16, -(-min_nodes // len(panels)))
    base_x, base_w = np.polynomial.legendre.leggauss(per_panel)
    xs, ws = [], []
    for lo, hi in panels:
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        x = mid + half * base_x
        xs.append(x)
        ws.append(half * base_w * np.array([tree_weight(k, t) for t in x]))
    return np.concatenate(xs), np.concatenate(ws)
