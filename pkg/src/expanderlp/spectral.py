"""Spectra of graphs and exact evaluation of sphere polynomials at adjacency matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .graphcore import (
    Graph,
    SizeCapError,
    all_pairs_distances,
    girth_bfs,
    is_connected,
    regularity,
)
from .orthopoly import MAX_DEGREE

__all__ = [
    "SPECTRAL_SIZE_CAP",
    "Spectrum",
    "spectrum",
    "sphere_poly_matrix",
    "girth_spectral",
    "HoffmanData",
    "hoffman_decomposition",
    "spectral_gap",
]

SPECTRAL_SIZE_CAP = 512

# int64 matrix recurrences are exact while entries stay below this; beyond it
# the iteration falls back to arbitrary-precision Python ints.
_INT64_SAFE = 2**62
_FLOAT_SAFE = 2**53


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues with multiplicities, sorted descending."""

    entries: tuple[tuple[float, int], ...]
    tol: float
    v: int

    @property
    def d(self) -> int:
        """Number of distinct eigenvalues below the largest."""
        return len(self.entries) - 1

    @property
    def top(self) -> float:
        return self.entries[0][0]

    @property
    def nontrivial(self) -> tuple[float, ...]:
        """Distinct eigenvalues other than the largest, descending."""
        return tuple(e for e, _ in self.entries[1:])


def spectrum(g: Graph, tol: Optional[float] = None) -> Spectrum:
    """Eigenvalues of the adjacency matrix clustered into distinct values.

    Eigenvalues whose consecutive gaps are at most tol are merged into one
    entry whose value is the mean of the cluster.  Default tol is
    1e-8 * max(1, max degree).
    """
    if g.n == 0:
        raise ValueError("spectrum of the empty graph is undefined")
    if g.n > SPECTRAL_SIZE_CAP:
        raise SizeCapError(f"eigensolver capped at {SPECTRAL_SIZE_CAP} vertices, got {g.n}")
    if tol is None:
        tol = 1e-8 * max(1, max(len(s) for s in g.neighbors))
    eig = np.linalg.eigvalsh(g.adjacency_matrix(dtype=np.float64))[::-1]
    entries = []
    start = 0
    for i in range(1, len(eig) + 1):
        if i == len(eig) or eig[i - 1] - eig[i] > tol:
            cluster = eig[start:i]
            entries.append((float(cluster.mean()), len(cluster)))
            start = i
    k = regularity(g)
    if k is not None and is_connected(g):
        if abs(entries[0][0] - k) > 1e-6:
            raise RuntimeError("eigensolver sanity check failed: top eigenvalue far from k")
        # the Perron eigenvalue of a connected k-regular graph is exactly k
        entries[0] = (float(k), entries[0][1])
    return Spectrum(tuple(entries), tol, g.n)


def _as_object(a: np.ndarray) -> np.ndarray:
    return np.array([[int(x) for x in row] for row in a], dtype=object)


def sphere_poly_matrix(g: Graph, i: int) -> np.ndarray:
    """S_i evaluated at the adjacency matrix, entrywise exact integers.

    Entry (u, w) counts non-backtracking walks of length i from u to w.
    Runs in int64 and switches to Python ints before overflow could occur.
    """
    k = regularity(g)
    if k is None:
        raise ValueError("polynomial evaluation requires a regular graph")
    if i < 0 or i > MAX_DEGREE:
        raise ValueError(f"index must lie in 0..{MAX_DEGREE}, got {i}")
    n = g.n
    if i == 0:
        return np.eye(n, dtype=np.int64)
    a = g.adjacency_matrix(dtype=np.int64)
    if i == 1:
        return a
    prev = np.eye(n, dtype=np.int64)
    cur = a
    mprev = mcur = 1
    exact64 = True
    for m in range(2, i + 1):
        coef = k if m == 2 else k - 1
        if exact64 and k * mcur + coef * mprev >= _INT64_SAFE:
            a = _as_object(a)
            prev = _as_object(prev)
            cur = _as_object(cur)
            exact64 = False
        prev, cur = cur, np.dot(a, cur) - coef * prev
        mprev, mcur = mcur, int(np.abs(cur).max()) if n else 0
    return cur


def girth_spectral(g: Graph) -> int:
    """Girth as the first index with a nonzero trace of S_i at the adjacency matrix.

    Uses float64 matrix products while every entry is exactly representable,
    then falls back to exact integers (never needed within the size cap).
    """
    k = regularity(g)
    if k is None:
        raise ValueError("spectral girth requires a regular graph")
    if not is_connected(g):
        raise ValueError("spectral girth requires a connected graph")
    if k < 2:
        raise ValueError("graph has no cycle")
    n = g.n
    a = g.adjacency_matrix(dtype=np.float64)
    prev = np.eye(n)
    cur = a.copy()
    mprev = mcur = 1
    exact = True
    for i in range(1, 2 * n + 1):
        trace = sum(int(x) for x in np.diagonal(cur))
        if trace != 0:
            return i
        coef = k if i == 1 else k - 1
        if exact and k * mcur + coef * mprev >= _FLOAT_SAFE:
            a = _as_object(a)
            prev = _as_object(prev)
            cur = _as_object(cur)
            exact = False
        prev, cur = cur, np.dot(a, cur) - coef * prev
        mprev, mcur = mcur, int(np.abs(cur).max())
    raise RuntimeError("no nonzero trace within the scan cap")


@dataclass(frozen=True)
class HoffmanData:
    """Weight for the top sphere matrix in the all-ones decomposition.

    For a connected k-regular graph with d+1 distinct eigenvalues and girth
    at least 2d, the matrices S_0(A) + ... + S_{d-1}(A) + S_d(A)/geodesic_count
    sum to the all-ones matrix; geodesic_count is the common number of shortest
    paths between vertices at distance d.
    """

    geodesic_count: int
    residual: float


def hoffman_decomposition(g: Graph) -> HoffmanData:
    """Extract the all-ones decomposition weight and its residual, exactly."""
    k = regularity(g)
    if k is None or not is_connected(g) or k < 2:
        raise ValueError("decomposition requires a connected regular graph of degree >= 2")
    d = spectrum(g).d
    girth = girth_bfs(g)
    if girth is not None and girth < 2 * d:
        raise ValueError(f"girth {girth} below required 2d = {2 * d}")
    dist = all_pairs_distances(g)
    if int(dist.max()) != d:
        raise ValueError(f"diameter {int(dist.max())} differs from d = {d}")
    mats = [sphere_poly_matrix(g, i) for i in range(d + 1)]
    far = dist == d
    values = {int(x) for x in mats[d][far]}
    if len(values) != 1:
        raise ValueError(f"top sphere matrix non-constant on distance-d pairs: {sorted(values)}")
    count = values.pop()
    if count < 1:
        raise ValueError(f"decomposition weight must be a positive integer, got {count}")
    ball = sum(mats[:d])
    # count * (J - ball) must equal S_d(A) entrywise; residual measured exactly.
    gap = count * (1 - ball) - mats[d]
    residual = Fraction(int(np.abs(gap).max()), count)
    return HoffmanData(count, float(residual))


def spectral_gap(g: Graph) -> float:
    """k minus the second-largest distinct eigenvalue of a connected regular graph."""
    k = regularity(g)
    if k is None or not is_connected(g):
        raise ValueError("spectral gap requires a connected regular graph")
    spec = spectrum(g)
    if spec.d < 1:
        raise ValueError("graph has a single distinct eigenvalue")
    return float(k - spec.entries[1][0])
