"""Fixed-size linear algebra for the six-leg length system.

Hand-rolled 6x6 LU with partial pivoting: the solvers need the pivot
magnitudes (numerical rank), a null vector when the rank drops to five,
and a particular solution of the rank-deficient system, none of which
numpy.linalg.solve exposes.  3-vector dot/cross products and 3x3 matrix
algebra stay plain numpy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Inconsistent, RankDeficient, WrongRank

N = 6

# Pivots below RANK_EPS times the largest pivot count as zero.
RANK_EPS = 1e-9


def consistency_tol(rhs) -> float:
    """Slack allowed on the unsolvable row of a rank-5 system.

    Relative in the right-hand side because leg lengths enter it squared.
    """
    return 1e-8 * (1.0 + float(np.max(np.abs(rhs))))


@dataclass(frozen=True, eq=False)
class LUFactorization:
    """P @ a == lower @ upper, row i of P @ a being row perm[i] of a."""

    lower: np.ndarray   # unit lower triangular
    upper: np.ndarray   # upper triangular; diagonal holds the pivots
    perm: np.ndarray    # row permutation as an index vector
    pivots: np.ndarray  # |pivot| recorded at each elimination step
    rank: int


def lu_factor(m) -> LUFactorization:
    """Row-pivoted LU of a 6x6 matrix; never fails, reports numerical rank."""
    a = np.array(m, dtype=float)
    if a.shape != (N, N):
        raise ValueError(f"expected a {N}x{N} matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    perm = np.arange(N)
    for k in range(N):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if p != k:
            a[[k, p]] = a[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        piv = a[k, k]
        if piv != 0.0:
            # pivot is the column max, so multipliers stay within [-1, 1]
            a[k + 1:, k] /= piv
            a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k], a[k, k + 1:])
        # piv == 0.0 means the whole subcolumn is zero: nothing to eliminate
    lower = np.tril(a, -1) + np.eye(N)
    upper = np.triu(a)
    pivots = np.abs(np.diagonal(upper)).copy()
    top = float(pivots.max())
    rank = int(np.count_nonzero(pivots > RANK_EPS * top)) if top > 0.0 else 0
    return LUFactorization(lower=lower, upper=upper, perm=perm, pivots=pivots, rank=rank)


def _forward(f: LUFactorization, rhs) -> np.ndarray:
    y = np.asarray(rhs, dtype=float)[f.perm]
    for i in range(1, N):
        y[i] -= f.lower[i, :i] @ y[:i]
    return y


def _free_column(f: LUFactorization) -> int:
    thr = RANK_EPS * float(f.pivots.max())
    return int(np.nonzero(f.pivots <= thr)[0][0])


def solve6(f: LUFactorization, rhs) -> np.ndarray:
    """Solve the full-rank system; RankDeficient below rank 6."""
    if f.rank < N:
        raise RankDeficient(f"matrix has numerical rank {f.rank}, need {N}")
    x = _forward(f, rhs)
    for i in range(N - 1, -1, -1):
        x[i] = (x[i] - f.upper[i, i + 1:] @ x[i + 1:]) / f.upper[i, i]
    return x


def null_vector(f: LUFactorization) -> np.ndarray:
    """Unit kernel vector of a rank-5 matrix."""
    if f.rank != 5:
        raise WrongRank(f"null vector needs rank 5, matrix has rank {f.rank}")
    k = _free_column(f)
    n = np.zeros(N)
    n[k] = 1.0
    # rows below k force their unknowns to zero; rows above back-substitute
    for i in range(k - 1, -1, -1):
        n[i] = -(f.upper[i, i + 1:] @ n[i + 1:]) / f.upper[i, i]
    return n / np.linalg.norm(n)


def solve_rank_deficient(f: LUFactorization, rhs) -> np.ndarray:
    """Particular solution of a rank-5 system, free coordinate zeroed.

    Inconsistent when the right-hand side leaves the column space by more
    than consistency_tol(rhs).
    """
    if f.rank != 5:
        raise WrongRank(f"rank-deficient solve needs rank 5, matrix has rank {f.rank}")
    rhs = np.asarray(rhs, dtype=float)
    tol = consistency_tol(rhs)
    b = rhs[f.perm]
    y = _forward(f, rhs)
    k = _free_column(f)
    w = np.zeros(N)
    for i in range(N - 1, k, -1):
        w[i] = (y[i] - f.upper[i, i + 1:] @ w[i + 1:]) / f.upper[i, i]
    gap = y[k] - f.upper[k, k + 1:] @ w[k + 1:]
    if abs(gap) > tol:
        raise Inconsistent(
            f"right-hand side leaves the column space by {abs(gap):.3g} (tolerance {tol:.3g})")
    for i in range(k - 1, -1, -1):
        w[i] = (y[i] - f.upper[i, i + 1:] @ w[i + 1:]) / f.upper[i, i]
    resid = float(np.max(np.abs(f.lower @ (f.upper @ w) - b)))
    if resid > tol:
        raise Inconsistent(f"residual {resid:.3g} exceeds tolerance {tol:.3g}")
    return w


def _perm_parity(perm) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = int(perm[j])
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_from_factorization(f: LUFactorization) -> float:
    return _perm_parity(f.perm) * float(np.prod(np.diagonal(f.upper)))


def det6(m) -> float:
    """Determinant of a 6x6 matrix via the pivoted LU."""
    return det_from_factorization(lu_factor(m))
