"""Exact dense linear algebra over a FieldCtx.

All matrices are numpy int64 arrays of field-element codes.  Row reduction is
vectorized per pivot so the inner loops run in numpy, not Python.
"""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def rref(ctx: FieldCtx, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = R.shape
    pivots = []
    pr = 0
    for col in range(ncols):
        if pr >= nrows:
            break
        nz = np.nonzero(R[pr:, col])[0]
        if nz.size == 0:
            continue
        sel = pr + nz[0]
        if sel != pr:
            R[[pr, sel]] = R[[sel, pr]]
        piv = int(R[pr, col])
        if piv != 1:
            R[pr] = ctx.mul(R[pr], int(ctx.inv(piv)))
        factors = R[:, col].copy()
        factors[pr] = 0
        mask = factors != 0
        if np.any(mask):
            R[mask] = ctx.sub(R[mask], ctx.mul(factors[mask][:, None], R[pr][None, :]))
        pivots.append(col)
        pr += 1
    return R, pivots


def rank(ctx: FieldCtx, A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return len(rref(ctx, A)[1])


def nullspace(ctx: FieldCtx, A: np.ndarray) -> np.ndarray:
    """Basis of the right kernel, as columns of an (ncols x k) matrix."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    if A.size == 0:
        return identity(ncols)
    R, pivots = rref(ctx, A)
    free = [c for c in range(ncols) if c not in pivots]
    N = zeros(ncols, len(free))
    for j, fc in enumerate(free):
        N[fc, j] = 1
        for i, pc in enumerate(pivots):
            N[pc, j] = ctx.neg(int(R[i, fc]))
    return N


def solve(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """One solution X of A @ X = B, or raise ValueError if inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    vec = B.ndim == 1
    if vec:
        B = B[:, None]
    ncols = A.shape[1]
    R, pivots = rref(ctx, np.hstack([A, B]))
    for i in range(len(pivots)):
        if pivots[i] >= ncols:
            raise ValueError("inconsistent linear system")
    X = zeros(ncols, B.shape[1])
    for i, pc in enumerate(pivots):
        X[pc] = R[i, ncols:]
    return X[:, 0] if vec else X


def inv_matrix(ctx: FieldCtx, A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = rref(ctx, np.hstack([A, identity(n)]))
    if len(pivots) < n or pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


def left_inverse(ctx: FieldCtx, B: np.ndarray) -> np.ndarray:
    """L with L @ B = I for a full-column-rank B."""
    return solve(ctx, B.T, identity(B.shape[1]).T).T


def column_space(ctx: FieldCtx, A: np.ndarray) -> np.ndarray:
    """The pivot columns of A: a basis of its column space."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return zeros(A.shape[0], 0)
    _, pivots = rref(ctx, A)
    return A[:, pivots]


def kron(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Kronecker product over the field."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    m, n = A.shape
    pq = B.shape
    out = ctx.mul(A[:, None, :, None], B[None, :, None, :])
    return np.asarray(out, dtype=np.int64).reshape(m * pq[0], n * pq[1])


def scale(ctx: FieldCtx, c: int, A: np.ndarray) -> np.ndarray:
    return np.asarray(ctx.mul(int(c), np.asarray(A, dtype=np.int64)), dtype=np.int64)


def matpow(ctx: FieldCtx, A: np.ndarray, e: int) -> np.ndarray:
    result = identity(A.shape[0])
    for _ in range(e):
        result = ctx.matmul(result, A)
    return result
