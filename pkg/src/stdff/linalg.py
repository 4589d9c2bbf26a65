"""Dense linear algebra over GF(p) on numpy arrays.

Arrays use int64 when all intermediate sums are guaranteed to fit,
otherwise dtype=object (exact Python ints, slower).
"""
from __future__ import annotations

import numpy as np

from .errors import NotInvertibleError

_INT64_SAFE = 2**62


def dtype_for(p: int, n: int):
    """dtype able to hold a length-n dot product of residues mod p."""
    if max(n, 2) * (p - 1) ** 2 < _INT64_SAFE:
        return np.int64
    return object


def asmod(a, p: int, dtype) -> np.ndarray:
    arr = np.array(a, dtype=dtype)
    return arr % p


def identity(n: int, dtype) -> np.ndarray:
    return np.eye(n, dtype=np.int64).astype(dtype)


def mat_inv(m: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p by Gauss-Jordan elimination."""
    n = m.shape[0]
    work = np.concatenate([m % p, identity(n, m.dtype)], axis=1)
    for col in range(n):
        nz = np.nonzero(work[col:, col])[0]
        if nz.size == 0:
            raise NotInvertibleError("singular matrix")
        piv = col + int(nz[0])
        if piv != col:
            work[[col, piv]] = work[[piv, col]]
        inv = pow(int(work[col, col]), -1, p)
        work[col] = work[col] * inv % p
        factors = work[:, col].copy()
        factors[col] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            work[rows] = (work[rows] - np.outer(factors[rows], work[col])) % p
    return work[:, n:].copy()


class DependencyFinder:
    """Incremental row echelon form that reports the first dependent row.

    ``add(v)`` returns None while the rows stay independent; for the first
    row in their span it returns coefficients ``c`` (one per row added so far,
    the last equal to 1) with ``sum c_i * row_i = 0``.
    """

    def __init__(self, p: int, dtype):
        self.p = p
        self.dtype = dtype
        self.rows: list[tuple[int, np.ndarray, list[int]]] = []
        self.count = 0

    def add(self, v):
        p = self.p
        v = np.array(v, dtype=self.dtype) % p
        k = self.count
        combo = [0] * (k + 1)
        combo[k] = 1
        for col, row, rcombo in self.rows:
            c = int(v[col])
            if c:
                v = (v - c * row) % p
                for i, a in enumerate(rcombo):
                    if a:
                        combo[i] = (combo[i] - c * a) % p
        self.count += 1
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return combo
        col = int(nz[0])
        inv = pow(int(v[col]), -1, p)
        self.rows.append((col, v * inv % p, [a * inv % p for a in combo]))
        return None
