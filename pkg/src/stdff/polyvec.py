"""Vectorized polynomial kernels over extension fields.

A polynomial of degree < L over a standard field GF(p^n) is stored as an
``(L, n)`` int64 array whose row k is the power-basis vector of the k-th
coefficient.  Products are two-dimensional convolutions (one axis for the
polynomial variable, one for the field's power basis) computed by a real
FFT and rounded back to exact integers, followed by one reduction of the
power-basis axis with the field's reduction matrix.  Remainders modulo a
fixed monic polynomial use a precomputed inverse of its reversal
(Barrett-style), so a modular product costs three convolutions.

The FFT route is exact as long as every convolution sum stays far below
2^53; ``_FFT_BOUND`` keeps a wide safety margin, and larger problems fall
back to row-by-row field products.
"""
from __future__ import annotations

import threading

import numpy as np

_FFT_BOUND = 2**40
_MIN_TERMS = 8

_inverse_lock = threading.Lock()
_inverse_cache: dict = {}
_INVERSE_CACHE_MAX = 64


def supported(F) -> bool:
    """True for standard extension fields whose vectors fit in int64."""
    return (
        not getattr(F, "is_prime_field", True)
        and getattr(F, "n", 1) >= 2
        and getattr(F, "dtype", None) is np.int64
    )


def worthwhile(F, la: int, lb: int) -> bool:
    return supported(F) and min(la, lb) >= _MIN_TERMS


def to_matrix(F, coeffs) -> np.ndarray:
    if not coeffs:
        return np.zeros((0, F.n), dtype=np.int64)
    return np.stack([c.vec for c in coeffs]).astype(np.int64, copy=False)


def from_matrix(F, M) -> list:
    from .stdfield import FieldElement

    return [FieldElement(F, row.copy()) for row in M]


def _reduce_basis(F, C):
    """Rows of length 2n-1 (already mod p) reduced to length n."""
    n = F.n
    return (C[:, :n] + C[:, n:] @ F._red) % F.p


def conv(F, A, B) -> np.ndarray:
    """Product of two polynomials given as coefficient matrices."""
    la, lb = A.shape[0], B.shape[0]
    if la == 0 or lb == 0:
        return np.zeros((0, F.n), dtype=np.int64)
    p, n = F.p, F.n
    rows, cols = la + lb - 1, 2 * n - 1
    if min(la, lb) * n * (p - 1) ** 2 < _FFT_BOUND:
        spectrum = np.fft.rfft2(A, (rows, cols)) * np.fft.rfft2(B, (rows, cols))
        C = np.rint(np.fft.irfft2(spectrum, (rows, cols))).astype(np.int64) % p
        return _reduce_basis(F, C)
    if la > lb:
        A, B, la, lb = B, A, lb, la
    out = np.zeros((rows, n), dtype=np.int64)
    for i in range(la):
        if A[i].any():
            out[i : i + lb] += F.mul_rows(np.broadcast_to(A[i], B.shape), B)
            out[i : i + lb] %= p
    return out


def _reversal_inverse(F, fmat) -> np.ndarray:
    """Inverse of rev(f) modulo Y^(r-1) for monic f of degree r, by Newton steps."""
    key = (F.p, F.n, fmat.tobytes())
    with _inverse_lock:
        hit = _inverse_cache.get(key)
    if hit is not None:
        return hit
    p = F.p
    r = fmat.shape[0] - 1
    m = max(r - 1, 1)
    h = fmat[::-1]
    g = np.zeros((1, F.n), dtype=np.int64)
    g[0, 0] = 1
    k = 1
    while k < m:
        k = min(2 * k, m)
        t = conv(F, h[:k], g)[:k]
        t = conv(F, t, g)[:k]
        g2 = np.zeros((k, F.n), dtype=np.int64)
        g2[: g.shape[0]] = 2 * g
        g = (g2 - t) % p
    with _inverse_lock:
        if len(_inverse_cache) >= _INVERSE_CACHE_MAX:
            _inverse_cache.clear()
        _inverse_cache[key] = g
    return g


def rem_monic(F, C, fmat) -> np.ndarray:
    """Remainder of C (length <= 2r - 1) modulo the monic f of degree r."""
    r = fmat.shape[0] - 1
    L = C.shape[0]
    if L <= r:
        return C
    if L > 2 * r - 1:
        raise ValueError("dividend too long for a single reduction")
    k = L - r
    inv = _reversal_inverse(F, fmat)
    q_rev = conv(F, C[::-1][:k], inv[:k])[:k]
    qf = conv(F, q_rev[::-1], fmat)[:r]
    return (C[:r] - qf) % F.p


def mulmod(F, A, B, fmat) -> np.ndarray:
    """``A * B mod f`` with A, B already reduced modulo the monic f."""
    return rem_monic(F, conv(F, A, B), fmat)


def divrem(F, A, B):
    """Schoolbook long division; B has a nonzero leading row."""
    la, lb = A.shape[0], B.shape[0]
    if la < lb:
        return np.zeros((0, F.n), dtype=np.int64), A.copy()
    from .stdfield import FieldElement

    p = F.p
    rem = A.copy()
    lead_inv = FieldElement(F, B[-1].copy()).inverse().vec
    body = B[:-1]
    quot = np.zeros((la - lb + 1, F.n), dtype=np.int64)
    for k in range(la - lb, -1, -1):
        top = rem[k + lb - 1]
        if not top.any():
            continue
        c = F._mul_vec(top, lead_inv)
        quot[k] = c
        if lb > 1:
            rem[k : k + lb - 1] = (rem[k : k + lb - 1] - F.mul_rows(np.broadcast_to(c, body.shape), body)) % p
        rem[k + lb - 1] = 0
    return quot, rem[: lb - 1]


def strip(M) -> np.ndarray:
    nz = np.flatnonzero(M.any(axis=1))
    return M[: nz[-1] + 1] if nz.size else M[:0]


def gcd(F, A, B) -> np.ndarray:
    """A (not necessarily monic) greatest common divisor of two polynomials."""
    A, B = strip(A), strip(B)
    while B.shape[0]:
        _, R = divrem(F, A, B)
        A, B = B, strip(R)
    return A


class LinearMap:
    """A GF(p^n)-linear map on polynomials of degree < r, as an (r, r, n) array.

    ``apply(H)`` returns ``sum_i H[i] * M[i]``; the power-basis products are
    done with one batched FFT against the precomputed transform of M.
    """

    def __init__(self, F, M):
        self.F = F
        r, _, n = M.shape
        self.r = r
        self.length = 2 * n - 1
        self.exact = r * n * (F.p - 1) ** 2 < _FFT_BOUND
        if self.exact:
            self.spectrum = np.fft.rfft(M, self.length, axis=-1)
        else:
            self.M = M

    def apply(self, H) -> np.ndarray:
        F = self.F
        if self.exact:
            Hs = np.fft.rfft(H, self.length, axis=-1)
            S = np.einsum("if,ijf->jf", Hs, self.spectrum)
            C = np.rint(np.fft.irfft(S, self.length, axis=-1)).astype(np.int64) % F.p
            return _reduce_basis(F, C)
        out = np.zeros((self.r, F.n), dtype=np.int64)
        for i in range(self.r):
            if H[i].any():
                out = (out + F.mul_rows(np.broadcast_to(H[i], self.M[i].shape), self.M[i])) % F.p
        return out
