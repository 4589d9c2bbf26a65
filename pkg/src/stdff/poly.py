"""Dense univariate polynomials over a finite coefficient field.

The coefficient field is any handle providing ``zero``, ``one``, ``order``,
``characteristic``, ``add``, ``sub``, ``neg``, ``mul``, ``inv``, ``is_zero``
and Steinitz conversion (``PrimeField`` and ``StandardField`` both do).
Over a prime field the coefficients are plain ints and the hot loops use
integer arithmetic directly.
"""
from __future__ import annotations

import threading

import numpy as np

from . import polyvec
from .errors import DomainError, NotInvertibleError
from .linalg import dtype_for

__all__ = [
    "DensePoly",
    "poly_divrem",
    "poly_gcd",
    "poly_powmod",
    "poly_mulmod",
    "is_irreducible",
    "q_power_matrix",
]


class DensePoly:
    """Polynomial with ascending coefficients, trailing zeros stripped."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = list(coeffs)
        if field.is_prime_field:
            p = field.p
            coeffs = [int(c) % p for c in coeffs]
        while coeffs and field.is_zero(coeffs[-1]):
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls, field) -> "DensePoly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, c) -> "DensePoly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, k: int, c=None) -> "DensePoly":
        return cls(field, [field.zero] * k + [field.one if c is None else c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"DensePoly({self.field!r}, {list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.field.is_zero(c):
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if c == self.field.one and mono:
                terms.append(mono)
            else:
                cs = str(c)
                if not self.field.is_prime_field and mono:
                    cs = f"({cs})"
                terms.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(terms)

    def _check(self, other):
        if other.field != self.field:
            raise DomainError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return DensePoly(F, out)

    def __neg__(self):
        F = self.field
        return DensePoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if not isinstance(other, DensePoly):
            return DensePoly(F, [F.mul(c, other) for c in self.coeffs])
        self._check(other)
        return DensePoly(F, _mul(F, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __pow__(self, e: int):
        result = DensePoly.constant(self.field, self.field.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def monic(self) -> "DensePoly":
        if not self.coeffs:
            raise DomainError("zero polynomial has no monic normalization")
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return DensePoly(F, [F.mul(c, inv) for c in self.coeffs])

    def derivative(self) -> "DensePoly":
        F = self.field
        out = []
        for k in range(1, len(self.coeffs)):
            c = self.coeffs[k]
            acc = F.zero
            for _ in range(k % F.characteristic):
                acc = F.add(acc, c)
            out.append(acc)
        return DensePoly(F, out)


# -- kernels -------------------------------------------------------------------

def _mul(F, a, b):
    if not a or not b:
        return []
    if F.is_prime_field:
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    if polyvec.worthwhile(F, len(a), len(b)):
        return polyvec.from_matrix(F, polyvec.conv(F, polyvec.to_matrix(F, a), polyvec.to_matrix(F, b)))
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _divrem_lists(F, a, b):
    """Quotient and remainder lists; b nonzero with stripped coefficients."""
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    rem = list(a)
    quot_len = len(a) - db
    if F.is_prime_field:
        p = F.p
        inv = pow(b[-1], -1, p)
        quot = [0] * quot_len
        for k in range(quot_len - 1, -1, -1):
            c = rem[k + db] * inv % p
            quot[k] = c
            if c:
                for j in range(db):
                    rem[k + j] = (rem[k + j] - c * b[j]) % p
            rem[k + db] = 0
        return quot, rem[:db]
    if polyvec.worthwhile(F, len(b), len(a) - db):
        quot, rem = polyvec.divrem(F, polyvec.to_matrix(F, a), polyvec.to_matrix(F, b))
        return polyvec.from_matrix(F, quot), polyvec.from_matrix(F, rem)
    inv = F.inv(b[-1])
    quot = [F.zero] * quot_len
    for k in range(quot_len - 1, -1, -1):
        c = F.mul(rem[k + db], inv)
        quot[k] = c
        if not F.is_zero(c):
            for j in range(db):
                rem[k + j] = F.sub(rem[k + j], F.mul(c, b[j]))
        rem[k + db] = F.zero
    return quot, rem[:db]


def poly_divrem(f: DensePoly, g: DensePoly) -> tuple[DensePoly, DensePoly]:
    """``(q, r)`` with ``f = q*g + r`` and ``deg r < deg g``."""
    f._check(g)
    if g.is_zero():
        raise NotInvertibleError("polynomial division by zero")
    q, r = _divrem_lists(f.field, f.coeffs, g.coeffs)
    return DensePoly(f.field, q), DensePoly(f.field, r)


def _strip(F, a):
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def _gcd_prime(p, a, b):
    a = list(a)
    b = list(b)
    while b:
        # remainder of a mod b, in place
        db = len(b) - 1
        inv = pow(b[-1], -1, p)
        while len(a) - 1 >= db:
            c = a[-1] * inv % p
            if c:
                off = len(a) - 1 - db
                for j in range(db):
                    a[off + j] = (a[off + j] - c * b[j]) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return a


def poly_gcd(f: DensePoly, g: DensePoly) -> DensePoly:
    """Monic greatest common divisor."""
    f._check(g)
    F = f.field
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if F.is_prime_field:
        a = _gcd_prime(F.p, f.coeffs, g.coeffs)
        return DensePoly(F, a).monic()
    if polyvec.worthwhile(F, len(f.coeffs), len(g.coeffs)):
        G = polyvec.gcd(F, polyvec.to_matrix(F, f.coeffs), polyvec.to_matrix(F, g.coeffs))
        return DensePoly(F, polyvec.from_matrix(F, G)).monic()
    a, b = list(f.coeffs), list(g.coeffs)
    while b:
        _, r = _divrem_lists(F, a, b)
        a, b = b, _strip(F, r)
    return DensePoly(F, a).monic()


def poly_mulmod(a: DensePoly, b: DensePoly, f: DensePoly) -> DensePoly:
    F = f.field
    if polyvec.worthwhile(F, f.degree, f.degree) and f.is_monic():
        A = polyvec.to_matrix(F, (a % f).coeffs)
        B = polyvec.to_matrix(F, (b % f).coeffs)
        fmat = polyvec.to_matrix(F, f.coeffs)
        return DensePoly(F, polyvec.from_matrix(F, polyvec.mulmod(F, A, B, fmat)))
    _, r = _divrem_lists(F, _mul(F, a.coeffs, b.coeffs), f.coeffs)
    return DensePoly(F, r)


def poly_powmod(base: DensePoly, e: int, f: DensePoly) -> DensePoly:
    """``base^e mod f`` by repeated squaring."""
    if f.degree < 1:
        raise DomainError("modulus must have positive degree")
    if e < 0:
        raise DomainError("negative exponent")
    F = f.field
    result = DensePoly.constant(F, F.one) % f
    b = base % f
    while e:
        if e & 1:
            result = poly_mulmod(result, b, f)
        e >>= 1
        if e:
            b = poly_mulmod(b, b, f)
    return result


# -- the q-power map -----------------------------------------------------------

_qmap_lock = threading.Lock()
_qmap_cache: dict = {}
_QMAP_CACHE_MAX = 256


def q_power_matrix(f: DensePoly):
    """Matrix of ``h -> h^q mod f`` (q = |K|) on the basis ``1, X, ..., X^(r-1)``.

    Row i holds ``X^(i*q) mod f``.  Over a prime field this is an int
    numpy array; otherwise a list of coefficient lists.
    """
    key = (f.field, f.coeffs)
    with _qmap_lock:
        hit = _qmap_cache.get(key)
    if hit is not None:
        return hit
    F = f.field
    r = f.degree
    q = F.order
    if F.is_prime_field:
        mat = _q_matrix_prime(F.p, f.coeffs, r)
    else:
        xq = poly_powmod(DensePoly.x(F), q, f)
        rows = [DensePoly.constant(F, F.one)]
        for _ in range(1, r):
            rows.append(poly_mulmod(rows[-1], xq, f))
        mat = [[row[j] for j in range(r)] for row in rows]
    with _qmap_lock:
        if len(_qmap_cache) >= _QMAP_CACHE_MAX:
            _qmap_cache.clear()
        _qmap_cache[key] = mat
    return mat


def _q_matrix_prime(p, fco, r):
    dtype = dtype_for(p, r)
    fvec = np.array(fco[:r], dtype=dtype)
    mat = np.zeros((r, r), dtype=dtype)
    mat[0, 0] = 1
    if p <= 8 * r:
        # walk X^k mod f for k up to (r-1)*p by repeated multiplication by X
        if r <= 32:
            fl = list(fco[:r])
            v = [1] + [0] * (r - 1)
            for k in range(1, (r - 1) * p + 1):
                top = v[-1]
                v = [0] + v[:-1]
                if top:
                    v = [(a - top * b) % p for a, b in zip(v, fl)]
                if k % p == 0:
                    mat[k // p] = v
            return mat
        v = np.zeros(r, dtype=dtype)
        v[0] = 1
        for k in range(1, (r - 1) * p + 1):
            top = v[-1]
            v[1:] = v[:-1].copy()
            v[0] = 0
            if top:
                v = (v - top * fvec) % p
            if k % p == 0:
                mat[k // p] = v
        return mat
    F = _prime_field(p)
    fpoly = DensePoly(F, fco)
    xq = poly_powmod(DensePoly.x(F), p, fpoly)
    row = DensePoly.constant(F, 1)
    for i in range(1, r):
        row = poly_mulmod(row, xq, fpoly)
        mat[i, : len(row.coeffs)] = row.coeffs
    return mat


def _prime_field(p):
    from .base_arith import prime_field

    return prime_field(p)


def is_irreducible(f: DensePoly) -> bool:
    """Irreducibility over the coefficient field K, |K| = q.

    ``f`` has no factor of degree dividing t iff ``gcd(f, X^(q^t) - X) = 1``;
    checking t = 1 .. deg(f)//2 in ascending order rejects polynomials with
    small factors early. ``X^(q^t) mod f`` is obtained by applying the
    K-linear q-power map t times.
    """
    if f.is_zero() or f.degree < 1:
        raise DomainError("irreducibility needs a polynomial of positive degree")
    if not f.is_monic():
        raise DomainError("is_irreducible expects a monic polynomial")
    r = f.degree
    if r == 1:
        return True
    F = f.field
    Q = q_power_matrix(f)
    if F.is_prime_field:
        p = F.p
        fco = f.coeffs
        h = np.zeros(r, dtype=Q.dtype)
        h[1 % r] = 1
        for _ in range(1, r // 2 + 1):
            h = h @ Q % p
            diff = [int(c) for c in h]
            diff[1] = (diff[1] - 1) % p
            g = _gcd_prime(p, fco, _strip(F, diff))
            if len(g) > 1:
                return False
        return True
    if polyvec.worthwhile(F, r, r):
        return _is_irreducible_vec(f, Q)
    h = [F.zero] * r
    h[1] = F.one
    for _ in range(1, r // 2 + 1):
        new = [F.zero] * r
        for i, c in enumerate(h):
            if F.is_zero(c):
                continue
            row = Q[i]
            for j in range(r):
                new[j] = F.add(new[j], F.mul(c, row[j]))
        h = new
        diff = list(h)
        diff[1] = F.sub(diff[1], F.one)
        g = poly_gcd(f, DensePoly(F, diff))
        if g.degree > 0:
            return False
    return True


def _is_irreducible_vec(f: DensePoly, Q) -> bool:
    F = f.field
    r = f.degree
    qmap = polyvec.LinearMap(F, np.stack([polyvec.to_matrix(F, row) for row in Q]))
    fmat = polyvec.to_matrix(F, f.coeffs)
    h = np.zeros((r, F.n), dtype=np.int64)
    h[1, 0] = 1
    for _ in range(1, r // 2 + 1):
        h = qmap.apply(h)
        diff = h.copy()
        diff[1, 0] = (diff[1, 0] - 1) % F.p
        if polyvec.gcd(F, fmat, diff).shape[0] > 1:
            return False
    return True
