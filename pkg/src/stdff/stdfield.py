"""Standard finite fields GF(p^n) and their elements.

A standard field is stored as a simple extension ``GF(p)[x_n]`` where the
primitive element x_n is the product of the top tower generators
``x_{r,l}`` (one per prime power ``r^l || n``).  Alongside the defining
polynomial f_n we keep the matrix whose row i holds ``x_n^i`` in tower-basis
coordinates, and its inverse.  Steinitz numbers, embeddings into larger
fields and element degrees are all read off from tower coordinates.

Elements are coefficient vectors in the power basis ``1, x_n, ..., x_n^(n-1)``.

>>> F = standard_field(2, 4)
>>> list(F.defining_poly.coeffs)
[1, 1, 0, 0, 1]
>>> F.from_steinitz(2).degree()
2
"""
from __future__ import annotations

import math
from functools import reduce

import numpy as np

from .base_arith import (
    is_prime,
    largest_prime_factor,
    prime_divisors_small,
    prime_field,
    r_valuation,
)
from .errors import DomainError, IncompatibleFieldsError, NotInvertibleError
from .linalg import DependencyFinder, dtype_for, mat_inv
from .poly import DensePoly
from .steinitz import SteinitzPair, digits_to_int, int_to_digits
from .stdpoly import construction_lock, standard_prime_degree_poly

__all__ = [
    "StandardField",
    "FieldElement",
    "standard_field",
    "tower_degree_list",
    "tower_generators",
    "embed",
    "element_degree",
    "ff_product",
    "ff_inverse",
    "ff_pow",
    "frobenius",
    "minimal_polynomial",
    "multivariate_form",
]


def tower_degree_list(n: int) -> tuple[int, ...]:
    """Degrees over GF(p) of the tower basis elements of GF(p^n), in order."""
    if n < 1:
        raise DomainError("n must be positive")
    if n == 1:
        return (1,)
    r = largest_prime_factor(n)
    rl = r ** r_valuation(n, r)
    prev = tower_degree_list(n // r)
    tail = tuple(d * rl // math.gcd(d, rl) for d in prev)
    return prev + tail * (r - 1)


def tower_generators(n: int) -> tuple[tuple[int, int], ...]:
    """Generators ``(r, i)`` of the tower of GF(p^n), innermost first."""
    return tuple((r, i) for r, e in prime_divisors_small(n) for i in range(1, e + 1))


class StandardField:
    """The standard field GF(p^n).  Use :func:`standard_field` to obtain one."""

    is_prime_field = False

    def __init__(self, p, n, fcoeffs, to_tower, from_tower):
        self.p = p
        self.n = n
        self.degree = n
        self.characteristic = p
        self.order = p**n
        self.dtype = dtype_for(p, n)
        self.prime_field = prime_field(p)
        self.defining_poly = DensePoly(self.prime_field, fcoeffs)
        self.degree_list = tower_degree_list(n)
        self.generators = tower_generators(n)
        self.to_tower = np.array(to_tower, dtype=self.dtype)
        self.from_tower = np.array(from_tower, dtype=self.dtype)
        self._f = np.array(fcoeffs[:n], dtype=self.dtype)
        self._red = self._reduction_matrix()
        self._positions: dict[int, np.ndarray] = {}
        self._embeddings: dict[int, np.ndarray] = {}
        self._frob = None
        self.zero = FieldElement(self, np.zeros(n, dtype=self.dtype))
        one = np.zeros(n, dtype=self.dtype)
        one[0] = 1
        self.one = FieldElement(self, one)
        if n == 1:
            self.gen = self.one
        else:
            g = np.zeros(n, dtype=self.dtype)
            g[1] = 1
            self.gen = FieldElement(self, g)

    def _reduction_matrix(self):
        # row k: X^(n+k) mod f_n, for k = 0 .. n-2
        n, p = self.n, self.p
        red = np.zeros((max(n - 1, 0), n), dtype=self.dtype)
        if n > 1:
            v = (-self._f) % p
            red[0] = v
            for k in range(1, n - 1):
                red[k] = self._shift(red[k - 1])
        return red

    def _shift(self, v):
        # multiply a power-basis vector by x_n
        top = v[-1]
        out = np.empty_like(v)
        out[0] = 0
        out[1:] = v[:-1]
        if top:
            out = (out - top * self._f) % self.p
        return out

    # -- identity ------------------------------------------------------------

    def __repr__(self):
        return f"GF({self.p}^{self.n})"

    def __eq__(self, other):
        return isinstance(other, StandardField) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash(("StandardField", self.p, self.n))

    def __reduce__(self):
        return (standard_field, (self.p, self.n))

    # -- construction of elements ----------------------------------------------

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime field scalar), a coefficient vector or an element."""
        if isinstance(value, FieldElement):
            return value if value.field is self else value.embed(self)
        if isinstance(value, (int, np.integer)):
            return self.scalar(int(value))
        vec = np.array([int(v) for v in value], dtype=object) % self.p
        if vec.shape != (self.n,):
            raise DomainError(f"expected {self.n} coefficients")
        return FieldElement(self, vec.astype(self.dtype))

    def scalar(self, c: int) -> "FieldElement":
        v = np.zeros(self.n, dtype=self.dtype)
        v[0] = c % self.p
        return FieldElement(self, v)

    def element(self, vec) -> "FieldElement":
        return self(vec)

    def from_tower_coords(self, coords) -> "FieldElement":
        t = np.array([int(c) for c in coords], dtype=self.dtype) % self.p
        return FieldElement(self, t @ self.from_tower % self.p)

    def from_steinitz(self, s: int) -> "FieldElement":
        if not 0 <= s < self.order:
            raise DomainError(f"Steinitz number {s} out of range for {self!r}")
        return self.from_tower_coords(int_to_digits(s, self.p, self.n))

    def elements(self):
        """All elements in Steinitz order (small fields only)."""
        for v in self.all_vectors():
            yield FieldElement(self, v)

    def all_vectors(self, limit: int = 10**6) -> np.ndarray:
        """Power-basis vectors of all elements, row s = Steinitz number s."""
        if self.order > limit:
            raise DomainError(f"{self!r} has more than {limit} elements")
        s = np.arange(self.order, dtype=np.int64)
        digits = np.empty((self.order, self.n), dtype=np.int64)
        for j in range(self.n):
            s, digits[:, j] = np.divmod(s, self.p)
        return digits.astype(self.dtype) @ self.from_tower % self.p

    def steinitz_of_vectors(self, vecs) -> np.ndarray:
        """Steinitz numbers of the rows of a 2-d array of power-basis vectors."""
        tower = np.asarray(vecs, dtype=self.dtype) @ self.to_tower % self.p
        weights = np.array([self.p**j for j in range(self.n)], dtype=object)
        if self.order < 2**62:
            weights = weights.astype(np.int64)
            return tower.astype(np.int64) @ weights
        return tower.astype(object) @ weights

    # -- coefficient-field protocol ----------------------------------------------

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def pow(self, a, e):
        return a**e

    def is_zero(self, a) -> bool:
        return not a.vec.any()

    def to_steinitz(self, x: "FieldElement") -> int:
        return digits_to_int(self.tower_coords(x), self.p)

    # -- structure ---------------------------------------------------------------

    def tower_coords(self, x: "FieldElement") -> np.ndarray:
        return x.vec @ self.to_tower % self.p

    def subfield_positions(self, m: int) -> np.ndarray:
        """Tower positions j with d_j | m; they form the tower basis of GF(p^m)."""
        pos = self._positions.get(m)
        if pos is None:
            if self.n % m:
                raise IncompatibleFieldsError(f"{m} does not divide {self.n}")
            pos = np.array([j for j, d in enumerate(self.degree_list) if m % d == 0])
            self._positions[m] = pos
        return pos

    def embedding_matrix(self, target: "StandardField") -> np.ndarray:
        """Matrix E with ``embed(x).vec == x.vec @ E % p``."""
        if target.p != self.p or target.n % self.n:
            raise IncompatibleFieldsError(f"cannot embed {self!r} into {target!r}")
        E = self._embeddings.get(target.n)
        if E is None:
            rows = target.from_tower[target.subfield_positions(self.n)]
            E = self.to_tower.astype(target.dtype) @ rows % self.p
            self._embeddings[target.n] = E
        return E

    def mul_matrix(self, x: "FieldElement") -> np.ndarray:
        """Matrix M with ``(y * x).vec == y.vec @ M % p``; row i is x * x_n^i."""
        rows = np.empty((self.n, self.n), dtype=self.dtype)
        v = x.vec
        for i in range(self.n):
            rows[i] = v
            v = self._shift(v)
        return rows

    @property
    def frobenius_matrix(self) -> np.ndarray:
        """Matrix of x -> x^p on the power basis."""
        if self._frob is None:
            # row i is (x_n^p)^i
            g = self._pow_vec(self.gen.vec, self.p)
            rows = np.empty((self.n, self.n), dtype=self.dtype)
            v = self.one.vec
            for i in range(self.n):
                rows[i] = v
                v = self._mul_vec(v, g)
            self._frob = rows
        return self._frob

    def steinitz_pair(self, x: "FieldElement") -> SteinitzPair:
        t = self.tower_coords(x)
        d = self._degree_from_tower(t)
        digits = t[self.subfield_positions(d)]
        return SteinitzPair(d, digits_to_int(digits, self.p))

    def _degree_from_tower(self, t) -> int:
        degs = [self.degree_list[j] for j in np.nonzero(t)[0]]
        return reduce(lambda a, b: a * b // math.gcd(a, b), degs, 1)

    # -- vector kernels ----------------------------------------------------------

    def _mul_vec(self, a, b):
        p, n = self.p, self.n
        prod = np.convolve(a, b) % p
        if n == 1:
            return prod
        return (prod[:n] + prod[n:] @ self._red) % p

    def mul_rows(self, A, B):
        """Row-wise products of two stacks of power-basis vectors."""
        A = np.asarray(A, dtype=self.dtype)
        B = np.asarray(B, dtype=self.dtype)
        p, n = self.p, self.n
        prod = np.zeros((A.shape[0], 2 * n - 1), dtype=self.dtype)
        for i in range(n):
            prod[:, i : i + n] += A[:, i : i + 1] * B
        prod %= p
        if n == 1:
            return prod
        return (prod[:, :n] + prod[:, n:] @ self._red) % p

    def _pow_vec(self, v, e):
        result = self.one.vec
        base = v
        while e:
            if e & 1:
                result = self._mul_vec(result, base)
            e >>= 1
            if e:
                base = self._mul_vec(base, base)
        return result

    def _inv_vec(self, v):
        p = self.p
        a = [int(c) for c in v]
        while a and a[-1] == 0:
            a.pop()
        if not a:
            raise NotInvertibleError("inverse of zero")
        f = [int(c) for c in self.defining_poly.coeffs]
        inv = _poly_inverse_mod(a, f, p)
        out = np.zeros(self.n, dtype=self.dtype)
        out[: len(inv)] = inv
        return out


def _poly_inverse_mod(a, f, p):
    """Inverse of a modulo the irreducible f over GF(p) (extended Euclid)."""
    r0, r1 = list(f), list(a)
    s0, s1 = [], [1]
    while len(r1) > 1:
        # one full division step r0 = q*r1 + rem
        inv_lead = pow(r1[-1], -1, p)
        q = [0] * (len(r0) - len(r1) + 1)
        rem = list(r0)
        d = len(r1) - 1
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + d] * inv_lead % p
            q[k] = c
            if c:
                for j in range(d + 1):
                    rem[k + j] = (rem[k + j] - c * r1[j]) % p
        rem = rem[:d]
        while rem and rem[-1] == 0:
            rem.pop()
        # s2 = s0 - q*s1
        prod = [0] * (len(q) + len(s1) - 1) if s1 else []
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(s1):
                    prod[i + j] += x * y
        s2 = [0] * max(len(s0), len(prod))
        for i, x in enumerate(s0):
            s2[i] += x
        for i, x in enumerate(prod):
            s2[i] -= x
        s2 = [c % p for c in s2]
        while s2 and s2[-1] == 0:
            s2.pop()
        r0, r1 = r1, rem
        s0, s1 = s1, s2
        if not r1:
            raise NotInvertibleError("element shares a factor with the modulus")
    c = pow(r1[0], -1, p)
    return [x * c % p for x in s1]


class FieldElement:
    """An element of a standard field, stored in the power basis.

    Supports ``+ - * / **`` (ints act as prime-field scalars), equality,
    hashing and ordering-free comparison.  Operands from different standard
    fields of the same characteristic are first embedded into the smallest
    common standard field.
    """

    __slots__ = ("field", "vec", "_key")

    def __init__(self, field: StandardField, vec):
        self.field = field
        self.vec = vec
        self._key = None

    def _coerce(self, other):
        F = self.field
        if isinstance(other, FieldElement):
            if other.field is F or other.field == F:
                return self, other
            if other.field.p != F.p:
                raise IncompatibleFieldsError("different characteristics")
            n = F.n * other.field.n // math.gcd(F.n, other.field.n)
            G = standard_field(F.p, n)
            return self.embed(G), other.embed(G)
        if isinstance(other, (int, np.integer)):
            return self, F.scalar(int(other))
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.field, (a.vec + b.vec) % a.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.field, (a.vec - b.vec) % a.field.p)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(self.field, (-self.vec) % self.field.p)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, self.vec * (int(other) % self.field.p) % self.field.p)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.field, a.field._mul_vec(a.vec, b.vec))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv_vec(self.vec))

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        F = self.field
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return F.one
        if not self.vec.any():
            return F.zero
        e %= F.order - 1
        if e == 0:
            return F.one
        return FieldElement(F, F._pow_vec(self.vec, e))

    def __bool__(self):
        return bool(self.vec.any())

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(int(c) for c in self.vec)
        return self._key

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                if other.field.p != self.field.p:
                    return False
                a, b = self._coerce(other)
                return a.key() == b.key()
            return self.key() == other.key()
        if isinstance(other, (int, np.integer)):
            return self.key() == self.field.scalar(int(other)).key()
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.key()))

    def __repr__(self):
        return f"<{self.field!r} element, Steinitz {self.steinitz}>"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.key()):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(mono if (c == 1 and mono) else (f"{c}*{mono}" if mono else str(c)))
        return " + ".join(terms) or "0"

    # -- structure -----------------------------------------------------------------

    @property
    def steinitz(self) -> int:
        return self.field.to_steinitz(self)

    def tower_coords(self) -> np.ndarray:
        return self.field.tower_coords(self)

    def steinitz_pair(self) -> SteinitzPair:
        return self.field.steinitz_pair(self)

    def degree(self) -> int:
        """Degree over GF(p): lcm of tower-basis degrees with nonzero coordinate."""
        return self.field._degree_from_tower(self.tower_coords())

    def embed(self, target: StandardField) -> "FieldElement":
        if target is self.field:
            return self
        E = self.field.embedding_matrix(target)
        return FieldElement(target, self.vec.astype(target.dtype) @ E % target.p)

    def frobenius(self, k: int = 1) -> "FieldElement":
        F = self.field
        v = self.vec
        for _ in range(k % F.n):
            v = v @ F.frobenius_matrix % F.p
        return FieldElement(F, v)

    def minimal_polynomial(self) -> DensePoly:
        """Minimal polynomial over GF(p), from the first dependency among powers."""
        F = self.field
        finder = DependencyFinder(F.p, F.dtype)
        v = F.one.vec
        while True:
            combo = finder.add(v)
            if combo is not None:
                return DensePoly(F.prime_field, combo)
            v = F._mul_vec(v, self.vec)

    def multivariate_form(self) -> list[tuple[int, dict[tuple[int, int], int]]]:
        """Nonzero tower coordinates paired with their monomials.

        Each entry is ``(coefficient, {(r, i): exponent})``, the monomial being
        a product of the tower generators x_{r,i} with exponents below r.
        """
        out = []
        gens = self.field.generators
        for j in np.nonzero(self.tower_coords())[0]:
            c = int(self.tower_coords()[j])
            idx = int(j)
            mono = {}
            for r, i in gens:
                idx, e = divmod(idx, r)
                if e:
                    mono[(r, i)] = e
            out.append((c, mono))
        return out

    def multivariate_str(self) -> str:
        parts = []
        for c, mono in self.multivariate_form():
            m = "*".join(
                f"X_{{{r},{i}}}" + (f"^{e}" if e > 1 else "") for (r, i), e in sorted(mono.items())
            )
            if not m:
                parts.append(str(c))
            else:
                parts.append(m if c == 1 else f"{c}*{m}")
        return " + ".join(parts) or "0"


# -- construction ----------------------------------------------------------------

_fields: dict[tuple[int, int], StandardField] = {}


def standard_field(p: int, n: int) -> StandardField:
    """The standard field GF(p^n), built once and shared."""
    key = (p, n)
    F = _fields.get(key)
    if F is not None:
        return F
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError("degree must be positive")
    with construction_lock:
        F = _fields.get(key)
        if F is None:
            F = _build(p, n)
            _fields[key] = F
    return F


def _build(p: int, n: int) -> StandardField:
    if n == 1:
        # f_1 = X - 1, so x_1 = 1 (the empty product of tower generators)
        eye = [[1]]
        return StandardField(p, 1, [p - 1, 1], eye, eye)
    r = largest_prime_factor(n)
    m = n // r
    t = r_valuation(n, r)
    Fm = standard_field(p, m)
    dt = dtype_for(p, n)

    rec = standard_prime_degree_poly(p, r, t)
    k = r ** (t - 1)
    pos = Fm.subfield_positions(k)
    mats = []
    for s in rec.coeff_steinitz[:r]:
        if s == 0:
            mats.append(None)
            continue
        tower = np.zeros(m, dtype=Fm.dtype)
        tower[pos] = int_to_digits(s, p, k)
        mats.append(Fm.mul_matrix(FieldElement(Fm, tower @ Fm.from_tower % p)))

    # x_n = x_{n'} * x_{r,t}, with x_{n'} the generator of GF(p^{n'}) inside GF(p^m)
    n1 = n // r**t
    x_n1 = standard_field(p, n1).gen.embed(Fm)
    mx = Fm.mul_matrix(x_n1)

    # powers of x_n as polynomials in x_{r,t} of degree < r over GF(p^m)
    state = np.zeros((r, m), dtype=Fm.dtype)
    state[0, 0] = 1
    rows = np.empty((n + 1, n), dtype=dt)
    for e in range(n + 1):
        rows[e] = (state @ Fm.to_tower % p).reshape(n)
        if e == n:
            break
        state = state @ mx % p
        top = state[r - 1].copy()
        state[1:] = state[:-1].copy()
        state[0] = 0
        if top.any():
            for j, M in enumerate(mats):
                if M is not None:
                    state[j] = (state[j] - top @ M) % p
    to_tower = rows[:n]
    from_tower = mat_inv(to_tower, p)
    c = rows[n] @ from_tower % p
    fco = [(-int(ci)) % p for ci in c] + [1]
    return StandardField(p, n, fco, to_tower, from_tower)


# -- functional interface -------------------------------------------------------------

def embed(x: FieldElement, target: StandardField) -> FieldElement:
    return x.embed(target)


def element_degree(x: FieldElement) -> int:
    return x.degree()


def ff_product(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def ff_inverse(x: FieldElement) -> FieldElement:
    return x.inverse()


def ff_pow(x: FieldElement, e: int) -> FieldElement:
    return x**e


def frobenius(x: FieldElement, k: int = 1) -> FieldElement:
    return x.frobenius(k)


def minimal_polynomial(x: FieldElement) -> DensePoly:
    return x.minimal_polynomial()


def multivariate_form(x: FieldElement):
    return x.multivariate_form()
