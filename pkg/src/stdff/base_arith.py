"""Integer helpers and prime field arithmetic.

Everything here works on plain Python ints, so there is no size limit:
Steinitz numbers of large fields are ordinary integers.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, FactorizationError, NotInvertibleError

__all__ = [
    "mod_pow",
    "mod_inverse",
    "r_valuation",
    "multiplicative_order_mod",
    "is_prime",
    "primality_is_proven",
    "MR_DETERMINISTIC_LIMIT",
    "divisors",
    "prime_divisors_small",
    "largest_prime_factor",
    "Factorization",
    "PrimeField",
    "prime_field",
]


def mod_pow(b: int, e: int, m: int) -> int:
    if m <= 0:
        raise DomainError("modulus must be positive")
    if e < 0:
        raise DomainError("exponent must be non-negative")
    return pow(b, e, m)


def mod_inverse(a: int, m: int) -> int:
    """Return ``b`` with ``a*b = 1 (mod m)`` and ``0 < b < m``."""
    if m < 2:
        raise DomainError("modulus must be at least 2")
    if math.gcd(a, m) != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def r_valuation(n: int, r: int) -> int:
    """Exponent of the prime ``r`` in ``n``, i.e. the ``t`` with ``r^t || n``."""
    if n <= 0:
        raise DomainError("valuation of a non-positive integer is undefined")
    if r < 2:
        raise DomainError("r must be a prime")
    t = 0
    while n % r == 0:
        n //= r
        t += 1
    return t


def multiplicative_order_mod(q: int, r: int) -> int:
    """Order of ``q`` modulo the prime ``r``; it divides ``r - 1``."""
    if q % r == 0:
        raise DomainError(f"{r} divides {q}")
    from .factor_db import factorize

    order = r - 1
    fac = factorize(r - 1)
    if not fac.complete:
        raise FactorizationError(f"cannot factor {r - 1}")
    for prime, _ in fac:
        while order % prime == 0 and pow(q, order // prime, r) == 1:
            order //= prime
    return order


# -- primality --------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameter choice: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
        if d == 13 and math.isqrt(n) ** 2 == n:
            return False
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    inv2 = (n + 1) // 2
    u, v, qk = 0, 2, 1
    for bit in bin(k)[2:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


# Miller-Rabin with the first 12 prime bases is exact below this bound.
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def primality_is_proven(n: int) -> bool:
    """Whether ``is_prime(n)`` is a proof rather than the Baillie-PSW test.

    Baillie-PSW has no known counterexample, but it is not a proof.
    """
    return n < MR_DETERMINISTIC_LIMIT


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic Miller-Rabin (first 12 prime bases) below 3.3e24, which
    covers every 64-bit input; Baillie-PSW above. No BPSW counterexample is
    known, but it is not a proof of primality.
    """
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
    if n < 37 * 37:
        return True
    if n < MR_DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _SMALL_PRIMES)
    return _miller_rabin(n, (2,)) and _strong_lucas(n)


# -- small factorizations -----------------------------------------------------

@lru_cache(maxsize=4096)
def prime_divisors_small(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization, for small n such as field degrees."""
    if n < 1:
        raise DomainError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def largest_prime_factor(n: int) -> int:
    return prime_divisors_small(n)[-1][0]


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of a small positive integer."""
    divs = [1]
    for r, e in prime_divisors_small(n):
        divs = [d * r**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``prod(r**e for r, e in factors) * cofactor``.

    ``cofactor`` is 1 for a complete factorization; otherwise it is the
    composite part that could not be split.
    """

    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int = 1

    def __post_init__(self):
        factors = tuple((int(r), int(e)) for r, e in self.factors)
        object.__setattr__(self, "factors", factors)
        last = 1
        for r, e in factors:
            if r <= last:
                raise FactorizationError("primes must be strictly increasing")
            if e < 1:
                raise FactorizationError(f"exponent of {r} must be positive")
            if not is_prime(r):
                raise FactorizationError(f"{r} is not prime")
            last = r
        if self.cofactor < 1:
            raise FactorizationError("cofactor must be positive")

    @classmethod
    def from_mapping(cls, mapping) -> "Factorization":
        return cls(tuple(sorted((r, e) for r, e in dict(mapping).items() if e)))

    @classmethod
    def parse(cls, text: str) -> "Factorization":
        """Parse whitespace separated ``prime[^exp]`` tokens; repeats accumulate."""
        acc: dict[int, int] = {}
        for tok in text.split():
            base, _, exp = tok.partition("^")
            try:
                r = int(base)
                e = int(exp) if exp else 1
            except ValueError:
                raise FactorizationError(f"bad factor token {tok!r}") from None
            acc[r] = acc.get(r, 0) + e
        return cls.from_mapping(acc)

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def value(self) -> int:
        v = self.cofactor
        for r, e in self.factors:
            v *= r**e
        return v

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.factors)

    def exponent(self, r: int) -> int:
        for q, e in self.factors:
            if q == r:
                return e
        return 0

    def restrict(self, m: int) -> "Factorization":
        """Factorization of a divisor ``m`` of a completely factored value."""
        if not self.complete:
            raise FactorizationError("cannot restrict an incomplete factorization")
        out = []
        for r, _ in self.factors:
            e = 0
            while m % r == 0:
                m //= r
                e += 1
            if e:
                out.append((r, e))
        if m != 1:
            raise FactorizationError("argument does not divide the factored value")
        return Factorization(tuple(out))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __str__(self):
        parts = [f"{r}^{e}" if e > 1 else str(r) for r, e in self.factors]
        if self.cofactor != 1:
            parts.append(f"({self.cofactor})")
        return " ".join(parts)


class PrimeField:
    """The field Z/pZ.

    Elements are plain ints in ``[0, p)``; the field object carries the
    modulus so that vectors and polynomials stay compact.
    """

    is_prime_field = True
    degree = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value: int) -> int:
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise NotInvertibleError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_steinitz(self, s: int) -> int:
        if not 0 <= s < self.p:
            raise DomainError(f"Steinitz number {s} out of range for GF({self.p})")
        return s

    def to_steinitz(self, a) -> int:
        return a % self.p

    def elements(self):
        return range(self.p)


_pf_lock = threading.Lock()
_pf_cache: dict[int, PrimeField] = {}


def prime_field(p: int) -> PrimeField:
    """Shared PrimeField instance for ``p``."""
    field = _pf_cache.get(p)
    if field is None:
        with _pf_lock:
            field = _pf_cache.get(p)
            if field is None:
                field = _pf_cache[p] = PrimeField(p)
    return field
