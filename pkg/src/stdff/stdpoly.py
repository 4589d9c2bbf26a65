"""Standard irreducible polynomials of prime degree r over GF(p^(r^(i-1))).

For each prime r and level i >= 1 there is one standard monic polynomial
f_{r,i} of degree r; adjoining its root x_{r,i} to GF(p^(r^(i-1))) gives
GF(p^(r^i)).  Which construction is used depends on how r relates to p:

* ``A``: r = p, Artin-Schreier polynomials ``X^p - X - c``;
* ``B``: r | p-1 (and 4 | p-1 when r = 2), radicals ``X^r - a`` then
  ``X^r - x_{r,i-1}``;
* ``C``: r = 2 and 4 | p+1, ``X^2 + 1``, then ``X^2 - a`` over GF(p^2),
  then ``X^2 - x_{2,i-1}``;
* ``D``: everything else, a deterministic pseudo-random search with fixed
  constant term (-1 on level 1, -x_{r,i-1} above).

Coefficients are stored as Steinitz numbers over the base field of the
level, which is also the format of the optional cache file::

    # p r i: s0 s1 ... sr
    2 5 1: 1 0 1 0 0 1
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

from .base_arith import is_prime, prime_field
from .errors import DomainError, IntegrityError, TableFormatError
from .poly import DensePoly, is_irreducible
from .steinitz import poly_from_steinitz, standard_affine_shift

__all__ = [
    "StdPolyKey",
    "StdPolyRecord",
    "construction_case",
    "non_rth_power",
    "find_irreducible_polynomial",
    "standard_prime_degree_poly",
    "load_stdpoly_cache",
    "save_stdpoly_cache",
    "clear_stdpoly_cache",
]


@dataclass(frozen=True)
class StdPolyKey:
    p: int
    r: int
    i: int


@dataclass(frozen=True)
class StdPolyRecord:
    key: StdPolyKey
    coeff_steinitz: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeff_steinitz) - 1

    def base_field(self):
        """The field GF(p^(r^(i-1))) the coefficients live in."""
        p, r, i = self.key.p, self.key.r, self.key.i
        if i == 1:
            return prime_field(p)
        from .stdfield import standard_field

        return standard_field(p, r ** (i - 1))

    def polynomial(self) -> DensePoly:
        K = self.base_field()
        return DensePoly(K, [K.from_steinitz(s) for s in self.coeff_steinitz])

    def line(self) -> str:
        k = self.key
        return f"{k.p} {k.r} {k.i}: " + " ".join(map(str, self.coeff_steinitz))


def construction_case(p: int, r: int) -> str:
    """Which of the four constructions ('A'..'D') applies to (p, r)."""
    if r == p:
        return "A"
    if (p - 1) % r == 0 and (r != 2 or (p - 1) % 4 == 0):
        return "B"
    if r == 2:
        # p odd and 4 does not divide p-1, hence 4 | p+1
        return "C"
    return "D"


def non_rth_power(F, r: int):
    """First element, in StandardAffineShift order, that is not an r-th power."""
    q = F.order
    if (q - 1) % r:
        raise DomainError(f"{r} does not divide |F^x| = {q - 1}; every element is an r-th power")
    e = (q - 1) // r
    i = 0
    a = F.zero
    while F.is_zero(a) or F.pow(a, e) == F.one:
        i += 1
        a = F.from_steinitz(standard_affine_shift(q, i))
    return a


def find_irreducible_polynomial(K, r: int, a) -> DensePoly:
    """Irreducible monic ``X^r + g*X + a`` over K, first in the standard order.

    Candidates: ``X^r + X + a`` first; afterwards the Steinitz number of g
    runs through ``StandardAffineShift(|K|^(d-1), count)`` where the digit
    budget d grows by ``inc`` (minimal with |K|^inc >= 2r) every r trials.
    """
    if K.is_zero(a):
        raise DomainError("constant term must be nonzero")
    q = K.order
    inc = 1
    while q**inc < 2 * r:
        inc += 1
    d = 0
    head = [K.zero] * r + [K.one]
    first = list(head)
    first[0] = a
    first[1] = K.add(first[1], K.one)
    f = DensePoly(K, first)
    count = 0
    while not is_irreducible(f):
        if count % r == 0:
            d = min(d + inc, r - 1)
        s = standard_affine_shift(q ** (d - 1), count)
        g = poly_from_steinitz(K, s)
        coeffs = list(head)
        coeffs[0] = a
        for j, c in enumerate(g.coeffs):
            coeffs[j + 1] = K.add(coeffs[j + 1], c)
        f = DensePoly(K, coeffs)
        count += 1
    return f


# One lock for every memoized construction (polynomials and fields), since
# building either may recurse into the other.
construction_lock = threading.RLock()
_lock = construction_lock
_cache: dict[tuple[int, int, int], StdPolyRecord] = {}


def clear_stdpoly_cache():
    with _lock:
        _cache.clear()


def standard_prime_degree_poly(p: int, r: int, i: int) -> StdPolyRecord:
    """The standard polynomial f_{r,i} for characteristic p (memoized)."""
    key = (p, r, i)
    rec = _cache.get(key)
    if rec is not None:
        return rec
    if not is_prime(p) or not is_prime(r):
        raise DomainError("p and r must be prime")
    if i < 1:
        raise DomainError("level i must be positive")
    with _lock:
        rec = _cache.get(key)
        if rec is None:
            rec = StdPolyRecord(StdPolyKey(p, r, i), _construct(p, r, i))
            _cache[key] = rec
    return rec


def _construct(p: int, r: int, i: int) -> tuple[int, ...]:
    case = construction_case(p, r)
    coeffs = [0] * (r + 1)
    coeffs[r] = 1
    if case == "A":
        coeffs[1] = p - 1
        # -(x_{p,1} ... x_{p,i-1})^(p-1) is minus the last tower basis vector
        coeffs[0] = p - 1 if i == 1 else (p - 1) * p ** (p ** (i - 1) - 1)
        return tuple(coeffs)
    if case == "B":
        if i == 1:
            coeffs[0] = (p - non_rth_power(prime_field(p), r)) % p
        else:
            coeffs[0] = _minus_top_generator(p, r, i)
        return tuple(coeffs)
    if case == "C":
        if i == 1:
            coeffs[0] = 1
        elif i == 2:
            from .stdfield import standard_field

            F2 = standard_field(p, 2)
            coeffs[0] = F2.to_steinitz(-non_rth_power(F2, 2))
        else:
            coeffs[0] = _minus_top_generator(p, r, i)
        return tuple(coeffs)
    # case D
    if i == 1:
        K = prime_field(p)
        a = p - 1
    else:
        from .stdfield import standard_field

        K = standard_field(p, r ** (i - 1))
        a = K.from_steinitz(_minus_top_generator(p, r, i))
    f = find_irreducible_polynomial(K, r, a)
    return tuple(K.to_steinitz(c) for c in f.coeffs)


def _minus_top_generator(p: int, r: int, i: int) -> int:
    # -x_{r,i-1} in GF(p^(r^(i-1))): digit p-1 at tower position r^(i-2)
    return (p - 1) * p ** (r ** (i - 2))


def load_stdpoly_cache(path, validate: bool = True) -> int:
    """Merge records from a cache file; returns the number of new records.

    Every record is checked to be monic of degree r and, unless
    ``validate`` is false, irreducible over its base field.
    """
    added = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            head, sep, tail = body.partition(":")
            try:
                p, r, i = (int(t) for t in head.split())
                coeffs = tuple(int(t) for t in tail.split())
            except ValueError:
                raise TableFormatError(path, lineno, "expected 'p r i: s0 ... sr'") from None
            if not sep or not is_prime(p) or not is_prime(r) or i < 1:
                raise TableFormatError(path, lineno, "invalid key")
            if len(coeffs) != r + 1 or coeffs[-1] != 1:
                raise TableFormatError(path, lineno, "polynomial must be monic of degree r")
            rec = StdPolyRecord(StdPolyKey(p, r, i), coeffs)
            if validate:
                try:
                    ok = is_irreducible(rec.polynomial())
                except DomainError as exc:
                    raise TableFormatError(path, lineno, str(exc)) from None
                if not ok:
                    raise IntegrityError(f"{path}:{lineno}: polynomial is reducible")
            with _lock:
                old = _cache.get((p, r, i))
                if old is None:
                    _cache[(p, r, i)] = rec
                    added += 1
                elif old.coeff_steinitz != coeffs:
                    raise IntegrityError(f"{path}:{lineno}: conflicts with known record")
    return added


def save_stdpoly_cache(path, records=None):
    """Append records (default: every memoized one) to a cache file."""
    with _lock:
        recs = list(_cache.values()) if records is None else list(records)
    recs.sort(key=lambda rec: (rec.key.p, rec.key.r, rec.key.i))
    with open(path, "a", encoding="utf-8") as fh:
        for rec in recs:
            fh.write(rec.line() + "\n")
