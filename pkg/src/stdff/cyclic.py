"""Standard generators of cyclic subgroups of GF(p^n)^x.

``standard_cyclic_generator_prime_power(p, n, r)`` returns the element
y_{n,r} of order r^t, where r^t exactly divides p^n - 1.  The choice is made
compatible across degrees: y_{n,r} is the embedding of the generator of the
smallest subfield with the same r-part, and when passing from GF(p^(n/r))
to GF(p^n) the generator is the Steinitz-smallest r-th root of the previous
one.  ``standard_generator`` combines these into an element y_m of any order
m dividing p^n - 1, normalised so that y_m^(m/d) = y_d.

>>> standard_generator(7, 1, 6).steinitz
5
"""
from __future__ import annotations

import math
from fractions import Fraction

from .base_arith import (
    Factorization,
    divisors,
    is_prime,
    mod_inverse,
    multiplicative_order_mod,
    r_valuation,
)
from .errors import DomainError, FactorizationError, NoSolutionError
from .steinitz import standard_affine_shift
from .stdfield import FieldElement, standard_field
from .stdpoly import construction_lock

__all__ = [
    "LiftValue",
    "lift_value",
    "r_multiplicity_closed_form",
    "standard_cyclic_generator_prime_power",
    "rth_root_steinitz_smallest",
    "pohlig_hellman_log",
    "standard_generator",
    "element_order",
    "BSGS_THRESHOLD",
]

# Values a/m mod 1 of the lift to roots of unity; Fraction keeps them reduced.
LiftValue = Fraction

# Pohlig-Hellman digits are found by a linear scan up to this prime.
BSGS_THRESHOLD = 64


def lift_value(a: int, m: int) -> Fraction:
    """The fraction a/m reduced into [0, 1)."""
    if m < 1:
        raise DomainError("denominator must be positive")
    return Fraction(a % m, m)


def r_multiplicity_closed_form(p: int, k: int, r: int) -> int:
    """v_r(p^k - 1) without forming p^k.

    >>> r_multiplicity_closed_form(3, 2, 2), r_multiplicity_closed_form(2, 6, 3)
    (3, 2)
    """
    if r == p:
        raise DomainError("r must differ from the characteristic")
    if k < 1:
        raise DomainError("k must be positive")
    if r == 2:
        if k % 2:
            return r_valuation(p - 1, 2)
        return r_valuation(p * p - 1, 2) + r_valuation(k, 2) - 1
    l0 = multiplicative_order_mod(p, r)
    if k % l0:
        return 0
    return r_valuation(p**l0 - 1, r) + r_valuation(k // l0, r)


_generators: dict[tuple[int, int, int], FieldElement] = {}


def standard_cyclic_generator_prime_power(p: int, n: int, r: int) -> FieldElement:
    """The standard element y_{n,r} of GF(p^n), of order r^v_r(p^n - 1)."""
    key = (p, n, r)
    y = _generators.get(key)
    if y is not None:
        return y
    if not is_prime(p) or not is_prime(r):
        raise DomainError("p and r must be prime")
    if r == p or r_multiplicity_closed_form(p, n, r) == 0:
        raise DomainError(f"{r} does not divide {p}^{n} - 1")
    with construction_lock:
        y = _generators.get(key)
        if y is None:
            y = _cyclic_generator(p, n, r)
            _generators[key] = y
    return y


def _cyclic_generator(p: int, n: int, r: int) -> FieldElement:
    F = standard_field(p, n)
    t = r_multiplicity_closed_form(p, n, r)
    # smallest subfield already holding the full r-part
    k = next(d for d in divisors(n) if r_multiplicity_closed_form(p, d, r) == t)
    if k < n:
        return standard_cyclic_generator_prime_power(p, k, r).embed(F)
    # base degree: the first level where r divides the group order
    if r == 2 and p % 4 == 3 and n % 2 == 0:
        l = 2
    else:
        l = next(d for d in divisors(n) if r_multiplicity_closed_form(p, d, r) > 0)
    if l == n:
        # at the base level: pseudo-random search for an element that is not an r-th power
        q = F.order
        e = (q - 1) // r
        count = 1
        x = F.from_steinitz(standard_affine_shift(q, count))
        while not x or x**e == F.one:
            count += 1
            x = F.from_steinitz(standard_affine_shift(q, count))
        return x ** ((q - 1) // r**t)
    # above the base level: r-th root of the generator one level down
    below = standard_cyclic_generator_prime_power(p, n // r, r).embed(F)
    return rth_root_steinitz_smallest(below, r, t)


def _order_rt_element(F, r: int, t: int) -> FieldElement:
    # deterministic search: powers x^((q-1)/r^t) until one has order exactly r^t
    q = F.order
    e = (q - 1) // r**t
    top = r ** (t - 1)
    count = 1
    while True:
        x = F.from_steinitz(standard_affine_shift(q, count))
        if x:
            w = x**e
            if w**top != F.one:
                return w
        count += 1


def rth_root_steinitz_smallest(target: FieldElement, r: int, t: int) -> FieldElement:
    """Steinitz-smallest r-th root of ``target``, whose order divides r^(t-1).

    r^t must exactly divide the order of the multiplicative group; the roots
    then form a coset of the r-th roots of unity inside the r^t-subgroup.
    In the generator construction the target has order exactly r^(t-1).
    """
    F = target.field
    q = F.order
    if t < 1 or (q - 1) % r**t or ((q - 1) // r**t) % r == 0:
        raise DomainError(f"{r}^{t} is not the exact {r}-part of |{F!r}^x|")
    if not target or target ** (r ** (t - 1)) != F.one:
        raise DomainError(f"the order of target does not divide {r}^{t - 1}")
    y = _order_rt_element(F, r, t)
    if t == 1:
        root = F.one
    else:
        b = pohlig_hellman_log(y**r, target, r, t - 1)
        root = y**b
    zeta = y ** (r ** (t - 1))
    best, best_s = None, None
    cand = root
    for _ in range(r):
        s = cand.steinitz
        if best_s is None or s < best_s:
            best, best_s = cand, s
        cand = cand * zeta
    return best


def pohlig_hellman_log(g: FieldElement, h: FieldElement, r: int, s: int) -> int:
    """e in [0, r^s) with g^e = h, for g of order r^s.

    Digits base r are found one at a time in the subgroup of order r, by
    linear scan for small r and baby-step giant-step otherwise.
    """
    F = g.field
    if s == 0:
        if h != F.one:
            raise NoSolutionError("h is not in the subgroup generated by g")
        return 0
    gamma = g ** (r ** (s - 1))
    if gamma == F.one:
        raise DomainError(f"g does not have order {r}^{s}")
    ginv = g.inverse()
    e = 0
    for j in range(s):
        hj = (ginv**e * h) ** (r ** (s - 1 - j))
        d = _log_order_r(gamma, hj, r)
        e += d * r**j
    if g**e != h:
        raise NoSolutionError("h is not in the subgroup generated by g")
    return e


def _log_order_r(gamma: FieldElement, h: FieldElement, r: int) -> int:
    one = gamma.field.one
    if r <= BSGS_THRESHOLD:
        cur = one
        for d in range(r):
            if cur == h:
                return d
            cur = cur * gamma
        raise NoSolutionError("h is not in the subgroup generated by g")
    m = math.isqrt(r - 1) + 1
    baby = {}
    cur = one
    for j in range(m):
        baby.setdefault(cur.key(), j)
        cur = cur * gamma
    giant = gamma ** (r - m)  # gamma^(-m)
    cur = h
    for i in range(m):
        j = baby.get(cur.key())
        if j is not None:
            return (i * m + j) % r
        cur = cur * giant
    raise NoSolutionError("h is not in the subgroup generated by g")


def _check_factorization(m: int, fac: Factorization | None) -> Factorization:
    if fac is None:
        from .factor_db import factorize

        fac = factorize(m)
    if not fac.complete or fac.value != m:
        raise FactorizationError(f"no complete factorization of {m} available")
    return fac


def standard_generator(p: int, n: int, m: int, fac_m: Factorization | None = None) -> FieldElement:
    """The standard element y_m of order m in GF(p^n).

    Without ``fac_m`` the integer m is factored locally.
    """
    F = standard_field(p, n)
    if m < 1:
        raise DomainError("m must be positive")
    fac = _check_factorization(m, fac_m)
    for r, e in fac:
        if r == p or r_multiplicity_closed_form(p, n, r) < e:
            raise DomainError(f"{m} does not divide {p}^{n} - 1")
    if m == 1:
        return F.one
    y = F.one
    a = 0
    for r, tr in fac:
        sr = r_multiplicity_closed_form(p, n, r)
        y = y * standard_cyclic_generator_prime_power(p, n, r) ** (r ** (sr - tr))
        a += m // r**tr
    return y ** mod_inverse(a % m, m)


def element_order(x: FieldElement, fac: Factorization) -> int:
    """Multiplicative order of x, given the factorization of a multiple N of it."""
    if not x:
        raise DomainError("zero has no multiplicative order")
    if not fac.complete:
        raise FactorizationError("factorization is incomplete")
    N = fac.value
    one = x.field.one
    if x**N != one:
        raise FactorizationError(f"x^{N} != 1; the factorization does not cover the order")
    order = N
    for r, e in fac:
        for _ in range(e):
            if x ** (order // r) == one:
                order //= r
            else:
                break
    return order
