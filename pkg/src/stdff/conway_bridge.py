"""Locating Conway-polynomial generators inside the standard fields.

Given a table of Conway polynomials C_{p,m}, the generator z_n is the root
of C_{p,n} in the standard field GF(p^n) that has the smallest Steinitz
number among the roots satisfying ``z^((p^n-1)/(p^m-1)) = z_m`` for every
proper divisor m of n.  Its Steinitz pair translates data given relative to
Conway polynomials into the standard fields.

Table files hold one polynomial per line, ascending coefficients::

    # p n: c0 c1 ... cn
    2 2: 1 1 1
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .base_arith import Factorization, divisors, is_prime, prime_field
from .cyclic import _check_factorization, lift_value, pohlig_hellman_log, standard_generator
from .errors import (
    DomainError,
    IntegrityError,
    MissingDataError,
    NoSolutionError,
    ResourceError,
    TableFormatError,
)
from .poly import DensePoly, is_irreducible, poly_gcd, poly_mulmod, poly_powmod
from .steinitz import SteinitzPair, standard_affine_shift
from .stdfield import FieldElement, StandardField, standard_field

__all__ = [
    "ConwayTable",
    "load_conway_table",
    "roots_in_field",
    "compatible_roots",
    "conway_generator",
    "steinitz_pair_conway_generator",
    "lift_log_small_order",
]


@dataclass
class ConwayTable:
    """Conway polynomials keyed by ``(p, n)``."""

    polys: dict[tuple[int, int], DensePoly] = field(default_factory=dict)

    def add(self, f: DensePoly, validate: bool = True):
        if not f.field.is_prime_field or not f.is_monic() or f.degree < 1:
            raise DomainError("Conway polynomials are monic over a prime field")
        if validate and not is_irreducible(f):
            raise IntegrityError(f"{f} is reducible")
        key = (f.field.p, f.degree)
        old = self.polys.get(key)
        if old is not None and old != f:
            raise IntegrityError(f"conflicting entries for p={key[0]}, n={key[1]}")
        self.polys[key] = f

    def lookup(self, p: int, n: int) -> DensePoly:
        try:
            return self.polys[(p, n)]
        except KeyError:
            raise MissingDataError(f"no Conway polynomial for p={p}, n={n}") from None

    def __contains__(self, key) -> bool:
        return key in self.polys

    def __len__(self) -> int:
        return len(self.polys)


def load_conway_table(path, table: ConwayTable | None = None) -> ConwayTable:
    """Read ``p n: c0 ... cn`` lines into a (new or given) table."""
    table = ConwayTable() if table is None else table
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            head, sep, tail = body.partition(":")
            try:
                p, n = (int(t) for t in head.split())
                coeffs = [int(t) for t in tail.split()]
            except ValueError:
                raise TableFormatError(path, lineno, "expected 'p n: c0 ... cn'") from None
            if not sep or not is_prime(p) or n < 1:
                raise TableFormatError(path, lineno, "invalid key")
            if len(coeffs) != n + 1 or coeffs[-1] != 1:
                raise TableFormatError(path, lineno, "polynomial must be monic of degree n")
            if any(not 0 <= c < p for c in coeffs):
                raise TableFormatError(path, lineno, f"coefficients must lie in [0, {p})")
            try:
                table.add(DensePoly(prime_field(p), coeffs))
            except IntegrityError as exc:
                raise IntegrityError(f"{path}:{lineno}: {exc}") from None
    return table


def _split_off_root(g: DensePoly, F: StandardField) -> FieldElement:
    # equal-degree splitting of a monic squarefree product of linear factors
    q = F.order
    X = DensePoly.x(F)
    count = 0
    while g.degree > 1:
        count += 1
        if count > q:
            raise IntegrityError("polynomial does not split into distinct linear factors")
        delta = F.from_steinitz(standard_affine_shift(q, count))
        if F.p == 2:
            # absolute trace of delta*X modulo g
            t = DensePoly(F, [F.zero, delta]) % g
            h = t
            for _ in range(F.n - 1):
                t = poly_mulmod(t, t, g)
                h = h + t
        else:
            h = poly_powmod(X + DensePoly.constant(F, delta), (q - 1) // 2, g)
            h = h - DensePoly.constant(F, F.one)
        if h.is_zero():
            continue
        d = poly_gcd(g, h)
        if 0 < d.degree < g.degree:
            g = d if 2 * d.degree <= g.degree else g // d
    return -g[0]


def roots_in_field(f: DensePoly, F: StandardField) -> list[FieldElement]:
    """All roots in F of an irreducible f over GF(p), by Steinitz number."""
    if not f.field.is_prime_field or f.field.p != F.p:
        raise DomainError("f must be a polynomial over the prime field of F")
    if f.degree < 1 or F.n % f.degree:
        raise DomainError(f"degree {f.degree} does not divide {F.n}")
    f = f.monic()
    if not is_irreducible(f):
        raise DomainError(f"{f} is reducible")
    g = DensePoly(F, [F.scalar(c) for c in f.coeffs])
    z = _split_off_root(g, F)
    roots = [z]
    w = z.frobenius()
    while w != z:
        roots.append(w)
        w = w.frobenius()
    return sorted(roots, key=lambda e: e.steinitz)


def compatible_roots(p: int, n: int, table: ConwayTable, lower: dict | None = None):
    """Roots of C_{p,n} in GF(p^n) compatible with the z_m of proper divisors.

    ``lower`` maps proper divisors m to z_m; missing ones are computed.
    """
    F = standard_field(p, n)
    lower = {} if lower is None else lower
    for m in divisors(n)[:-1]:
        if m not in lower:
            lower[m] = conway_generator(p, m, table)
    out = []
    for z in roots_in_field(table.lookup(p, n), F):
        if all(
            z ** ((p**n - 1) // (p**m - 1)) == lower[m].embed(F)
            for m in divisors(n)[:-1]
        ):
            out.append(z)
    return out


def conway_generator(p: int, n: int, table: ConwayTable) -> FieldElement:
    """The element z_n of GF(p^n) corresponding to the Conway polynomial."""
    zs: dict[int, FieldElement] = {}
    for m in divisors(n):
        cands = compatible_roots(p, m, table, zs)
        if not cands:
            raise IntegrityError(f"no compatible root of the Conway polynomial for p={p}, n={m}")
        zs[m] = cands[0]
    return zs[n]


def steinitz_pair_conway_generator(p: int, n: int, table: ConwayTable) -> SteinitzPair:
    """Steinitz pair of z_n.

    >>> from stdff.poly import DensePoly
    >>> t = ConwayTable()
    >>> t.add(DensePoly(prime_field(2), [1, 1])); t.add(DensePoly(prime_field(2), [1, 1, 1]))
    >>> steinitz_pair_conway_generator(2, 2, t)
    SteinitzPair(degree=2, number=2)
    """
    return conway_generator(p, n, table).steinitz_pair()


def lift_log_small_order(
    x: FieldElement,
    m: int,
    fac_m: Factorization | None = None,
    max_prime: int = 2**40,
):
    """The value a/m (a Fraction) with x = y_m^a, y_m the standard generator of order m.

    Each prime of m is handled by Pohlig-Hellman; primes above ``max_prime``
    exceed the budget and raise ResourceError.
    """
    F = x.field
    if m < 1:
        raise DomainError("m must be positive")
    if not x or x**m != F.one:
        raise DomainError(f"x^{m} != 1")
    fac = _check_factorization(m, fac_m)
    y = standard_generator(F.p, F.n, m, fac)
    a, mod = 0, 1
    for r, t in fac:
        if r > max_prime:
            raise ResourceError(f"prime {r} exceeds the discrete logarithm budget")
        rt = r**t
        g = y ** (m // rt)
        h = x ** (m // rt)
        try:
            ar = pohlig_hellman_log(g, h, r, t)
        except NoSolutionError:
            raise DomainError("x is not a power of the standard generator") from None
        # combine a = ar mod r^t with the previous residues
        k = (ar - a) * pow(mod, -1, rt) % rt
        a += mod * k
        mod *= rt
    return lift_value(a, m)
