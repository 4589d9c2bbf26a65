"""Canonical enumerations of field elements and polynomials.

Steinitz numbers read the tower-basis coordinates of an element as base-p
digits (least significant first).  Polynomials over a field K are numbered
by reading the Steinitz numbers of their coefficients as base-|K| digits.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

from .errors import DomainError
from .poly import DensePoly

__all__ = [
    "standard_affine_shift",
    "affine_shift_parameters",
    "int_to_digits",
    "digits_to_int",
    "element_to_steinitz",
    "steinitz_to_element",
    "poly_from_steinitz",
    "poly_to_steinitz",
    "SteinitzPair",
    "steinitz_pair",
    "element_from_steinitz_pair",
]


@lru_cache(maxsize=4096)
def affine_shift_parameters(q: int) -> tuple[int, int]:
    """``(m, a)``: m largest with m <= 4q/5 and gcd(m, q) = 1, a = floor(2q/3)."""
    if q < 1:
        raise DomainError("q must be positive")
    m = 4 * q // 5
    while math.gcd(m, q) != 1:
        m -= 1
    return m, 2 * q // 3


def standard_affine_shift(q: int, i: int) -> int:
    """``(m*i + a) mod q``; a bijection of ``range(q)`` as a function of i mod q."""
    m, a = affine_shift_parameters(q)
    return (m * i + a) % q


def int_to_digits(s: int, base: int, length: int) -> list[int]:
    if s < 0:
        raise DomainError("Steinitz numbers are non-negative")
    if s >= base**length:
        raise DomainError(f"{s} needs more than {length} base-{base} digits")
    out = []
    for _ in range(length):
        s, d = divmod(s, base)
        out.append(d)
    return out


def digits_to_int(digits, base: int) -> int:
    s = 0
    for d in reversed(list(digits)):
        s = s * base + int(d)
    return s


def element_to_steinitz(x) -> int:
    """Steinitz number of a field element (an int for prime fields)."""
    field = getattr(x, "field", None)
    if field is None:
        return int(x)
    return field.to_steinitz(x)


def steinitz_to_element(field, s: int):
    return field.from_steinitz(s)


def poly_from_steinitz(field, s: int) -> DensePoly:
    """Polynomial whose coefficients are the base-|K| digits of s."""
    if s < 0:
        raise DomainError("Steinitz numbers are non-negative")
    q = field.order
    coeffs = []
    while s:
        s, d = divmod(s, q)
        coeffs.append(field.from_steinitz(d))
    return DensePoly(field, coeffs)


def poly_to_steinitz(f: DensePoly) -> int:
    q = f.field.order
    s = 0
    for c in reversed(f.coeffs):
        s = s * q + f.field.to_steinitz(c)
    return s


class SteinitzPair(NamedTuple):
    """Degree of an element over GF(p) and its number in GF(p^degree)."""

    degree: int
    number: int


def steinitz_pair(x) -> SteinitzPair:
    field = getattr(x, "field", None)
    if field is None:
        return SteinitzPair(1, int(x))
    return field.steinitz_pair(x)


def element_from_steinitz_pair(field, pair: SteinitzPair):
    """Element of ``field`` described by a Steinitz pair (degree must divide)."""
    from .stdfield import standard_field

    n, s = pair
    sub = standard_field(field.p, n)
    return sub.from_steinitz(s).embed(field)
