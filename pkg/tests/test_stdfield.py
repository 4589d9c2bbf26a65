import math
import pickle

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import pmod, pmul
from stdff.base_arith import divisors
from stdff.errors import IncompatibleFieldsError, NotInvertibleError
from stdff.poly import DensePoly, is_irreducible
from stdff.stdfield import (
    element_degree,
    embed,
    ff_inverse,
    ff_pow,
    ff_product,
    frobenius,
    minimal_polynomial,
    multivariate_form,
    standard_field,
    tower_degree_list,
)
from stdff.stdpoly import standard_prime_degree_poly

FIELDS = [(2, 1), (2, 2), (2, 4), (2, 6), (2, 12), (3, 2), (3, 6), (5, 3), (7, 4), (11, 6), (2, 30), (13, 10)]


@pytest.mark.parametrize("n, expected", [(1, (1,)), (4, (1, 2, 4, 4)), (6, (1, 2, 3, 6, 3, 6))])
def test_tower_degree_list_examples(n, expected):
    assert tower_degree_list(n) == expected


@pytest.mark.parametrize("n", range(1, 61))
def test_tower_degree_list_counts(n):
    degs = tower_degree_list(n)
    assert len(degs) == n and degs[0] == 1
    assert all(n % d == 0 for d in degs)
    for m in divisors(n):
        assert sum(1 for d in degs if m % d == 0) == m


def test_build_examples():
    F = standard_field(2, 2)
    assert list(F.defining_poly.coeffs) == [1, 1, 1]
    assert (F.to_tower == np.eye(2, dtype=np.int64)).all()
    assert list(standard_field(2, 4).defining_poly.coeffs) == [1, 1, 0, 0, 1]
    assert list(standard_field(3, 2).defining_poly.coeffs) == [1, 0, 1]


def test_registry_shares_fields():
    assert standard_field(3, 4) is standard_field(3, 4)
    assert standard_field(3, 4) == standard_field(3, 4)
    assert pickle.loads(pickle.dumps(standard_field(3, 4))) is standard_field(3, 4)


@pytest.mark.parametrize("p, n", FIELDS)
def test_field_invariants(p, n):
    F = standard_field(p, n)
    f = F.defining_poly
    assert f.degree == n and f.is_monic()
    assert is_irreducible(f)
    assert ((F.to_tower.astype(object) @ F.from_tower.astype(object)) % p == np.eye(n, dtype=int)).all()
    assert list(F.to_tower[0]) == [1] + [0] * (n - 1)
    assert F.gen.minimal_polynomial() == f


def _tower_generator(F, k):
    # generator number k of the tower sits at the product of the radices before it
    index = math.prod(r for r, _ in F.generators[:k])
    coords = [0] * F.n
    coords[index] = 1
    return F.from_tower_coords(coords)


@pytest.mark.parametrize("p, n", [(2, 6), (2, 12), (3, 6), (5, 6), (2, 8), (3, 9), (7, 10), (2, 30)])
def test_tower_basis_structure(p, n):
    """Independent reading of the tower: generators satisfy their standard
    polynomials, basis vectors are monomials in them, and x_n is the product
    of the top generators."""
    F = standard_field(p, n)
    gens = [_tower_generator(F, k) for k in range(len(F.generators))]
    for (r, i), g in zip(F.generators, gens):
        rec = standard_prime_degree_poly(p, r, i)
        K = rec.base_field()
        coeffs = [F.scalar(c) if K.is_prime_field else c.embed(F) for c in rec.polynomial().coeffs]
        value = F.zero
        for c in reversed(coeffs):
            value = value * g + c
        assert value == F.zero
        if i > 1:
            # the lower generator of the same prime is x_{r,i-1}
            lower = F.generators.index((r, i - 1))
            sub = standard_field(p, r ** (i - 1))
            assert _tower_generator(sub, i - 2).embed(F) == gens[lower]
    for j in range(0, n, max(1, n // 12)):
        idx, mono = j, F.one
        for (r, _), g in zip(F.generators, gens):
            idx, e = divmod(idx, r)
            mono = mono * g**e
        assert list(mono.tower_coords()) == [1 if k == j else 0 for k in range(n)]
    top = F.one
    for k, (r, i) in enumerate(F.generators):
        if k + 1 == len(F.generators) or F.generators[k + 1][0] != r:
            top = top * gens[k]
    assert top == F.gen


def test_embed_examples():
    F4, F8, F16, F64 = (standard_field(2, n) for n in (2, 3, 4, 6))
    assert embed(F4.one, F64) == F64.one
    assert embed(F4.gen, F16).steinitz == 2
    assert embed(F8.from_steinitz(2), F64).steinitz == 4
    with pytest.raises(IncompatibleFieldsError):
        embed(F4.gen, F8)
    with pytest.raises(IncompatibleFieldsError):
        embed(F4.gen, standard_field(3, 4))


def test_element_degree_examples():
    F16 = standard_field(2, 4)
    assert element_degree(F16.zero) == 1
    assert element_degree(F16.from_steinitz(2)) == 2
    assert element_degree(F16.from_steinitz(4)) == 4


def test_arithmetic_examples_f4():
    F4 = standard_field(2, 2)
    x = F4.gen
    assert ff_product(x, x) == x + 1
    assert ff_product(x, x + 1) == F4.one
    assert ff_inverse(x) == x + 1
    assert ff_pow(x, 3) == F4.one
    with pytest.raises(NotInvertibleError):
        ff_inverse(F4.zero)


def test_frobenius_examples():
    F4, F9 = standard_field(2, 2), standard_field(3, 2)
    assert frobenius(F4.gen, 1) == F4.gen + 1
    assert frobenius(F9.scalar(2), 1) == F9.scalar(2)
    assert frobenius(F9.from_steinitz(3), 1) == 2 * F9.from_steinitz(3)


def test_minimal_polynomial_examples():
    F16 = standard_field(2, 4)
    X = DensePoly.x(F16.prime_field)
    assert minimal_polynomial(F16.zero) == X
    assert list(minimal_polynomial(F16.from_steinitz(2)).coeffs) == [1, 1, 1]
    assert list(minimal_polynomial(F16.gen).coeffs) == [1, 1, 0, 0, 1]


def test_multivariate_form_examples():
    assert multivariate_form(standard_field(2, 2).zero) == []
    assert multivariate_form(standard_field(2, 2).from_steinitz(3)) == [(1, {}), (1, {(2, 1): 1})]
    F16 = standard_field(2, 4)
    assert multivariate_form(F16.from_steinitz(4)) == [(1, {(2, 2): 1})]
    assert F16.from_steinitz(4).multivariate_str() == "X_{2,2}"
    F36 = standard_field(3, 6)
    assert F36.from_steinitz(2 * 3**5 + 1).multivariate_str() == "1 + 2*X_{2,1}*X_{3,1}^2"


@pytest.mark.parametrize("p, n", [(2, 4), (3, 3), (5, 2)])
def test_frobenius_and_degree_exhaustive(p, n):
    F = standard_field(p, n)
    for x in F.elements():
        assert x.frobenius(n) == x
        k = next(k for k in range(1, n + 1) if x.frobenius(k) == x)
        assert x.degree() == k
        mp = x.minimal_polynomial()
        assert mp.degree == k
        value = F.zero
        for c in reversed(mp.coeffs):
            value = value * x + c
        assert value == F.zero


@pytest.mark.parametrize("p, n", [(2, 8), (3, 5), (7, 3), (2, 64), (3, 40), (2**61 - 1, 2)])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_multiplication_against_polynomial_oracle(p, n, data):
    F = standard_field(p, n)
    a = data.draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n))
    b = data.draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n))
    f = list(F.defining_poly.coeffs)
    expected = pmod(pmul(a, b, p), f, p)
    got = (F(a) * F(b)).key()
    assert list(got) == expected + [0] * (n - len(expected))


@pytest.mark.parametrize("p, n", [(2, 10), (3, 7), (5, 4), (2**31 - 1, 3)])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_field_axioms(p, n, data):
    F = standard_field(p, n)
    s = st.integers(0, F.order - 1)
    x, y, z = (F.from_steinitz(data.draw(s)) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - x == F.zero
    if x:
        assert x * x.inverse() == F.one
        assert x / x == F.one
        assert x ** (F.order - 1) == F.one
        assert x**-2 * x**2 == F.one
    e = data.draw(st.integers(0, 3 * F.order))
    assert (x * y) ** e == x**e * y**e


def test_batched_products_match():
    F = standard_field(3, 5)
    V = F.all_vectors()
    A, B = V[:200], V[40:240]
    prods = F.mul_rows(A, B)
    for a, b, c in zip(A, B, prods):
        assert (F._mul_vec(a, b) == c).all()


def test_mixed_field_coercion():
    F4, F8, F64 = (standard_field(2, n) for n in (2, 3, 6))
    x, y = F4.gen, F8.gen
    s = x + y
    assert s.field is F64
    assert s == x.embed(F64) + y.embed(F64)
    assert (x * y).field is F64
    assert x == x.embed(F64)
    assert x + 1 == x.embed(F64) + F64.one
    assert F64(x) == x.embed(F64)


def test_steinitz_of_vectors_matches():
    F = standard_field(3, 4)
    V = F.all_vectors()
    assert list(F.steinitz_of_vectors(V)) == list(range(F.order))
