"""Acceptance suite: one group of tests per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per
criterion in the terminal summary.  Criterion 10 is a long computation and
only runs with ``STDFF_STRETCH=1``.
"""
import math
import os
import random
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from sympy import Poly, primerange, symbols

import oracles
from stdff import (
    DensePoly,
    FieldElement,
    factor_pn_minus_1,
    is_irreducible,
    load_conway_table,
    pohlig_hellman_log,
    prime_field,
    standard_cyclic_generator_prime_power,
    standard_field,
    standard_generator,
    standard_prime_degree_poly,
)
from stdff.base_arith import divisors, r_valuation
from stdff.conway_bridge import conway_generator
from stdff.cyclic import element_order
from stdff.steinitz import affine_shift_parameters, standard_affine_shift

FIXTURES = Path(__file__).parent.parent / "fixtures"
SMALL_PRIMES = (2, 3, 5, 7)
X = symbols("X")


def criterion(number, title):
    return pytest.mark.criterion(number, title)


def prime_factors(n):
    """Distinct prime factors by trial division (independent of the package)."""
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sympy_irreducible(coeffs, p):
    return Poly(list(reversed([int(c) for c in coeffs])), X, modulus=p).is_irreducible


# -- 1 ------------------------------------------------------------------------

SWEEP = [
    (p, r, i)
    for p in (2, 3, 5, 7, 11, 13, 101)
    for r in primerange(2, 14)
    for i in range(1, 7)
    if r**i <= 64
]


@criterion(1, "standard polynomials are irreducible (p <= 101, r <= 13, r^i <= 64)")
@pytest.mark.slow
@pytest.mark.parametrize("p, r, i", SWEEP)
def test_c1_irreducibility_sweep(p, r, i):
    rec = standard_prime_degree_poly(p, r, i)
    assert rec.degree == r
    assert is_irreducible(rec.polynomial())
    # Second route: the tower generator x_{r,i} generates GF(p^(r^i)) over
    # GF(p), i.e. its minimal polynomial has full degree and sympy finds it
    # irreducible.  This only holds if every level of the tower is a field.
    F = standard_field(p, r**i)
    mp = F.gen.minimal_polynomial()
    assert mp.degree == r**i
    assert sympy_irreducible(mp.coeffs, p)


# -- 2 ------------------------------------------------------------------------

GOLDEN = [
    (2, 3, (1, 1, 0, 1)),
    (2, 5, (1, 0, 1, 0, 0, 1)),
    (3, 5, (2, 1, 1, 0, 0, 1)),
    (3, 2, (1, 0, 1)),
    (5, 2, (3, 0, 1)),
]


@criterion(2, "golden hand-derived polynomials")
@pytest.mark.parametrize("p, r, coeffs", GOLDEN)
def test_c2_golden_stdpoly(p, r, coeffs):
    assert standard_prime_degree_poly(p, r, 1).coeff_steinitz == coeffs


@criterion(2, "golden hand-derived polynomials")
def test_c2_golden_field_f4():
    assert standard_field(2, 4).defining_poly.coeffs == (1, 1, 0, 0, 1)


# -- 3 ------------------------------------------------------------------------


@criterion(3, "count of monic irreducibles of degree r over GF(q)")
@pytest.mark.parametrize("q, r", [(q, r) for q in (2, 3, 5) for r in (2, 3)])
def test_c3_irreducible_counts(q, r):
    K = prime_field(q)
    by_constant = [0] * q
    for f in oracles.monic_polys(q, r):
        ours = is_irreducible(DensePoly(K, f))
        assert ours == oracles.is_irreducible_brute(f, q)
        if ours:
            by_constant[f[0]] += 1
    assert sum(by_constant) * r == q**r - q
    if (q - 1) % r:
        for c in range(1, q):
            assert by_constant[c] * r * (q - 1) == q**r - q


# -- 4 ------------------------------------------------------------------------


@criterion(4, "2-part generator of GF(p) is -1 for p = 3 mod 4, p < 200")
@pytest.mark.parametrize("p", [p for p in primerange(3, 200) if p % 4 == 3])
def test_c4_minus_one(p):
    assert standard_cyclic_generator_prime_power(p, 1, 2).steinitz == p - 1


# -- 5 and 8: the lift grid ----------------------------------------------------

LIFT_GRID = [(p, n) for p in SMALL_PRIMES for n in range(1, 9)]


def small_divisors(p, n, bound=10**4):
    return [m for m in divisors(p**n - 1) if m <= bound]


@criterion(5, "lift coherence y_m^(m/d) = y_d for d | m | p^n - 1, m <= 10^4")
@pytest.mark.slow
@pytest.mark.parametrize("p, n", LIFT_GRID)
def test_c5_lift_coherence(p, n):
    F = standard_field(p, n)
    ms = small_divisors(p, n)
    ys = {m: standard_generator(p, n, m) for m in ms}
    for m in ms:
        y = ys[m]
        assert y.field is F
        for d in divisors(m):
            assert y ** (m // d) == ys[d], (m, d)


@criterion(5, "lift coherence y_m^(m/d) = y_d for d | m | p^n - 1, m <= 10^4")
@pytest.mark.slow
@pytest.mark.parametrize("p, n", LIFT_GRID)
def test_c5_lift_across_fields(p, n):
    # y_m built in the smallest field containing it, embedded into GF(p^n),
    # must coincide with y_m built in GF(p^n) directly.
    F = standard_field(p, n)
    for m in small_divisors(p, n):
        k = next(k for k in divisors(n) if (p**k - 1) % m == 0)
        assert standard_generator(p, k, m).embed(F) == standard_generator(p, n, m)


def r_subgroups(p, n):
    q1 = p**n - 1
    for r in prime_factors(q1):
        for s in range(1, r_valuation(q1, r) + 1):
            if r**s <= 2**13:
                yield r, s


@criterion(8, "Pohlig-Hellman agrees with brute-force logarithms (order <= 2^13)")
@pytest.mark.slow
@pytest.mark.parametrize("p, n", LIFT_GRID)
def test_c8_pohlig_hellman(p, n):
    F = standard_field(p, n)
    checked = 0
    for r, s in r_subgroups(p, n):
        g = standard_generator(p, n, r**s)
        # brute force: step through the powers of g once, recording each
        log = {}
        cur = F.one
        for e in range(r**s):
            assert cur.key() not in log
            log[cur.key()] = e
            cur = cur * g
        assert cur == F.one
        for key, e in log.items():
            h = FieldElement(F, np.array(key, dtype=F.dtype))
            assert pohlig_hellman_log(g, h, r, s) == e
            checked += 1
    assert checked > 0 or p**n - 1 == 1


# -- 6 ------------------------------------------------------------------------

EXHAUSTIVE_SOURCES = [
    (p, m) for p in (2, 3, 5, 7, 11, 13) for m in range(1, 9) if p**m <= 256
]


@criterion(6, "embeddings are injective ring homomorphisms and compose")
@pytest.mark.slow
@pytest.mark.parametrize("p, m", EXHAUSTIVE_SOURCES)
def test_c6_exhaustive_homomorphism(p, m):
    S = standard_field(p, m)
    V = S.all_vectors()
    q = S.order
    ii, jj = np.divmod(np.arange(q * q), q)
    sums = (V[ii] + V[jj]) % p
    prods = S.mul_rows(V[ii], V[jj])
    for n in range(m, 25, m):
        T = standard_field(p, n)
        E = S.embedding_matrix(T)
        W = V.astype(T.dtype) @ E % p
        assert len({tuple(row) for row in W}) == q
        assert np.array_equal(W[1 % q], T.one.vec)
        assert np.array_equal(sums.astype(T.dtype) @ E % p, (W[ii] + W[jj]) % p)
        assert np.array_equal(prods.astype(T.dtype) @ E % p, T.mul_rows(W[ii], W[jj]))


@criterion(6, "embeddings are injective ring homomorphisms and compose")
def test_c6_random_homomorphism():
    rng = random.Random(20240611)
    primes = [2, 3, 5, 7, 11, 13, 17, 101, 257, 65537]
    for _ in range(1000):
        p = rng.choice(primes)
        nmax = min(24, int(64 / math.log2(p)))
        n = rng.randint(1, nmax)
        m = rng.choice(divisors(n))
        S, T = standard_field(p, m), standard_field(p, n)
        x = S.from_steinitz(rng.randrange(S.order))
        y = S.from_steinitz(rng.randrange(S.order))
        assert (x + y).embed(T) == x.embed(T) + y.embed(T)
        assert (x * y).embed(T) == x.embed(T) * y.embed(T)
        assert x.embed(T).steinitz_pair() == x.steinitz_pair()


@criterion(6, "embeddings are injective ring homomorphisms and compose")
@pytest.mark.slow
@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_c6_transitivity(p):
    for n in range(1, 25):
        T = standard_field(p, n)
        for m in divisors(n):
            M = standard_field(p, m)
            for k in divisors(m):
                K = standard_field(p, k)
                two_step = K.embedding_matrix(M).astype(T.dtype) @ M.embedding_matrix(T) % p
                assert np.array_equal(two_step, K.embedding_matrix(T)), (k, m, n)


# -- 7 ------------------------------------------------------------------------

ROUND_TRIP_FIELDS = [
    (p, n)
    for p in primerange(2, 82)
    for n in range(2, 13)
    if p**n <= 6561
]


@criterion(7, "Steinitz round trips (<= 6561 elements) and affine shift bijection")
@pytest.mark.parametrize("p, n", ROUND_TRIP_FIELDS)
def test_c7_steinitz_round_trip(p, n):
    F = standard_field(p, n)
    seen = set()
    for s in range(F.order):
        x = F.from_steinitz(s)
        assert x.steinitz == s
        tower = x.tower_coords()
        assert sum(int(c) * p**j for j, c in enumerate(tower)) == s
        seen.add(x.key())
    assert len(seen) == F.order
    V = F.all_vectors()
    assert np.array_equal(F.steinitz_of_vectors(V), np.arange(F.order))


@criterion(7, "Steinitz round trips (<= 6561 elements) and affine shift bijection")
def test_c7_prime_field_round_trip():
    for p in primerange(2, 6562):
        F = standard_field(p, 1)
        V = F.all_vectors()
        assert np.array_equal(V[:, 0], np.arange(p))
        assert np.array_equal(F.steinitz_of_vectors(V), np.arange(p))


@criterion(7, "Steinitz round trips (<= 6561 elements) and affine shift bijection")
def test_c7_affine_shift_bijection():
    for q in range(1, 10**4 + 1):
        m, a = affine_shift_parameters(q)
        expected_m = max(k for k in range(0, 4 * q // 5 + 1) if math.gcd(k, q) == 1)
        assert (m, a) == (expected_m, 2 * q // 3)
        i = np.arange(q, dtype=np.int64)
        image = (m * i + a) % q
        assert np.array_equal(np.sort(image), i)
        for j in (0, 1, q - 1, q, 3 * q + 7):
            assert standard_affine_shift(q, j) == (m * j + a) % q


# -- 9 ------------------------------------------------------------------------

CONWAY_CASES = [(p, n) for p in SMALL_PRIMES for n in range(1, 7)]


@pytest.fixture(scope="module")
def conway_table():
    return load_conway_table(FIXTURES / "conway.txt")


def _horner_all(F, coeffs):
    """Values of the GF(p)-polynomial at every element of F (rows in Steinitz order)."""
    V = F.all_vectors()
    acc = np.zeros_like(V)
    for c in reversed(coeffs):
        acc = F.mul_rows(acc, V)
        acc[:, 0] = (acc[:, 0] + c) % F.p
    return acc


@criterion(9, "Conway bridge: compatible, Steinitz-minimal, primitive")
@pytest.mark.slow
@pytest.mark.parametrize("p, n", CONWAY_CASES)
def test_c9_conway_integrity(conway_table, p, n):
    F = standard_field(p, n)
    coeffs = conway_table.lookup(p, n).coeffs
    values = _horner_all(F, coeffs)
    roots = [int(s) for s in np.flatnonzero(~values.any(axis=1))]
    assert len(roots) == n

    def compatible(x):
        for k in divisors(n):
            if k < n:
                zk = conway_generator(p, k, conway_table).embed(F)
                if x ** ((p**n - 1) // (p**k - 1)) != zk:
                    return False
        return True

    compatible_roots = [s for s in roots if compatible(F.from_steinitz(s))]
    z = conway_generator(p, n, conway_table)
    assert z.field is F
    assert z.steinitz == min(compatible_roots)
    fac = factor_pn_minus_1(p, n)
    if fac.complete:
        assert element_order(z, fac) == p**n - 1


# -- 10 -----------------------------------------------------------------------


@criterion(10, "stretch: degree-107 search over GF(2^107) reaches X^3 and X^4 terms")
@pytest.mark.stretch
@pytest.mark.skipif(os.environ.get("STDFF_STRETCH") != "1", reason="set STDFF_STRETCH=1")
def test_c10_degree_107_over_gf_2_107():
    rec = standard_prime_degree_poly(2, 107, 2)
    c = rec.coeff_steinitz
    assert rec.degree == 107
    assert c[3] != 0 and c[4] != 0
    assert all(v == 0 for v in c[5:107])
    assert is_irreducible(rec.polynomial())


# -- 11 -----------------------------------------------------------------------

BUILD_ALL = """
import time
from stdff import standard_field
t = time.perf_counter()
for p in (2, 3, 5, 7):
    for n in range(1, 101):
        standard_field(p, n)
print(time.perf_counter() - t)
"""


@criterion(11, "build every GF(p^n), p <= 7, n <= 100, within 600 s")
@pytest.mark.slow
def test_c11_build_all_fields():
    # fresh interpreter, so nothing is served from caches filled by other tests
    out = subprocess.run(
        [sys.executable, "-c", BUILD_ALL], capture_output=True, text=True, check=True, timeout=900
    )
    elapsed = float(out.stdout.strip())
    print(f"built 400 fields in {elapsed:.1f} s")
    assert elapsed < 600
