import pytest
from hypothesis import given, settings, strategies as st
from sympy import factorint

from stdff.base_arith import Factorization
from stdff.errors import FactorizationError, TableFormatError
from stdff.factor_db import (
    FactorTable,
    factor_pn_minus_1,
    factorize,
    load_factor_table,
    pollard_brent,
)


@pytest.mark.parametrize(
    "n, expected",
    [(80, ((2, 4), (5, 1))), (2047, ((23, 1), (89, 1))), (1, ())],
)
def test_factorize_examples(n, expected):
    fac = factorize(n)
    assert fac.complete
    assert fac.factors == expected


@settings(max_examples=200)
@given(st.integers(1, 10**18))
def test_factorize_matches_sympy(n):
    fac = factorize(n)
    assert fac.complete
    assert dict(fac.factors) == factorint(n)
    assert fac.value == n


def test_factorize_needs_rho():
    # two 10-digit primes, well past trial division
    n = 1000000007 * 998244353
    assert factorize(n).factors == ((998244353, 1), (1000000007, 1))


def test_factorize_incomplete_is_a_value():
    p, q = 2**61 - 1, 2**89 - 1
    fac = factorize(p * q, budget=10)
    assert not fac.complete
    assert fac.value == p * q


def test_pollard_brent_finds_factor():
    f, used = pollard_brent(10403, 10_000)
    assert f in (101, 103)
    assert used > 0


@pytest.mark.parametrize("p, n", [(2, 64), (3, 30), (5, 20), (7, 18), (2, 128)])
def test_factor_pn_minus_1(p, n):
    fac = factor_pn_minus_1(p, n)
    assert fac.complete
    assert fac.value == p**n - 1
    if p**n < 2**100:
        assert dict(fac.factors) == factorint(p**n - 1)


def test_table_lines(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("# comment\n\n2 11: 23 89  # trailing comment\n3 4: 2^4 5\n")
    table = load_factor_table(path)
    assert table.lookup(2, 11, compute=False) == Factorization(((23, 1), (89, 1)))
    assert table.lookup(3, 4, compute=False) == Factorization(((2, 4), (5, 1)))
    assert table.provenance[(2, 11)] == "loaded"
    assert len(table) == 2


def test_table_rejects_non_prime(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("2 11: 23 89\n2 11: 23 88\n")
    with pytest.raises(TableFormatError, match=r":2: rejected entry"):
        load_factor_table(path)


def test_table_rejects_wrong_product(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("2 11: 23 97\n")
    with pytest.raises(TableFormatError, match="rejected entry"):
        load_factor_table(path)


@pytest.mark.parametrize("line", ["2 11 23 89", "2: 3", "2 x: 3", "2 11: 23 a9", "2 11: 23^"])
def test_table_malformed_lines(tmp_path, line):
    path = tmp_path / "t.txt"
    path.write_text("# header\n" + line + "\n")
    with pytest.raises(TableFormatError, match=r":2:"):
        load_factor_table(path)


def test_lookup_computes_and_remembers():
    table = FactorTable()
    fac = table.lookup(2, 20)
    assert fac.value == 2**20 - 1
    assert table.provenance[(2, 20)] == "computed"
    with pytest.raises(FactorizationError):
        table.lookup(2, 21, compute=False)


def test_fixture_table_loads():
    from pathlib import Path

    table = load_factor_table(Path(__file__).parent.parent / "fixtures" / "factors.txt")
    assert (2, 24) in table
    assert table.lookup(2, 24, compute=False).value == 2**24 - 1
