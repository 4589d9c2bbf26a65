"""Prime factorizations of p^n - 1 and other desk-scale integers.

Factor table files have one entry per line::

    # comment
    2 11: 23 89
    3 4: 2^4 5

i.e. ``<p> <n>: <f1>[^e1] <f2>[^e2] ...``.  Every entry is validated on
load (all factors prime, product equal to ``p^n - 1``).
"""
from __future__ import annotations

import math
import os
import re
import threading
from dataclasses import dataclass, field
from pathlib import Path

from .base_arith import Factorization, is_prime
from .errors import FactorizationError, TableFormatError

__all__ = [
    "factorize",
    "pollard_brent",
    "FactorTable",
    "load_factor_table",
    "default_table",
    "factor_pn_minus_1",
    "TRIAL_LIMIT",
    "DEFAULT_BUDGET",
]

TRIAL_LIMIT = 10**5
# Total number of rho iterations allowed per call to factorize.
DEFAULT_BUDGET = 2_000_000


def _trial_division(n: int, limit: int, acc: dict[int, int]) -> int:
    for d in (2, 3):
        while n % d == 0:
            acc[d] = acc.get(d, 0) + 1
            n //= d
    d, step = 5, 2
    while d <= limit and d * d <= n:
        while n % d == 0:
            acc[d] = acc.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    if 1 < n and n < d * d:
        acc[n] = acc.get(n, 0) + 1
        n = 1
    return n


def pollard_brent(n: int, budget: int, c: int = 1) -> tuple[int | None, int]:
    """Find a nontrivial factor of odd composite ``n`` with Brent's rho.

    Returns ``(factor or None, iterations used)``.  Deterministic: the
    polynomial is ``x^2 + c`` and the start value is 2.
    """
    y, m, g, r, q = 2, 128, 1, 1, 1
    x = ys = y
    used = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        used += r
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += min(r, k)
        r *= 2
        if used > budget and g == 1:
            return None, used
    if g == n:
        # backtrack one step at a time from the saved position
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    if g == n:
        return None, used
    return g, used


def factorize(n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Factor ``n`` by trial division up to 10^5 and then Pollard-Brent rho.

    Never raises on hard inputs: when the budget runs out the returned
    Factorization has ``complete == False`` and ``cofactor`` holds the
    unsplit composite part.
    """
    if n < 1:
        raise FactorizationError("can only factor positive integers")
    acc: dict[int, int] = {}
    rest = _trial_division(n, TRIAL_LIMIT, acc)
    stack = [rest] if rest > 1 else []
    cofactor = 1
    remaining = budget
    while stack:
        m = stack.pop()
        if is_prime(m):
            acc[m] = acc.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        factor = None
        c = 1
        while factor is None and remaining > 0 and c < 20:
            factor, used = pollard_brent(m, remaining, c)
            remaining -= used
            c += 1
        if factor is None:
            cofactor *= m
        else:
            stack.extend((factor, m // factor))
    return Factorization(tuple(sorted(acc.items())), cofactor)


@dataclass
class FactorTable:
    """Factorizations of ``p^n - 1`` keyed by ``(p, n)``."""

    entries: dict[tuple[int, int], Factorization] = field(default_factory=dict)
    provenance: dict[tuple[int, int], str] = field(default_factory=dict)
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        self._lock = threading.Lock()

    def add(self, p: int, n: int, fac: Factorization, provenance: str = "loaded"):
        if not fac.complete:
            raise FactorizationError(f"incomplete factorization for {p}^{n}-1")
        if fac.value != p**n - 1:
            raise FactorizationError(f"factors do not multiply to {p}^{n}-1")
        with self._lock:
            self.entries[(p, n)] = fac
            self.provenance[(p, n)] = provenance

    def merge(self, other: "FactorTable"):
        for key, fac in other.entries.items():
            self.add(*key, fac, other.provenance.get(key, "loaded"))

    def __contains__(self, key):
        return key in self.entries

    def __len__(self):
        return len(self.entries)

    def lookup(self, p: int, n: int, compute: bool = True) -> Factorization:
        """Factorization of ``p^n - 1``; computed (and remembered) if missing.

        An incomplete local factorization is returned as is, not stored.
        """
        fac = self.entries.get((p, n))
        if fac is not None or not compute:
            if fac is None:
                raise FactorizationError(f"no table entry for {p}^{n}-1")
            return fac
        fac = factor_pn_minus_1(p, n, self.budget)
        if fac.complete:
            self.add(p, n, fac, "computed")
        return fac


_TOKEN = re.compile(r"\d+(\^\d+)?")


def _parse_line(line: str, path, lineno: int):
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    head, sep, tail = body.partition(":")
    if not sep:
        raise TableFormatError(path, lineno, "missing ':'")
    key = head.split()
    if len(key) != 2:
        raise TableFormatError(path, lineno, "expected '<p> <n>:'")
    try:
        p, n = int(key[0]), int(key[1])
    except ValueError:
        raise TableFormatError(path, lineno, "p and n must be integers") from None
    tokens = tail.split()
    bad = [tok for tok in tokens if not _TOKEN.fullmatch(tok)]
    if bad:
        raise TableFormatError(path, lineno, f"bad factor token {bad[0]!r}")
    try:
        fac = Factorization.parse(tail)
    except FactorizationError as exc:
        raise TableFormatError(path, lineno, f"rejected entry: {exc}") from None
    return p, n, fac


def load_factor_table(path, table: FactorTable | None = None) -> FactorTable:
    """Read a factor table file, validating every entry.

    Raises TableFormatError (with the line number) for unparsable lines and
    for entries whose factors are not prime or do not multiply to p^n - 1.
    """
    table = FactorTable() if table is None else table
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            parsed = _parse_line(line, path, lineno)
            if parsed is None:
                continue
            p, n, fac = parsed
            if not is_prime(p) or n < 1:
                raise TableFormatError(path, lineno, f"invalid field {p}^{n}")
            try:
                table.add(p, n, fac, "loaded")
            except FactorizationError as exc:
                raise TableFormatError(path, lineno, f"rejected entry: {exc}") from None
    return table


def factor_pn_minus_1(p: int, n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Factor ``p^n - 1`` using the algebraic split into cyclotomic values."""
    from .base_arith import divisors

    # p^n - 1 = prod_{d | n} Phi_d(p); factor the smaller pieces separately.
    acc: dict[int, int] = {}
    cofactor = 1
    for d in divisors(n):
        piece = _cyclotomic_value(d, p)
        fac = factorize(piece, budget)
        for r, e in fac:
            acc[r] = acc.get(r, 0) + e
        cofactor *= fac.cofactor
    fac = Factorization(tuple(sorted(acc.items())), cofactor)
    if not fac.complete:
        # a product of unsplit pieces may still be split as a whole
        retry = factorize(cofactor, budget)
        if retry.complete:
            for r, e in retry:
                acc[r] = acc.get(r, 0) + e
            fac = Factorization(tuple(sorted(acc.items())))
    return fac


def _cyclotomic_value(d: int, x: int) -> int:
    from .base_arith import divisors

    # Phi_d(x) = prod_{k | d} (x^k - 1)^{mu(d/k)}
    num, den = 1, 1
    for k in divisors(d):
        mu = _moebius(d // k)
        if mu == 1:
            num *= x**k - 1
        elif mu == -1:
            den *= x**k - 1
    return num // den


def _moebius(n: int) -> int:
    from .base_arith import prime_divisors_small

    fac = prime_divisors_small(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


_default_lock = threading.Lock()
_default_table: FactorTable | None = None


def default_table() -> FactorTable:
    """Process-wide table, preloaded from ``STDFF_FACTOR_TABLES`` if set.

    The variable holds a list of paths separated by ``os.pathsep``.
    """
    global _default_table
    with _default_lock:
        if _default_table is None:
            table = FactorTable()
            for path in os.environ.get("STDFF_FACTOR_TABLES", "").split(os.pathsep):
                if path and Path(path).is_file():
                    load_factor_table(path, table)
            _default_table = table
        return _default_table
