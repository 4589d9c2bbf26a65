"""Command-line front end.

Every subcommand prints numbers only (one line) to stdout; ``--labeled``
prefixes them with ``key=``.  Diagnostics go to stderr.  Exit codes::

    0  success
    2  usage error (bad or missing flags)
    3  mathematical precondition violated (e.g. m does not divide p^n - 1)
    4  external data missing or invalid (factorization, Conway table)

Examples::

    stdff stdpoly -p 2 -r 3 -i 1        ->  1 1 0 1
    stdff field -p 2 -n 4               ->  1 1 0 0 1
    stdff gen -p 3 -n 2 -m 8 --factors "2^3"   ->  4
"""
from __future__ import annotations

import argparse
import sys

from .base_arith import Factorization, is_prime
from .errors import (
    DomainError,
    FactorizationError,
    IncompatibleFieldsError,
    IntegrityError,
    MissingDataError,
    NoSolutionError,
    NotInvertibleError,
    TableFormatError,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MATH = 3
EXIT_DATA = 4


class UsageError(Exception):
    pass


def _prime(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{v} is not positive")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} is negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stdff", description="Standard finite fields GF(p^n) and their generators."
    )
    parser.add_argument("--labeled", action="store_true", help="prefix outputs with key=")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *flags):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--labeled", action="store_true", default=argparse.SUPPRESS,
                        help="prefix outputs with key=")
        for flag in flags:
            flag(sp)
        return sp

    p_flag = lambda sp: sp.add_argument("-p", type=_prime, required=True, help="characteristic")
    n_flag = lambda sp: sp.add_argument("-n", type=_positive, required=True, help="degree")
    s_flag = lambda sp: sp.add_argument("-s", type=_natural, required=True, help="Steinitz number")

    def factor_flags(sp):
        sp.add_argument("--factors", help='inline factorization, e.g. "2^3 5"')
        sp.add_argument("--factor-table", action="append", default=[],
                        help="factor table file (repeatable)")

    add("stdpoly", "coefficients (Steinitz numbers) of f_{r,i}", p_flag,
        lambda sp: sp.add_argument("-r", type=_prime, required=True, help="prime degree"),
        lambda sp: sp.add_argument("-i", type=_positive, required=True, help="level"))
    add("field", "defining polynomial f_n over GF(p)", p_flag, n_flag)
    add("gen", "Steinitz number of the standard generator y_m", p_flag, n_flag,
        lambda sp: sp.add_argument("-m", type=_positive, required=True, help="order"),
        factor_flags)
    add("embed", "embed an element of GF(p^m) into GF(p^n)", p_flag,
        lambda sp: sp.add_argument("-m", type=_positive, required=True, help="source degree"),
        n_flag, s_flag)
    add("order", "multiplicative order of an element", p_flag, n_flag, s_flag, factor_flags)
    add("minpoly", "minimal polynomial over GF(p) of an element", p_flag, n_flag, s_flag)
    add("conway", "Steinitz pair of the Conway generator z_n", p_flag, n_flag,
        lambda sp: sp.add_argument("--conway-table", action="append", required=True,
                                   help="Conway table file (repeatable)"))
    return parser


def _steinitz_element(p, n, s):
    from .stdfield import standard_field

    if s >= p**n:
        raise UsageError(f"Steinitz number {s} is out of range for GF({p}^{n})")
    return standard_field(p, n).from_steinitz(s)


def _factor_table(paths):
    from .factor_db import FactorTable, default_table, load_factor_table

    table = FactorTable()
    table.merge(default_table())
    for path in paths:
        try:
            load_factor_table(path, table)
        except OSError as exc:
            raise MissingDataError(f"cannot read factor table: {exc}") from None
    return table


def _inline_factors(text: str, value: int) -> Factorization:
    fac = Factorization.parse(text)
    if fac.value != value:
        raise FactorizationError(f"--factors multiplies to {fac.value}, expected {value}")
    return fac


def _pn_minus_1_factors(p, n, args) -> Factorization:
    fac = _factor_table(args.factor_table).lookup(p, n)
    if not fac.complete:
        raise FactorizationError(f"could not factor {p}^{n} - 1 completely; supply --factors")
    return fac


def _run(args) -> list[tuple[str, str]]:
    cmd = args.command
    if cmd == "stdpoly":
        from .stdpoly import standard_prime_degree_poly

        rec = standard_prime_degree_poly(args.p, args.r, args.i)
        return [("coeffs", " ".join(map(str, rec.coeff_steinitz)))]
    if cmd == "field":
        from .stdfield import standard_field

        f = standard_field(args.p, args.n).defining_poly
        return [("coeffs", " ".join(map(str, f.coeffs)))]
    if cmd == "gen":
        from .cyclic import standard_generator

        p, n, m = args.p, args.n, args.m
        if pow(p, n, m) != 1 % m:
            raise DomainError(f"{m} does not divide {p}^{n} - 1")
        if args.factors is not None:
            fac = _inline_factors(args.factors, m)
        else:
            fac = _pn_minus_1_factors(p, n, args).restrict(m)
        return [("steinitz", str(standard_generator(p, n, m, fac).steinitz))]
    if cmd == "embed":
        from .stdfield import standard_field

        if args.n % args.m:
            raise IncompatibleFieldsError(f"{args.m} does not divide {args.n}")
        x = _steinitz_element(args.p, args.m, args.s)
        return [("steinitz", str(x.embed(standard_field(args.p, args.n)).steinitz))]
    if cmd == "order":
        from .cyclic import element_order

        x = _steinitz_element(args.p, args.n, args.s)
        if args.factors is not None:
            fac = Factorization.parse(args.factors)
        else:
            fac = _pn_minus_1_factors(args.p, args.n, args)
        return [("order", str(element_order(x, fac)))]
    if cmd == "minpoly":
        x = _steinitz_element(args.p, args.n, args.s)
        return [("coeffs", " ".join(map(str, x.minimal_polynomial().coeffs)))]
    if cmd == "conway":
        from .conway_bridge import ConwayTable, load_conway_table, steinitz_pair_conway_generator

        table = ConwayTable()
        for path in args.conway_table:
            try:
                load_conway_table(path, table)
            except OSError as exc:
                raise MissingDataError(f"cannot read Conway table: {exc}") from None
        pair = steinitz_pair_conway_generator(args.p, args.n, table)
        return [("degree", str(pair.degree)), ("number", str(pair.number))]
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        fields = _run(args)
    except UsageError as exc:
        print(f"stdff: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, IncompatibleFieldsError, NoSolutionError, NotInvertibleError) as exc:
        print(f"stdff: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (FactorizationError, MissingDataError, TableFormatError, IntegrityError) as exc:
        print(f"stdff: {exc}", file=sys.stderr)
        return EXIT_DATA
    if args.labeled:
        print(" ".join(f"{k}={v}" for k, v in fields))
    else:
        print(" ".join(v for _, v in fields))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
