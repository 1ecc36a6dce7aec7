"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 usage/parse/scope error,
3 resource cap exceeded, 4 internal disagreement between methods.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import formulas, verification
from .formulas import ScopeError
from .partitions import (
    Partition,
    SkewShape,
    contains,
    format_partition,
    parse_partition,
    partitions_up_to,
)
from .plethysm import (
    frobenius_oracle,
    plethysm,
    plethysm_adjoint,
    restriction_oracle,
)
from .schur import SchurPoly, e_to_schur, h, h_to_schur, hall_inner, pieri_e, pieri_h
from .tableaux import enumerate_lr_tableaux, lr_coefficient

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP, EXIT_DISAGREE = range(5)


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_function(spec: str) -> tuple[str, tuple[int, ...], SchurPoly]:
    """``s:3,1`` | ``h:2`` | ``e:2,1`` (h and e take exponent vectors)."""
    kind, sep, rest = spec.partition(":")
    if not sep or kind not in ("s", "h", "e"):
        raise UsageError(f"bad function spec {spec!r}; expected s:<partition>, h:<r> or e:<r>")
    body = rest.strip().strip("[]")
    try:
        vec = tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise UsageError(f"bad function spec {spec!r}") from None
    if kind == "s":
        try:
            return kind, vec, SchurPoly.basis(Partition(vec))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if any(x < 0 for x in vec):
        raise UsageError(f"negative index in {spec!r}")
    return kind, vec, (h_to_schur(vec) if kind == "h" else e_to_schur(vec))


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _agree(values: dict) -> None:
    distinct = {json.dumps(v, sort_keys=True, default=str) for v in values.values()}
    if len(distinct) > 1:
        raise Disagreement(", ".join(f"{k}={v}" for k, v in values.items()))


# -- commands -----------------------------------------------------------------

def cmd_lr(args) -> int:
    lam, mu, nu = args.lam, args.mu, args.nu
    value = lr_coefficient(lam, mu, nu)
    tableaux = []
    if args.show_tableaux and contains(lam, mu):
        tableaux = [str(t) for t in enumerate_lr_tableaux(SkewShape(lam, mu), nu)]
    text = "\n".join([str(value)] + tableaux)
    _emit(args, text, {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "value": value,
                       **({"tableaux": tableaux} if args.show_tableaux else {})})
    return EXIT_OK


def cmd_pieri(args) -> int:
    f = pieri_h(args.r, args.mu) if args.kind == "h" else pieri_e(args.r, args.mu)
    _emit(args, repr(f), f.to_json())
    return EXIT_OK


def cmd_plethysm(args) -> int:
    _, _, f = parse_function(args.f)
    _, _, g = parse_function(args.g)
    results = {}
    if args.method in ("closed", "all"):
        results["power-sum"] = plethysm(f, g)
    if args.method in ("oracle", "all"):
        results["monomial"] = verification.monomial_substitution_plethysm(f, g)
    _agree({k: v.to_json() for k, v in results.items()})
    value = next(iter(results.values()))
    _emit(args, repr(value), value.to_json())
    return EXIT_OK


def cmd_pleth_coeff(args) -> int:
    lam, mu, r = args.lam, args.mu, args.r
    results = {}
    if args.method in ("closed", "all"):
        try:
            results["closed"] = formulas.plethysm_coeff_hr_closed(lam, mu, r)
        except ScopeError:
            if not args.oracle and args.method == "closed":
                raise
    if args.method in ("oracle", "all") or not results:
        results["oracle"] = hall_inner(SchurPoly.basis(lam), plethysm(SchurPoly.basis(mu), h(r)))
    _agree(results)
    text = " ".join(str(v) for v in results.values())
    _emit(args, text, {"lambda": list(lam), "mu": list(mu), "r": r, "values": results})
    return EXIT_OK


def cmd_adjoint(args) -> int:
    lam, r = args.lam, args.r
    top = args.max_degree if args.max_degree is not None else max(lam.size, 1)
    results = {}
    if args.method in ("closed", "all"):
        try:
            results["closed"] = formulas.s_lambda_hr_perp_closed(lam, r, top).value
        except ScopeError:
            if not args.oracle and args.method == "closed":
                raise
    if args.method in ("oracle", "all") or not results:
        if r == 0:
            results["oracle"] = verification.brute_s_perp(lam, 0, top)
        else:
            results["oracle"] = plethysm_adjoint(SchurPoly.basis(lam), h(r))
    _agree({k: v.to_json() for k, v in results.items()})
    value = next(iter(results.values()))
    text = repr(value) + (f" + O({top + 1})" if r == 0 else "")
    _emit(args, text, value.to_json())
    return EXIT_OK


def cmd_frobenius(args) -> int:
    kind, vec, f = parse_function(args.f)
    if not f.is_homogeneous():
        raise UsageError("frobenius needs a homogeneous function")
    top = args.max_degree if args.max_degree is not None else f.degree() + 3
    closed = None
    if args.method in ("closed", "all"):
        try:
            if kind == "h":
                closed = formulas.frobenius_h_closed(vec)
            elif kind == "e":
                closed = formulas.frobenius_e_closed(vec)
            else:
                closed = formulas.frobenius_three_columns(Partition(vec))
        except ScopeError:
            if not args.oracle and args.method == "closed":
                raise
    oracle = None
    if args.method in ("oracle", "all") or closed is None:
        oracle = frobenius_oracle(f, top).value
    if closed is not None and oracle is not None:
        _agree({"closed": closed.truncate(top).to_json(), "oracle": oracle.to_json()})
    if closed is not None and args.method == "closed":
        _emit(args, repr(closed), closed.to_json())
    else:
        _emit(args, f"{oracle!r} + O({top + 1})", {**oracle.to_json(), "max_degree": top})
    return EXIT_OK


def _restriction_values(lam: Partition, mu: Partition, method: str, fallback: bool) -> dict:
    wanted = ("closed", "tuples", "oracle") if method == "all" else (method,)
    values = {}
    for m in wanted:
        try:
            if m == "closed":
                values[m] = formulas.restriction_via_main(lam, mu)
            elif m == "tuples":
                values[m] = formulas.count_restriction_tuples(lam, mu)
            else:
                values[m] = restriction_oracle(lam, mu)
        except ScopeError:
            if method == "all" or fallback:
                continue
            raise
    if not values:
        values["oracle"] = restriction_oracle(lam, mu)
    return values


def cmd_restriction(args) -> int:
    values = _restriction_values(args.lam, args.mu, args.method, args.oracle)
    _agree(values)
    text = " ".join(str(v) for v in values.values())
    _emit(args, text, {"lambda": list(args.lam), "mu": list(args.mu), "values": values})
    return EXIT_OK


def _table_row(cell):
    lam, mu, method, fallback = cell
    values = _restriction_values(lam, mu, method, fallback)
    _agree(values)
    return next(iter(values.values()))


def cmd_table(args) -> int:
    lam = args.lam
    if args.method != "oracle" and not args.oracle and lam and lam[0] > 3:
        raise ScopeError(f"table: lambda_1 <= 3 required, got {lam}")
    mus = list(partitions_up_to(args.max_mu))
    cells = [(lam, mu, args.method, args.oracle) for mu in mus]
    if args.parallelism > 1:
        with ProcessPoolExecutor(args.parallelism) as pool:
            values = list(pool.map(_table_row, cells, chunksize=8))
    else:
        values = [_table_row(c) for c in cells]
    rows = [(mu, v) for mu, v in zip(mus, values) if v]
    text = "\n".join(f"{format_partition(mu, brackets=True)} {v}" for mu, v in rows)
    _emit(args, text, {"lambda": list(lam), "rows": [{"mu": list(mu), "value": v} for mu, v in rows]})
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verification.SUITES[args.suite](args.max_size, args.parallelism)
    if args.format == "json":
        payload = report.to_json()
        payload.pop("elapsed_ms")
        if args.timing:
            payload["elapsed_ms"] = round(report.elapsed * 1000)
        print(json.dumps(payload))
    else:
        print(report.summary())
        for inp, closed, oracle in report.mismatches:
            print(f"  {inp}: closed={closed} oracle={oracle}")
    return EXIT_OK if report.passed else EXIT_MISMATCH


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethyx", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--parallelism", type=int, default=1, metavar="N")
    common.add_argument("--oracle", action="store_true",
                        help="fall back to brute force outside a closed form's scope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("nu", type=_partition)
    p.add_argument("--show-tableaux", action="store_true")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("pieri", parents=[common], help="h_r s_mu or e_r s_mu")
    p.add_argument("kind", choices=("h", "e"))
    p.add_argument("r", type=int)
    p.add_argument("mu", type=_partition)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("plethysm", parents=[common], help="f[g] in the Schur basis")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--method", choices=("closed", "oracle", "all"), default="closed",
                   help="closed: power-sum engine; oracle: monomial substitution")
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("pleth-coeff", parents=[common], help="<s_lam, s_mu[h_r]>")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("r", type=int)
    p.add_argument("--method", choices=("closed", "oracle", "all"), default="closed")
    p.set_defaults(func=cmd_pleth_coeff)

    p = sub.add_parser("adjoint", parents=[common], help="s_lam[h_r^perp]")
    p.add_argument("lam", type=_partition)
    p.add_argument("r", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--method", choices=("closed", "oracle", "all"), default="closed")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("frobenius", parents=[common], help="f[H^perp]")
    p.add_argument("f")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--method", choices=("closed", "oracle", "all"), default="closed")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("restriction", parents=[common], help="restriction coefficient r_lam^mu")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("--method", choices=("closed", "tuples", "oracle", "all"), default="closed")
    p.set_defaults(func=cmd_restriction)

    p = sub.add_parser("table", parents=[common], help="nonzero r_lam^mu for |mu| <= max-mu")
    p.add_argument("lam", type=_partition)
    p.add_argument("--max-mu", type=int, default=4)
    p.add_argument("--method", choices=("closed", "tuples", "oracle", "all"), default="closed")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run a differential sweep")
    p.add_argument("--suite", choices=sorted(verification.SUITES), required=True)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ScopeError, UsageError) as exc:
        print(f"plethyx: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except verification.CapExceeded as exc:
        print(f"plethyx: {exc} (raise PLETHYX_CAP to allow)", file=sys.stderr)
        return EXIT_CAP
    except Disagreement as exc:
        print(f"plethyx: methods disagree: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
