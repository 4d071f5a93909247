"""Command-line front end.

Subcommands::

    verify gk --qbar N      verify the GK curve over F_{qbar^6}
    verify gsx49            verify the fixed curve over F_49
    verify fk --q N         verify the degree-3 Kummer cover over F_{q^2}
    semigroup --gens a,b,c [--upto B]
    orders --gens a,b,c --q N
    bound --q N --r R
    deduce-dim --q N --g G

Exit codes: 0 all checks pass, 1 a check failed, 2 usage/parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, curves, numsg, verify

SCHEMA_VERSION = 1

USAGE_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxcurves",
        description="Exact verification of place counts, Weierstrass "
                    "semigroups and order sequences for three maximal curves.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to FILE instead of stdout")
    common.add_argument("--inject-census-delta", type=int, default=0,
                        help=argparse.SUPPRESS)  # test hook: perturb the census

    pv = sub.add_parser("verify", help="run a per-curve verification report")
    curve_sub = pv.add_subparsers(dest="curve", required=True)
    pgk = curve_sub.add_parser("gk", help="GK curve", parents=[common])
    pgk.add_argument("--qbar", type=int, required=True)
    curve_sub.add_parser("gsx49", help="z^16 = t(t+1)^6 over F_49",
                         parents=[common])
    pfk = curve_sub.add_parser("fk", help="degree-3 Kummer cover, q = 2 mod 3",
                               parents=[common])
    pfk.add_argument("--q", type=int, required=True)

    ps = sub.add_parser("semigroup", help="gaps/genus of a numerical semigroup")
    ps.add_argument("--gens", required=True, help="comma-separated generators")
    ps.add_argument("--upto", type=int, default=None,
                    help="also list non-gaps up to this bound")
    ps.add_argument("--format", choices=("text", "json"), default="text")
    ps.add_argument("--out")

    po = sub.add_parser("orders", help="order sequence at a rational place")
    po.add_argument("--gens", required=True)
    po.add_argument("--q", type=int, required=True)
    po.add_argument("--format", choices=("text", "json"), default="text")
    po.add_argument("--out")

    pb = sub.add_parser("bound", help="genus bound for a given dimension")
    pb.add_argument("--q", type=int, required=True)
    pb.add_argument("--r", type=int, required=True)
    pb.add_argument("--format", choices=("text", "json"), default="text")
    pb.add_argument("--out")

    pd = sub.add_parser("deduce-dim", help="candidate Frobenius dimensions")
    pd.add_argument("--q", type=int, required=True)
    pd.add_argument("--g", type=int, required=True)
    pd.add_argument("--format", choices=("text", "json"), default="text")
    pd.add_argument("--out")
    return parser


def _parse_gens(spec: str) -> list[int]:
    try:
        gens = [int(s) for s in spec.split(",") if s.strip()]
    except ValueError:
        raise ValueError(f"cannot parse generators {spec!r}")
    if not gens:
        raise ValueError("no generators given")
    return gens


def _emit(payload: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _json_doc(body: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "tool_version": __version__}
    doc.update(body)
    return json.dumps(doc, indent=2, sort_keys=False)


def _cmd_verify(args) -> int:
    if args.curve == "gk":
        curve = curves.gk_curve(args.qbar)
    elif args.curve == "gsx49":
        curve = curves.gsx49_curve()
    else:
        curve = curves.fk_curve(args.q)
    report = verify.theorem_report(curve, census_delta=args.inject_census_delta)
    if args.format == "json":
        _emit(_json_doc({"report": report.to_dict()}), args.out)
    else:
        _emit(verify.text_report(report), args.out)
    return 0 if report.passing else 1


def _cmd_semigroup(args) -> int:
    S = numsg.semigroup_from_generators(_parse_gens(args.gens))
    frag = S.to_fragment()
    if args.upto is not None:
        frag["nongaps"] = numsg.nongaps_upto(S, args.upto)
    if args.format == "json":
        _emit(_json_doc({"semigroup": frag}), args.out)
    else:
        lines = [f"generators: {list(S.generators)}",
                 f"genus (gap count): {S.genus}",
                 f"conductor: {S.conductor}"]
        if S.genus <= 64:
            lines.append(f"gaps: {list(S.gaps)}")
        else:
            lines.append(f"gaps: ({S.genus} entries, elided)")
        if args.upto is not None:
            lines.append(f"non-gaps up to {args.upto}: {frag['nongaps']}")
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_orders(args) -> int:
    S = numsg.semigroup_from_generators(_parse_gens(args.gens))
    seq = numsg.rational_point_orders(S, args.q)
    r = numsg.frobenius_dimension_from_semigroup(S, args.q)
    if args.format == "json":
        _emit(_json_doc({"orders": list(seq), "dimension": r,
                         "q": args.q, "generators": list(S.generators)}), args.out)
    else:
        _emit(f"dimension r = {r}\norder sequence: {tuple(seq)}", args.out)
    return 0


def _cmd_bound(args) -> int:
    b = verify.castelnuovo_bound(args.q, args.r)
    if args.format == "json":
        _emit(_json_doc({"q": args.q, "r": args.r,
                         "bound": {"numerator": b.numerator,
                                   "denominator": b.denominator}}), args.out)
    else:
        raw_num = (2 * args.q - (args.r - 1)) ** 2 - (1 if args.r % 2 == 0 else 0)
        raw_den = 8 * (args.r - 1)
        pretty = str(b.numerator) if b.denominator == 1 else f"{b.numerator}/{b.denominator}"
        _emit(f"{raw_num}/{raw_den} = {pretty}", args.out)
    return 0


def _cmd_deduce_dim(args) -> int:
    dims = sorted(verify.deduce_frobenius_dimension(args.q, args.g))
    if args.format == "json":
        _emit(_json_doc({"q": args.q, "g": args.g, "dimensions": dims,
                         "conclusive": len(dims) == 1}), args.out)
    else:
        note = "" if len(dims) == 1 else "  (inconclusive)"
        _emit(f"candidate dimensions: {dims}{note}", args.out)
    return 0


_DISPATCH = {
    "verify": _cmd_verify,
    "semigroup": _cmd_semigroup,
    "orders": _cmd_orders,
    "bound": _cmd_bound,
    "deduce-dim": _cmd_deduce_dim,
}


def run(argv: list[str]) -> int:
    """Parse argv and run one subcommand; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
