"""Command-line front end: build, evaluate, verify, measure, export.

Exit codes: 0 success, 1 verification mismatch, 2 bad usage or unreadable
input, 3 request for an identically zero polynomial, 4 oracle guard or
evaluation limit tripped.
"""

from __future__ import annotations

import argparse
import csv
import math
import random
import sys

from .builders import build_elementary, build_h_single
from .circuit import Circuit, CircuitBuilder, CircuitError, CircuitParseError, deserialize
from .oracle import OracleGuardError, Partition, e_eval, h_eval, schur_eval, ssyt_count
from .schur import GateCountReport, ZeroPolynomialError, build_schur, predict_bound
from .semirings import BoundedInt, EvaluationOverflow


class UsageError(Exception):
    """Bad arguments that argparse cannot catch on its own."""


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list")


def _shape(text: str) -> Partition:
    try:
        return Partition(_int_list(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _shape_list(text: str) -> list[Partition]:
    return [_shape(chunk) for chunk in text.split(";") if chunk.strip() != ""]


def _point(text: str) -> tuple[int, ...]:
    values = _int_list(text)
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("point coordinates must be >= 0")
    return tuple(values)


def _build(kind: str, k: int, *, m: int | None = None, n: int | None = None,
           shape: Partition | None = None) -> tuple[Circuit, GateCountReport]:
    """Build one circuit of the given kind and report its measured counts."""
    builder = CircuitBuilder(k)
    if kind == "e":
        if m > k:
            raise ZeroPolynomialError(
                f"e_{m} of {k} variables is identically zero"
            )
        out = builder.const(1) if m == 0 else build_elementary(builder, builder.inputs()).gate(m)
        shape = Partition((1,) * m)
    elif kind == "h":
        out = builder.const(1) if n == 0 else build_h_single(builder, builder.inputs(), n)
        shape = Partition((n,)) if n else Partition()
    else:
        out, _ = build_schur(builder, shape, k)
    circuit = builder.snapshot(out)
    counts = circuit.gate_count()
    report = predict_bound(shape, k, arith=counts.arith, total=counts.total)
    return circuit, report


def _load_circuit(path: str) -> Circuit:
    with open(path) as fh:
        return deserialize(fh.read())


def cmd_build(args) -> int:
    circuit, report = _build(args.kind, args.k, m=getattr(args, "m", None),
                             n=getattr(args, "n", None), shape=getattr(args, "shape", None))
    text = circuit.to_dot() if args.format == "dot" else circuit.serialize()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(report.to_json())
    else:
        sys.stdout.write(text)
        print(report.to_json(), file=sys.stderr)
    return 0


def cmd_eval(args) -> int:
    circuit = _load_circuit(args.circuit)
    if len(args.point) != circuit.num_vars:
        raise UsageError(
            f"point has {len(args.point)} coordinates, "
            f"circuit reads {circuit.num_vars} variables"
        )
    semiring = BoundedInt(args.limit) if args.limit is not None else None
    print(circuit.evaluate(args.point, semiring=semiring))
    return 0


def _oracle_guard(args) -> None:
    # Refuse oracle sweeps whose enumeration would not finish at desk scale.
    if args.kind == "schur":
        ssyt_count(args.shape, args.k, cap=args.cap)
    elif args.kind == "h":
        terms = math.comb(args.n + args.k - 1, args.k - 1)
        if terms > args.cap:
            raise OracleGuardError(
                f"h_{args.n} over {args.k} variables has {terms} terms, cap is {args.cap}"
            )


def cmd_verify(args) -> int:
    _oracle_guard(args)
    if args.circuit:
        circuit = _load_circuit(args.circuit)
        if circuit.num_vars != args.k:
            raise UsageError(
                f"circuit reads {circuit.num_vars} variables, --k says {args.k}"
            )
    else:
        circuit, _ = _build(args.kind, args.k, m=getattr(args, "m", None),
                            n=getattr(args, "n", None), shape=getattr(args, "shape", None))
    rng = random.Random(args.seed)
    for _ in range(args.trials):
        point = tuple(rng.randint(1, args.max_value) for _ in range(args.k))
        got = circuit.evaluate(point)
        if args.kind == "e":
            want = e_eval(args.m, args.k, point)
        elif args.kind == "h":
            want = h_eval(args.n, args.k, point)
        else:
            want = schur_eval(args.shape, args.k, point)
        if got != want:
            print(f"mismatch at point {','.join(map(str, point))}: "
                  f"circuit {got}, oracle {want}")
            return 1
    print(f"ok: {args.trials} points, seed {args.seed}")
    return 0


def cmd_stats(args) -> int:
    writer = csv.writer(sys.stdout)
    if args.kind == "e":
        writer.writerow(["k", "m", "arith", "total"])
        for m in args.m:
            _, report = _build("e", args.k, m=m)
            writer.writerow([args.k, m, report.arith, report.total])
    elif args.kind == "h":
        writer.writerow(["k", "n", "arith", "total"])
        for n in args.n:
            _, report = _build("h", args.k, n=n)
            writer.writerow([args.k, n, report.arith, report.total])
    else:
        writer.writerow(["shape", "k", "arith", "total", "d", "headline", "itemized"])
        for shape in args.shapes:
            _, report = _build("schur", args.k, shape=shape)
            writer.writerow([
                ",".join(map(str, shape)),
                args.k,
                report.arith,
                report.total,
                report.d,
                report.bound_factors["headline"],
                report.bound_factors["itemized"],
            ])
    return 0


def cmd_export_dot(args) -> int:
    circuit = _load_circuit(args.circuit)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(circuit.to_dot())
    else:
        sys.stdout.write(circuit.to_dot())
    return 0


def _add_output_flags(parser) -> None:
    parser.add_argument("-o", "--output", metavar="FILE",
                        help="write the circuit here instead of stdout")
    parser.add_argument("--format", choices=["circuit-text", "dot"],
                        default="circuit-text",
                        help="output format (default: circuit-text)")


def _add_verify_flags(parser) -> None:
    parser.add_argument("--trials", type=_positive_int, default=10,
                        help="number of random points (default: 10)")
    parser.add_argument("--seed", type=int, default=0,
                        help="RNG seed; same seed, same points (default: 0)")
    parser.add_argument("--max-value", type=_positive_int, default=5,
                        help="points are drawn from {1..max-value} (default: 5)")
    parser.add_argument("--cap", type=_positive_int, default=10**6,
                        help="refuse oracle enumerations beyond this many "
                             "terms (default: 1000000)")
    parser.add_argument("--circuit", metavar="FILE",
                        help="verify this circuit file instead of a fresh build")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurcirc",
        description="Monotone {+,*} circuits for elementary, complete "
                    "homogeneous, and Schur polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build a circuit, print a gate-count report")
    bsub = build.add_subparsers(dest="kind", required=True)
    be = bsub.add_parser("e", help="elementary symmetric polynomial e_m")
    be.add_argument("--k", type=_positive_int, required=True, help="number of variables")
    be.add_argument("--m", type=_nonneg_int, required=True, help="degree")
    bh = bsub.add_parser("h", help="complete homogeneous polynomial h_n")
    bh.add_argument("--k", type=_positive_int, required=True, help="number of variables")
    bh.add_argument("--n", type=_nonneg_int, required=True, help="degree")
    bs = bsub.add_parser("schur", help="Schur polynomial s_shape")
    bs.add_argument("--shape", type=_shape, required=True,
                    help="partition, comma-separated, largest part first")
    bs.add_argument("--k", type=_positive_int, required=True, help="number of variables")
    for p in (be, bh, bs):
        _add_output_flags(p)
        p.set_defaults(func=cmd_build)

    ev = sub.add_parser("eval", help="evaluate a circuit file at a point")
    ev.add_argument("circuit", help="circuit file in the text format")
    ev.add_argument("--point", type=_point, required=True,
                    help="comma-separated coordinates, one per variable")
    ev.add_argument("--limit", type=_positive_int,
                    help="fail with exit 4 if any intermediate value exceeds this")
    ev.set_defaults(func=cmd_eval)

    verify = sub.add_parser("verify",
                            help="compare a circuit against brute-force enumeration")
    vsub = verify.add_subparsers(dest="kind", required=True)
    ve = vsub.add_parser("e", help="verify an e_m circuit")
    ve.add_argument("--k", type=_positive_int, required=True)
    ve.add_argument("--m", type=_nonneg_int, required=True)
    vh = vsub.add_parser("h", help="verify an h_n circuit")
    vh.add_argument("--k", type=_positive_int, required=True)
    vh.add_argument("--n", type=_nonneg_int, required=True)
    vs = vsub.add_parser("schur", help="verify an s_shape circuit")
    vs.add_argument("--shape", type=_shape, required=True)
    vs.add_argument("--k", type=_positive_int, required=True)
    for p in (ve, vh, vs):
        _add_verify_flags(p)
        p.set_defaults(func=cmd_verify)

    stats = sub.add_parser(
        "stats",
        help="CSV gate counts over a parameter grid",
        description="Emit one CSV row per instance. Columns: for kind e: "
                    "k,m,arith,total; for kind h: k,n,arith,total; for kind "
                    "schur: shape,k,arith,total,d,headline,itemized, where d "
                    "and the last two columns come from the advisory cost "
                    "estimate.",
    )
    ssub = stats.add_subparsers(dest="kind", required=True)
    se = ssub.add_parser("e", help="grid over degrees m")
    se.add_argument("--k", type=_positive_int, required=True)
    se.add_argument("--m", type=_int_list, required=True,
                    help="comma-separated degrees")
    sh = ssub.add_parser("h", help="grid over degrees n")
    sh.add_argument("--k", type=_positive_int, required=True)
    sh.add_argument("--n", type=_int_list, required=True,
                    help="comma-separated degrees")
    ss = ssub.add_parser("schur", help="grid over shapes")
    ss.add_argument("--k", type=_positive_int, required=True)
    ss.add_argument("--shapes", type=_shape_list, required=True,
                    help="semicolon-separated shapes, e.g. '2,2;3,1'")
    for p in (se, sh, ss):
        p.set_defaults(func=cmd_stats)

    dot = sub.add_parser("export-dot", help="convert a circuit file to Graphviz DOT")
    dot.add_argument("circuit", help="circuit file in the text format")
    dot.add_argument("-o", "--output", metavar="FILE",
                     help="write DOT here instead of stdout")
    dot.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CircuitParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroPolynomialError as exc:
        print(f"error: zero polynomial: {exc}", file=sys.stderr)
        return 3
    except (OracleGuardError, EvaluationOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CircuitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
