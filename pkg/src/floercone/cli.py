"""Command-line surface: deterministic reports for every engine computation.

Exit codes: 0 success, 1 validation/domain error (message on stderr),
2 usage error.  Output is byte-identical across runs for fixed inputs
and --seed; JSON keys are sorted and randomized subcommands never touch
the wall clock.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .borromean import fixture as borromean_fixture
from .borromean import report as borromean_report
from .complexes import GradedComplex, complex_from_dict, complex_to_dict
from .ranks import (genus, h_inf, h_minus_one, parse_rank_vector, simplicity_gap,
                    y_one, y_pq, y_pq_from_h)
from .spinc import FramedSlope
from .surgery import (CubeInstance, cube_assemble, dual_knot_rank, dual_knot_table,
                      simple_blocks)
from .torus import scan_to_tsv, simple_scan, torus_report


def load_complex(path: str | Path) -> GradedComplex:
    """Load and validate a knot-complex JSON file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"parse error in {path}: {exc}") from exc
    return complex_from_dict(doc)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _emit_kv_tsv(obj: dict) -> None:
    for key in sorted(obj):
        print(f"{key}\t{json.dumps(obj[key], sort_keys=True)}")


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        _emit_json(obj)
    else:
        _emit_kv_tsv(obj)


def _cmd_ranks(args) -> int:
    profile = parse_rank_vector(args.ell)
    out = {
        "h_inf": h_inf(profile),
        "h_minus_one": h_minus_one(profile),
        "y_one": y_one(profile),
        "gap": simplicity_gap(profile),
        "genus": genus(profile),
    }
    _emit(out, args.format)
    return 0


def _cmd_ypq(args) -> int:
    profile = parse_rank_vector(args.ell)
    value = y_pq(profile, FramedSlope(args.p, args.q))
    _emit({"p": args.p, "q": args.q, "y_pq": value}, args.format)
    return 0


def _cmd_cone(args) -> int:
    cx = load_complex(args.complex)
    if args.s is not None:
        value = dual_knot_rank(cx, args.n, args.s)
        _emit({"n": args.n, "s": args.s, "rank": value}, args.format)
        return 0
    report = dual_knot_table(cx, args.n, hf_rank=args.hf)
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        print(report.to_tsv())
        footer = f"total={report.total}"
        if report.simple is not None:
            footer += f" simple={'true' if report.simple else 'false'}"
        print(footer)
    return 0


def _cmd_torus(args) -> int:
    report = torus_report(args.n, args.m, hf_rank=args.hf)
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        print(report.to_tsv())
        footer = f"total={report.total}"
        if report.simple is not None:
            footer += f" simple={'true' if report.simple else 'false'}"
        print(footer)
    return 0


def _cmd_torus_scan(args) -> int:
    rows = simple_scan(args.n_max, args.m_max)
    if args.format == "json":
        _emit_json({"rows": [[r.n, r.m, r.total, r.hf_rank, r.simple] for r in rows]})
    else:
        print(scan_to_tsv(rows))
    return 0


def _cmd_cube(args) -> int:
    maps = simple_blocks(args.r, args.s, args.x, args.h0, seed=args.seed)
    inst = CubeInstance(p=args.p, q=args.q, maps=maps)
    d = cube_assemble(inst)
    rk = d.rank()
    homology = d.rows - 2 * rk
    w = maps.dim_inf - (2 * args.r + args.s)
    out = {
        "p": args.p, "q": args.q,
        "r": args.r, "s": args.s, "x": args.x, "h0": args.h0, "w": w,
        "seed": args.seed,
        "total_dim": d.rows,
        "rank": rk,
        "rank_identity": args.q * (2 * args.r + args.s) + args.p * args.x,
        "homology": homology,
        "y_pq": y_pq_from_h(2 * args.r + args.s, 2 * args.r + args.s + w,
                            args.p, args.q),
    }
    _emit(out, args.format)
    return 0


def _cmd_borromean(args) -> int:
    if args.emit_complex:
        _emit_json(complex_to_dict(borromean_fixture()))
        return 0
    _emit(borromean_report().to_dict(), args.format)
    return 0


def _cmd_check(args) -> int:
    load_complex(args.complex)
    print("ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floercone",
        description="Exact GF(2) surgery calculus for filtered knot complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("ranks", help="closed-form ranks of a profile")
    p.add_argument("--ell", required=True, help='rank profile "l0,l1,...,lg"')
    add_format(p)
    p.set_defaults(handler=_cmd_ranks)

    p = sub.add_parser("ypq", help="p/q-surgery rank of a profile")
    p.add_argument("--ell", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_ypq)

    p = sub.add_parser("cone", help="dual-knot rank table of a complex")
    p.add_argument("--complex", required=True, metavar="FILE")
    p.add_argument("-n", type=int, required=True, help="surgery coefficient")
    p.add_argument("-s", type=int, default=None, help="single Spin^c slot")
    p.add_argument("--hf", type=int, default=None, help="ambient rank for the verdict")
    add_format(p)
    p.set_defaults(handler=_cmd_cone)

    p = sub.add_parser("torus", help="dual-knot table for T(2,2n+1)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--hf", type=int, default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_torus)

    p = sub.add_parser("torus-scan", help="simplicity scan over the torus family")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_torus_scan)

    p = sub.add_parser("cube", help="assemble a rational surgery cube")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--h0", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(handler=_cmd_cube)

    p = sub.add_parser("borromean", help="the counterexample regression report")
    p.add_argument("--emit-complex", action="store_true",
                   help="print the fixture in the knot-complex file format")
    add_format(p)
    p.set_defaults(handler=_cmd_borromean)

    p = sub.add_parser("check", help="validate a knot-complex file")
    p.add_argument("--complex", required=True, metavar="FILE")
    add_format(p)
    p.set_defaults(handler=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run(argv: list[str]) -> int:
    """Programmatic entry point; identical to main."""
    return main(argv)


if __name__ == "__main__":
    raise SystemExit(main())
