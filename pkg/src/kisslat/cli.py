"""kisslat command line: field/code/outer/concat/lattice/bounds/certify."""

from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics, certify as certify_mod
from .binary_codes import format_code, is_self_orthogonal, parse_code, weight_distribution
from .code_lattice import (
    build_span_basis,
    enumerate_short,
    format_basis_file,
    parse_basis_file,
    verify_code_lattice,
)
from .concatenation import ConcatSpec, concatenate
from .finite_field import FieldTable, find_self_dual_basis, format_basis, parse_basis
from .outer_codes import (
    is_euclidean_self_orthogonal,
    minimum_distance,
    parse_grs,
    rate_threshold,
)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_field_selfdual(args) -> int:
    f = FieldTable(args.m, int(args.modulus, 16) if args.modulus else None)
    basis = find_self_dual_basis(f, seed=args.seed)
    _write(args.out, format_basis(basis))
    return 0


def cmd_code_analyze(args) -> int:
    c = parse_code(_read(args.file))
    wd = weight_distribution(c)
    _print_json(
        {
            "n": c.n,
            "k": c.k,
            "d": wd.d,
            "A_d": wd.A_d,
            "self_orthogonal": is_self_orthogonal(c),
            "weights": {str(w): cnt for w, cnt in sorted(wd.counts.items())},
        }
    )
    return 0


def cmd_outer_check(args) -> int:
    g = parse_grs(_read(args.file))
    out = {
        "q": g.field.order,
        "N": g.N,
        "K": g.K,
        "euclidean_self_orthogonal": is_euclidean_self_orthogonal(g),
    }
    if g.K >= 1 and g.field.order**g.K <= 1 << 16:
        out["minimum_distance"] = minimum_distance(g)
        out["mds"] = out["minimum_distance"] == g.N - g.K + 1
    _print_json(out)
    return 0


def cmd_outer_rho0(args) -> int:
    t = rate_threshold(args.q)
    _print_json({"q": t.q, "r": t.r, "rho0": t.rho0, "nonempty": t.rho0 > 0})
    return 0


def cmd_concat(args) -> int:
    outer = parse_grs(_read(args.outer))
    inner = parse_code(_read(args.inner))
    basis = parse_basis(_read(args.basis), outer.field)
    code = concatenate(ConcatSpec(outer, basis, inner))
    _write(args.out, format_code(code))
    return 0


def cmd_lattice_build(args) -> int:
    c = parse_code(_read(args.file))
    basis = build_span_basis(c)
    _write(args.out, format_basis_file(basis))
    return 0


def cmd_lattice_short(args) -> int:
    basis = parse_basis_file(_read(args.file))
    report = enumerate_short(basis, args.cap, workers=args.workers, allow_large=args.allow_large)
    _print_json(
        {
            "min_norm": report.min_norm,
            "kissing": report.kissing,
            "per_norm": {str(v): c for v, c in sorted(report.per_norm.items())},
            "cap": report.cap,
        }
    )
    return 0


def cmd_lattice_verify(args) -> int:
    c = parse_code(_read(args.file))
    v = verify_code_lattice(c, trials=args.trials, seed=args.seed, cap=args.cap, workers=args.workers)
    _print_json(
        {
            "set_closed_sampled": v.set_closed_sampled,
            "norm_equals_d": v.norm_equals_d,
            "kissing_ge_Ad": v.kissing_ge_Ad,
            "d": v.d,
            "A_d": v.A_d,
            "min_norm": v.min_norm,
            "kissing": v.kissing,
            "closure_failures": v.closure.failures,
            "closure_counterexamples": [list(x) for x in v.closure.counterexamples],
        }
    )
    return 0


def cmd_bounds_eval(args) -> int:
    p = asymptotics.bound_params(args.s, args.delta)
    _print_json(
        {
            "s": p.s,
            "delta": p.delta,
            "entropy": p.entropy,
            "exponent": p.exponent,
            "exponent_over_q": p.exponent_over_q,
        }
    )
    return 0


def cmd_bounds_zeros(args) -> int:
    d1, d2 = asymptotics.exponent_zeros(args.s)
    _print_json(
        {
            "delta1": d1,
            "delta2": d2,
            "residual1": asymptotics.light_vector_exponent(args.s, d1),
            "residual2": asymptotics.light_vector_exponent(args.s, d2),
        }
    )
    return 0


def cmd_bounds_constants(args) -> int:
    _print_json(certify_mod.bounds_snapshot())
    return 0


def cmd_bounds_table(args) -> int:
    rows = asymptotics.param_table(args.kmax)
    lines = ["k,K,N,genus,target_dimension,target_distance,log2_kissing_bound"]
    for r in rows:
        genus = "" if r.genus is None else str(r.genus)
        lines.append(
            f"{r.k},{r.K},{r.N},{genus},{r.target_dimension},"
            f"{r.target_distance},{r.log2_kissing_bound:.6f}"
        )
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_certify(args) -> int:
    cert = certify_mod.certify_file(
        args.file, seed=args.seed, cap=args.cap, trials=args.trials, workers=args.workers
    )
    text = certify_mod.emit(cert, args.format)
    sys.stdout.write(text)
    if args.emit:
        _write(args.emit, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kisslat", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="finite field utilities").add_subparsers(
        dest="sub", required=True
    )
    p = p_field.add_parser("selfdual", help="find a self-dual basis of GF(2^m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modulus", help="irreducible polynomial, hex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_field_selfdual)

    p_code = sub.add_parser("code", help="binary code utilities").add_subparsers(
        dest="sub", required=True
    )
    p = p_code.add_parser("analyze", help="weights, distance, self-orthogonality")
    p.add_argument("file")
    p.set_defaults(fn=cmd_code_analyze)

    p_outer = sub.add_parser("outer", help="GRS outer codes").add_subparsers(
        dest="sub", required=True
    )
    p = p_outer.add_parser("check", help="self-orthogonality / MDS check of a GRS file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_outer_check)
    p = p_outer.add_parser("rho0", help="self-orthogonality rate threshold for q = r^2")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_outer_rho0)

    p = sub.add_parser("concat", help="concatenate outer GRS with binary inner code")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--basis", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_concat)

    p_lat = sub.add_parser("lattice", help="span lattice operations").add_subparsers(
        dest="sub", required=True
    )
    p = p_lat.add_parser("build", help="Hermite basis of the span lattice of a code")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_lattice_build)
    p = p_lat.add_parser("short", help="exact short vector counts of a basis file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(fn=cmd_lattice_short)
    p = p_lat.add_parser("verify", help="closure/norm/kissing verdict for a code")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_lattice_verify)

    p_bounds = sub.add_parser("bounds", help="closed-form constants").add_subparsers(
        dest="sub", required=True
    )
    p = p_bounds.add_parser("eval", help="entropy and exponent at (s, delta)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.set_defaults(fn=cmd_bounds_eval)
    p = p_bounds.add_parser("zeros", help="the two zeros of the exponent")
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(fn=cmd_bounds_zeros)
    p = p_bounds.add_parser("constants", help="all constants as JSON")
    p.set_defaults(fn=cmd_bounds_constants)
    p = p_bounds.add_parser("table", help="planning table as CSV")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bounds_table)

    p = sub.add_parser("certify", help="full pipeline -> canonical certificate")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit", help="also write the certificate to this path")
    p.add_argument("--format", choices=("json", "csv-summary"), default="json")
    p.set_defaults(fn=cmd_certify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except certify_mod.CertifyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
