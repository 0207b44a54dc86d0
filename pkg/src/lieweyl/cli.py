"""Command line: ``lieweyl {embed,check,table,bench}``.

Exit status is 0 when every requested check passes, 1 when a verification
fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import serialization
from .embedding import embed, simple_generator_order
from .liealgebra import format_element, simple_lie_algebra, verify_jacobi
from .levimodule import CapacityError
from .rootsystem import SimpleType
from .uea import format_element as format_uea
from .verify import action_oracle, lie_closure
from .weyl import format_weyl_matrix

# (type, crossed roots, reference operation count)
REFERENCE_COUNTS = [
    ("E8", "0,0,0,0,0,0,0,1", 28_754_380),
    ("E7", "0,0,0,0,0,0,1", 2_431_419),
    ("E6", "1,0,0,0,0,0", 487_021),
    ("F4", "1,0,0,0", 374_377),
    ("F4", "0,0,0,1", 469_892),
    ("G2", "1,0", 22_185),
    ("G2", "0,1", 14_072),
]

# G2 roots in the standard three-dimensional realisation
_G2_EPSILON = ((1, -1, 0), (-2, 1, 1))


def _parse_crossed(text: str, rank: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank or any(p not in ("0", "1") for p in parts):
        raise argparse.ArgumentTypeError(f"--crossed needs {rank} comma-separated 0/1 entries")
    return tuple(int(p) for p in parts)


def _parse_lambda(text, rank: int):
    if text is None:
        return tuple(Fraction(0) for _ in range(rank))
    try:
        vals = tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"--lambda: {exc}") from exc
    if len(vals) != rank:
        raise argparse.ArgumentTypeError(f"--lambda needs {rank} entries")
    return vals


def _config(args):
    t = SimpleType.parse(args.type)
    crossed = _parse_crossed(args.crossed, t.rank)
    lam = _parse_lambda(getattr(args, "lam", None), t.rank)
    return t, crossed, lam


def _arrow(latex: bool) -> str:
    return " \\mapsto " if latex else " -> "


def cmd_embed(args, out) -> int:
    t, crossed, lam = _config(args)
    result = embed(str(t), crossed, lam, dim_cap=args.dim_cap)
    alg = result.algebra
    gens = simple_generator_order(alg)
    if not args.cartan:
        gens = gens[: 2 * alg.rank]
    if args.format == "structured":
        doc = serialization.embedding_to_json(result, gens)
        if args.trace:
            doc["reduced"] = {alg.name(g): format_uea(alg, result.reduced[g], latex=True) for g in gens}
        out.write(serialization.dumps(doc) + "\n")
        return 0
    latex = args.format == "latex"
    out.write(f"% {t} crossed {args.crossed}, n = {result.n}, dim V = {result.module.dim}\n")
    names = ", ".join(f"x_{k + 1} <-> {alg.name(g)}" for k, g in enumerate(result.parabolic.generators))
    out.write(f"% variables: {names}\n")
    for g in gens:
        if args.trace:
            out.write(f"% {alg.name(g)}u = {format_uea(alg, result.reduced[g], latex=latex)}\n")
        out.write(alg.name(g) + _arrow(latex) + format_weyl_matrix(result.image(g), latex) + "\n")
    return 0


def cmd_check(args, out) -> int:
    t, crossed, lam = _config(args)
    result = embed(str(t), crossed, lam, dim_cap=args.dim_cap)
    alg = result.algebra
    closure = lie_closure(result.simple_images(), alg.dim, max_basis=args.max_basis, max_brackets=args.max_brackets)
    report = {
        "type": str(t),
        "crossed": list(crossed),
        "n": result.n,
        "module_dim": result.module.dim,
        "closure": {
            "basis_size": closure.basis_size,
            "expected_dim": closure.expected_dim,
            "pass": closure.passed,
            "bracket_depth": closure.bracket_depth,
            "op_count": closure.op_count,
        },
    }
    ok = closure.passed
    if args.degree_cap > 0:
        action = action_oracle(result, args.degree_cap, samples=args.samples)
        report["action"] = {"pass": action.passed, "checked": action.checked}
        if action.failure:
            fail = dict(action.failure)
            fail["monomial"] = list(fail["monomial"])
            fail["diff"] = [
                {"monomial": list(k[0]), "vector": k[1], "expected": str(v[0]), "got": str(v[1])}
                for k, v in fail["diff"].items()
            ]
            report["action"]["failure"] = fail
        ok = ok and action.passed
    if args.jacobi:
        jac = verify_jacobi(alg, samples=args.jacobi_samples)
        report["jacobi"] = {"pass": jac.passed, "triples": jac.triples_checked}
        ok = ok and jac.passed
    report["pass"] = ok
    if args.format == "structured":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(f"{t} crossed {args.crossed}: n = {result.n}, dim V = {result.module.dim}\n")
        out.write(f"closure: {closure.basis_size} / {closure.expected_dim} "
                  f"(depth {closure.bracket_depth}) {'PASS' if closure.passed else 'FAIL'}\n")
        if "action" in report:
            a = report["action"]
            out.write(f"action oracle: {a['checked']} checks {'PASS' if a['pass'] else 'FAIL'}\n")
            if not a["pass"]:
                out.write(json.dumps(a["failure"], indent=2) + "\n")
        if "jacobi" in report:
            j = report["jacobi"]
            out.write(f"jacobi: {j['triples']} triples {'PASS' if j['pass'] else 'FAIL'}\n")
    return 0 if ok else 1


def bracket_table(alg, latex: bool = False) -> list:
    """Rows ``[root, epsilon form, name, [x, y] for every y]`` in basis order."""
    rs = alg.roots
    eps = _G2_EPSILON if str(rs.type) == "G2" else None
    rows = []
    for x in range(alg.dim):
        root = alg.root_of(x)
        cells = [f"({', '.join(str(c) for c in root)})"]
        if eps is not None:
            vec = [sum(root[i] * eps[i][k] for i in range(2)) for k in range(3)]
            cells.append(_epsilon_text(vec, latex))
        cells.append(alg.name(x))
        cells += [format_element(alg, alg.table[x][y], latex) for y in range(alg.dim)]
        rows.append(cells)
    return rows


def _epsilon_text(vec, latex):
    sym = "\\varepsilon" if latex else "e"
    parts = []
    for k, c in enumerate(vec):
        if not c:
            continue
        name = f"{sym}_{{{k + 1}}}" if latex else f"{sym}{k + 1}"
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + coef + name)
    return "".join(parts) or "0"


def cmd_table(args, out) -> int:
    alg = simple_lie_algebra(args.type)
    latex = args.format == "latex"
    rows = bracket_table(alg, latex)
    names = [alg.name(g) for g in range(alg.dim)]
    lead = ["roots", "epsilon"] if len(rows[0]) == alg.dim + 3 else ["roots"]
    if args.format == "structured":
        doc = {"type": str(alg.roots.type), "generators": names,
               "rows": [{"root": r[0], "generator": r[len(lead)], "brackets": r[len(lead) + 1:]} for r in rows]}
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    if latex:
        out.write("\\begin{array}{" + "c" * len(lead) + "|" + "c" * (alg.dim + 1) + "}\n")
        out.write(" & ".join(lead + ["[\\bullet, \\bullet]"] + names) + "\\\\\n")
        for r in rows:
            out.write(" & ".join(r) + "\\\\\n")
        out.write("\\end{array}\n")
        return 0
    header = lead + ["[.,.]"] + names
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    for r in [header] + rows:
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    return 0


def cmd_bench(args, out) -> int:
    if args.type:
        t = SimpleType.parse(args.type)
        if not args.crossed:
            raise argparse.ArgumentTypeError("--crossed is required with --type")
        crossed = ",".join(str(c) for c in _parse_crossed(args.crossed, t.rank))
        ref = {(a, b): c for a, b, c in REFERENCE_COUNTS}
        configs = [(str(t), crossed, ref.get((str(t), crossed)))]
    else:
        configs = [c for c in REFERENCE_COUNTS if args.include_e8 or c[0] != "E8"]
    rows = []
    for type_name, crossed, reference in configs:
        t0 = time.perf_counter()
        result = embed(type_name, tuple(int(c) for c in crossed.split(",")))
        seconds = time.perf_counter() - t0
        rows.append({
            "type": type_name,
            "crossed": crossed,
            "n": result.n,
            "ops": result.total_ops,
            "reference_ops": reference,
            "ratio": None if not reference else round(result.total_ops / reference, 4),
            "seconds": round(seconds, 3),
        })
    if args.format == "structured":
        out.write(json.dumps(rows, indent=2) + "\n")
        return 0
    out.write(f"{'type':<5}{'crossed':<18}{'n':>4}{'ops':>12}{'reference':>12}{'ratio':>9}{'seconds':>10}\n")
    for r in rows:
        ref = f"{r['reference_ops']:,}" if r["reference_ops"] else "-"
        ratio = f"{r['ratio']:.4f}" if r["ratio"] is not None else "-"
        out.write(f"{r['type']:<5}{r['crossed']:<18}{r['n']:>4}{r['ops']:>12,}{ref:>12}{ratio:>9}{r['seconds']:>10.3f}\n")
    out.write("(reference counts are informational; operation units differ between implementations)\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lieweyl", description="Differential-operator realisations of simple Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def config_flags(p, crossed_required=True):
        p.add_argument("--type", required=crossed_required, help="simple type, e.g. G2 or E6")
        p.add_argument("--crossed", required=crossed_required, help="comma-separated 0/1 flags for crossed simple roots")
        p.add_argument("--lambda", dest="lam", help="highest weight in fundamental coordinates, e.g. 0,1 or 1/2,0")
        p.add_argument("--dim-cap", type=int, default=1000, help="largest Levi module dimension allowed")

    p = sub.add_parser("embed", help="print the images of the simple generators")
    config_flags(p)
    p.add_argument("--format", choices=("text", "latex", "structured"), default="text")
    p.add_argument("--trace", action="store_true", help="also print the reduced products g u")
    p.add_argument("--cartan", action="store_true", help="include the Cartan generators h_i")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("check", help="run the closure and action checks")
    config_flags(p)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--degree-cap", type=int, default=2, help="monomial degree for the action oracle (0 disables it)")
    p.add_argument("--samples", type=int, default=None, help="random subset of monomials for the action oracle")
    p.add_argument("--max-basis", type=int, default=None, help="closure basis budget (default 2 dim g)")
    p.add_argument("--max-brackets", type=int, default=None, help="closure bracket budget")
    p.add_argument("--jacobi", action="store_true", help="also check the Jacobi identity of the bracket table")
    p.add_argument("--jacobi-samples", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="print the bracket table")
    p.add_argument("type", nargs="?", default=None)
    p.add_argument("--type", dest="type_flag")
    p.add_argument("--format", choices=("text", "latex", "structured"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="operation counts against the reference table")
    p.add_argument("--type")
    p.add_argument("--crossed")
    p.add_argument("--include-e8", action="store_true")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        args.type = args.type or args.type_flag or "G2"
    try:
        return args.func(args, out)
    except (argparse.ArgumentTypeError, CapacityError, ValueError) as exc:
        parser.exit(2, f"lieweyl: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
