"""Command-line front end.

Exit codes: 0 success (hypotheses hold), 1 usage or parse error,
2 a theorem hypothesis fails, 3 enumeration budget or depth cap exceeded.
"""
from __future__ import annotations

import argparse
import io
import sys
from typing import List, Optional

from . import hypotheses, measures, oracles
from .construction import (
    BudgetExceeded, CantorSpec, DepthTooLarge, _raw_scale, count, enumerate_intervals,
    enumeration_budget, tail_window,
)
from .specfile import SpecParseError, fmt, load_spec

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Usage(Exception):
    pass


def _emit(text: str, out: Optional[str]) -> None:
    # whole document is built first, so a failure never leaves a partial file
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header: List[str], rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")
    return buf.getvalue()


def cmd_validate(spec: CantorSpec, args) -> int:
    rep = hypotheses.report(spec)
    lines = [
        f"label: {spec.label or '-'}",
        f"separation_c: {fmt(rep.separation_c)} ({'ok' if rep.separation_ok else 'FAILS: need c > 1'})",
        f"cond2: {'true' if rep.cond2_ok else 'false'}",
    ]
    w = rep.cond2_witness
    if w is not None:
        lines.append(
            f"cond2 witness: n={w.n} J1={{{','.join(map(str, sorted(w.J1)))}}} "
            f"J2={{{','.join(map(str, sorted(w.J2)))}}} j={w.j} lhs={fmt(w.lhs)} rhs={fmt(w.rhs)}")
    lines += [
        f"branching_M: {rep.branching_M}",
        f"hausdorff theorem hypotheses: {'hold' if rep.hausdorff_ok else 'fail'}",
        f"packing theorem hypotheses: {'hold' if rep.packing_ok else 'fail'}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if rep.hausdorff_ok and rep.packing_ok else EXIT_HYPOTHESIS


def cmd_measures(spec: CantorSpec, args) -> int:
    depth = args.depth or 40
    tol = args.tol or 1e-12
    sd = measures.hausdorff_dim(spec, depth)
    td = measures.packing_dim(spec, depth)
    hm = measures.hausdorff_measure(spec, depth)
    pc = measures.packing_measure(spec, depth, tol)
    rows = [
        ("s", sd), ("t", td), ("B_s", hm), ("alpha", pc.alpha), ("beta", pc.beta),
    ]
    if pc.gamma is not None:
        rows.append(("gamma", pc.gamma))
    if args.format == "csv":
        body = [(q, e.value, e.mode, e.window[0], e.window[1]) for q, e in rows]
        body.append(("P_t", pc.value, pc.alpha.mode, pc.alpha.window[0], pc.alpha.window[1]))
        _emit(_csv(["quantity", "value", "mode", "window_lo", "window_hi"], body), args.out)
        return EXIT_OK
    out = []
    for q, e in rows:
        out.append(f"{q}: {fmt(e.value)} [{e.mode}, levels {e.window[0]}..{e.window[1]}]")
    if pc.gamma is None:
        out.append("gamma: omitted (m_n >= 3 only finitely often)")
    out.append(f"P_t: {fmt(pc.value)}")
    lo, hi = pc.alpha.window
    out.append("alpha maximisers k_n: " + " ".join(f"{n}:{pc.alpha.details[n]}" for n in range(lo, hi + 1)))
    lo, hi = pc.beta.window
    out.append("beta maximisers k_n: " + " ".join(f"{n}:{pc.beta.details[n]}" for n in range(lo, hi + 1)))
    if pc.gamma is not None:
        lo, hi = pc.gamma.window
        for n in range(lo, hi + 1):
            g = pc.gamma.details.get(n)
            if g is not None:
                out.append(f"gamma level {n}: k1={g.k1} k2={g.k2} a_n={fmt(g.a)} b_n={fmt(g.b)} "
                           f"d_n={fmt(g.d)}")
    for note in (hm.note, pc.note):
        if note:
            out.append(f"note: {note}")
    _emit("\n".join(out) + "\n", args.out)
    return EXIT_OK


def _require_seed(args) -> int:
    if args.seed is None:
        raise _Usage("--seed is required for sampling commands")
    return args.seed


def _default_rmin(spec: CantorSpec, args) -> float:
    if args.rmin is not None:
        return args.rmin
    start, _ = tail_window(spec)
    return _raw_scale(spec, start + 15)


def cmd_oracle(spec: CantorSpec, args) -> int:
    if args.mode == "density":
        seed = _require_seed(args)
        t = measures.packing_dim(spec).value
        scan = oracles.density_scan(spec, t, args.points, _default_rmin(spec, args),
                                    args.tol or 1e-9, seed, args.rmax)
        rows = [(p.x, r, mu, dens) for p in scan.profiles for r, mu, dens in p.points]
        _emit(_csv(["x", "r", "mu_ball", "density"], rows), args.out)
        return EXIT_OK
    depth = args.depth or 8
    s = args.exponent if args.exponent is not None else measures.hausdorff_dim(spec).value
    rows = [(r.n, r.lower_bound, r.dp_value, r.mu_sn_s) for r in oracles.sandwich(spec, depth, s)]
    _emit(_csv(["n", "lower_bound", "dp_value", "mu_sn_s"], rows), args.out)
    return EXIT_OK


def cmd_density(spec: CantorSpec, args) -> int:
    seed = _require_seed(args)
    t = measures.packing_dim(spec).value
    scan = oracles.density_scan(spec, t, args.points, _default_rmin(spec, args),
                                args.tol or 1e-9, seed, args.rmax)
    rows = [(i, p.x, p.liminf_estimate) for i, p in enumerate(scan.profiles, 1)]
    _emit(_csv(["point", "x", "liminf_estimate"], rows), args.out)
    pc = measures.packing_measure(spec)
    print(f"min density {fmt(scan.min_density)}; 1/min {fmt(1.0 / scan.min_density)}; "
          f"formula P_t {fmt(pc.value)}", file=sys.stderr)
    return EXIT_OK


def _svg(spec: CantorSpec, depth: int) -> str:
    height = 40 * depth
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 {height}">']
    for n in range(1, depth + 1):
        y = 40 * (n - 1)
        for _, g in enumerate_intervals(spec, n):
            out.append(f'<rect x="{fmt(1000 * g.a)}" y="{y}" width="{fmt(1000 * (g.b - g.a))}" '
                       f'height="30"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_geometry(spec: CantorSpec, args) -> int:
    depth = args.depth or 4
    if count(spec, depth) > enumeration_budget():
        raise BudgetExceeded(f"depth {depth} exceeds the enumeration budget")
    if args.format == "svg":
        _emit(_svg(spec, depth), args.out)
        return EXIT_OK
    rows = [(n, "-".join(map(str, w)), g.a, g.b)
            for n in range(1, depth + 1) for w, g in enumerate_intervals(spec, n)]
    _emit(_csv(["depth", "word", "a", "b"], rows), args.out)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate, "measures": cmd_measures, "oracle": cmd_oracle,
    "geometry": cmd_geometry, "density": cmd_density,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cantor-measure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("spec_path")
        p.add_argument("--depth", type=int)
        p.add_argument("--tol", type=float)
        p.add_argument("--out")
        if name == "measures":
            p.add_argument("--format", choices=("text", "csv"), default="text")
        if name == "geometry":
            p.add_argument("--format", choices=("csv", "svg"), default="csv")
        if name == "oracle":
            p.add_argument("--mode", choices=("cover", "frostman", "density"), default="cover")
            p.add_argument("--exponent", type=float, help="cover exponent (default: dim_H)")
        if name in ("oracle", "density"):
            p.add_argument("--seed", type=int)
            p.add_argument("--points", type=int, default=100)
            p.add_argument("--rmin", type=float)
            p.add_argument("--rmax", type=float)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec_path)
    except SpecParseError as exc:
        print(f"{args.spec_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"{args.spec_path}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](spec, args)
    except (BudgetExceeded, DepthTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
