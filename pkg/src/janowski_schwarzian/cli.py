"""Command-line front end.

Single queries print one JSON object on stdout; ``coeffs`` prints CSV on
stdout and ``scan`` writes CSV to ``--out``. Exit status is 2 for bad
arguments, 1 when a verification is falsified, 0 otherwise.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .bounds import norm_bound, pointwise_parts
from .errors import DomainError, PreconditionError
from .extremal import (
    K_series,
    choose_pq,
    extremal_spec,
    extremal_weighted_value,
    f0_series,
    fzpq_series,
    is_admissible,
    subordination_residual,
)
from .params import classify, validate
from .schwarz import BlaschkeProduct, SchwarzFunction
from .schwarzian import schwarzian
from .verifier import (
    GridSpec,
    check_pointwise_dominance,
    check_sharpness,
    dieudonne_suite,
    grid_sup_of_bound,
    norm_witness,
)

SCAN_HEADER = ["A", "B", "region", "branch", "bound", "alpha", "qc_constant", "numeric_sup"]
DEFAULT_Z0 = (-0.8, -0.5, -0.2, 0.2, 0.5, 0.8)


def _num(x) -> str:
    return "" if x is None else repr(float(x))


def _emit(obj) -> None:
    print(json.dumps(obj))


def _grid(text: str) -> GridSpec:
    try:
        r, t = (int(v) for v in text.split(","))
        return GridSpec(radial_points=r, angular_points=t)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected R,T with positive integers, got {text!r}") from exc


def scan_rows(n: int, numeric: bool = False, grid: GridSpec | None = None, workers: int | None = None):
    """``n * n`` admissible pairs: ``B_i = -1 + 2i/n`` and ``A_j = B_i + (1 - B_i)(j+1)/n``."""
    cells = []
    for i in range(n):
        B = -1.0 + 2.0 * i / n
        for j in range(n):
            cells.append((B + (1.0 - B) * (j + 1) / n, B))

    def row(cell):
        A, B = cell
        p = validate(A, B)
        rep = norm_bound(p)
        sup = grid_sup_of_bound(p, grid) if numeric else None
        return [A, B, str(rep.region), str(rep.branch), rep.bound, rep.alpha, rep.qc_constant, sup]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(row, cells))
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def write_scan(rows, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    for A, B, region, branch, bound, alpha, qc, sup in rows:
        w.writerow([_num(A), _num(B), region, branch, _num(bound), _num(alpha), _num(qc), _num(sup)])


def _workers() -> int | None:
    env = os.environ.get("SCHWARZIAN_THREADS")
    if not env:
        return None
    return max(1, int(env))


def _params(args):
    return validate(args.A, args.B)


def cmd_classify(args) -> int:
    p = _params(args)
    _emit({"A": p.A, "B": p.B, "region": str(classify(p))})
    return 0


def cmd_bound(args) -> int:
    p = _params(args)
    if args.psi_zero_function:
        w = SchwarzFunction.zero()
    else:
        w = SchwarzFunction(BlaschkeProduct(args.psi_rotation, tuple(complex(a) for a in args.psi_zeros)))
    z = complex(args.re, args.im)
    out = schwarzian(p, w, z).to_json()
    parts = pointwise_parts(p, z)
    out["bound"] = parts.bound
    out["weighted_bound"] = (1.0 - abs(z) ** 2) ** 2 * parts.bound
    out["branch"] = str(parts.branch)
    _emit(out)
    return 0


def cmd_norm(args) -> int:
    _emit(norm_bound(_params(args)).to_json())
    return 0


def cmd_extremal(args) -> int:
    p = _params(args)
    spec = extremal_spec(p, args.z0)
    f = fzpq_series(p, spec, args.order)
    _emit({
        "A": p.A,
        "B": p.B,
        "z0": spec.z0,
        "p": spec.p,
        "q": spec.q,
        "b": spec.b,
        "weighted": extremal_weighted_value(p, args.z0),
        "coefficients": [[c.real, c.imag] for c in f.c],
        "max_residual": float(np.max(np.abs(subordination_residual(p, f, spec.schwarz_function())))),
    })
    return 0


def cmd_coeffs(args) -> int:
    p = _params(args)
    f = K_series(p, args.order) if args.which == "K" else f0_series(p, args.order)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "re", "im"])
    for n, c in enumerate(f.c):
        w.writerow([n, repr(float(c.real)), repr(float(c.imag))])
    return 0


def cmd_verify(args) -> int:
    p = _params(args)
    grid = args.grid or GridSpec()
    dominance = check_pointwise_dominance(p, args.trials, args.seed)
    z0s = [z for z in DEFAULT_Z0 if is_admissible(p, z)]
    sharp = check_sharpness(p, z0s, grid=grid)
    dieu = dieudonne_suite(args.trials, args.seed)
    _, witness = norm_witness(p, grid)
    out = {
        "A": p.A,
        "B": p.B,
        "norm": norm_bound(p).to_json(),
        "dominance": dominance.to_json(),
        "sharpness": sharp.to_json(),
        "dieudonne": dieu.to_json(),
        "norm_witness": witness.to_json(),
    }
    ok = dominance.passed and sharp.passed and dieu.passed and witness.passed
    out["passed"] = ok
    _emit(out)
    return 0 if ok else 1


def cmd_scan(args) -> int:
    rows = scan_rows(args.grid, args.numeric, workers=_workers())
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        write_scan(rows, fh)
    counts = {}
    for r in rows:
        counts[r[2]] = counts.get(r[2], 0) + 1
    _emit({"rows": len(rows), "regions": counts, "out": args.out})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="janowski-schwarzian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_ab(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--A", type=float, required=True)
        sp.add_argument("--B", type=float, required=True)
        return sp

    sp = with_ab("classify", "region E1/E2/E3 of (A, B)")
    sp.set_defaults(fn=cmd_classify)

    sp = with_ab("bound", "Schwarzian sample and pointwise bound at z")
    sp.add_argument("--re", type=float, default=0.0)
    sp.add_argument("--im", type=float, default=0.0)
    sp.add_argument("--psi-zeros", nargs="*", default=[], metavar="Z",
                    help="zeros of psi in w = z*psi, Python complex syntax (e.g. 0.3-0.2j)")
    sp.add_argument("--psi-rotation", type=float, default=0.0)
    sp.add_argument("--psi-zero-function", action="store_true", help="use w = 0")
    sp.set_defaults(fn=cmd_bound)

    sp = with_ab("norm", "sharp Schwarzian norm bound")
    sp.set_defaults(fn=cmd_norm)

    sp = with_ab("extremal", "extremal function f_{z0,p,q}")
    sp.add_argument("--z0", type=float, required=True)
    sp.add_argument("--order", type=int, default=32)
    sp.set_defaults(fn=cmd_extremal)

    sp = with_ab("coeffs", "Taylor coefficients of K or f0 as CSV")
    sp.add_argument("--which", choices=["K", "f0"], required=True)
    sp.add_argument("--order", type=int, default=32)
    sp.set_defaults(fn=cmd_coeffs)

    sp = with_ab("verify", "empirical dominance / sharpness / Dieudonne checks")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--grid", type=_grid, default=None, metavar="R,T")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("scan", help="CSV sweep over an N x N grid of admissible (A, B)")
    sp.add_argument("--grid", type=int, required=True, metavar="N")
    sp.add_argument("--out", required=True)
    sp.add_argument("--numeric", action="store_true", help="also fill numeric_sup from the radial grid")
    sp.set_defaults(fn=cmd_scan)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (DomainError, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
