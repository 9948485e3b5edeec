"""``swe-riemann`` command-line front end.

Exit codes: 0 when at least one solution was produced (or every solution
in a document re-validated), 2 when there is none, 3 on input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path

import numpy as np

from .curves import W1, W1B, W2, W2B, wave_curve_u
from .errors import NoSolution, SWEError, ValidationError
from .io import (
    SolutionDocument,
    curves_csv,
    document_to_json,
    load_problem,
    load_solution_document,
    profile_csv,
)
from .sampler import ProfileRequest, Side, sample_profile
from .solver import solve_detailed
from .stationary import stationary_curve
from .waves import validate

EXIT_OK = 0
EXIT_NO_SOLUTION = 2
EXIT_INPUT = 3

__all__ = ["batch_summary", "build_parser", "curve_rows", "main", "run_problem"]


def _overrides(args) -> dict:
    return {"g": args.g, "tol_abs": args.tol_abs, "tol_rel": args.tol_rel, "grid": args.grid}


def _fail(message: str, code: int) -> int:
    print(f"swe-riemann: {message}", file=sys.stderr)
    return code


def run_problem(path, overrides: dict | None = None) -> SolutionDocument:
    """Load a problem file and solve it."""
    pf = load_problem(path, overrides)
    result = solve_detailed(pf.problem, pf.grid)
    return SolutionDocument(pf.problem, pf.grid, result.solutions, result.reasons)


def cmd_solve(args) -> int:
    doc = run_problem(args.file, _overrides(args))
    text = document_to_json(doc)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if doc.solutions else EXIT_NO_SOLUTION


def cmd_sample(args) -> int:
    pf = load_problem(args.file, _overrides(args))
    req = pf.profile
    given = {"x_min": args.xmin, "x_max": args.xmax, "t": args.t, "n": args.n}
    if req is None:
        missing = [k for k, v in given.items() if v is None]
        if missing:
            raise ValidationError(f"no profile in the file and no flag for {missing}",
                                  field="options.profile")
        req = ProfileRequest(args.xmin, args.xmax, args.t, args.n)
    else:
        req = replace(req, **{k: v for k, v in given.items() if v is not None})
    if args.side is not None:
        req = replace(req, side_at_zero=Side(args.side))
    result = solve_detailed(pf.problem, pf.grid)
    if not result.solutions:
        raise NoSolution(f"{args.file}: the solver found no solution")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.file).stem
    for sol in result.solutions:
        target = out_dir / f"{stem}_{sol.structure_tag}.csv"
        target.write_text(profile_csv(sample_profile(sol, req)))
        print(target)
    return EXIT_OK


def curve_rows(anchor, ctx, n: int = 201, span: float = 100.0) -> list[tuple]:
    """Rows ``(curve, h, u, a)`` tabulating every curve through ``anchor``.

    The depth grid is logarithmic on ``[h0 / span, h0 * span]`` and
    contains ``h0`` itself.
    """
    hs = np.geomspace(anchor.h / span, anchor.h * span, n)
    hs = np.unique(np.append(hs, anchor.h))
    rows = []
    for name, spec in (("W1", W1(anchor)), ("W2", W2(anchor)),
                       ("W1B", W1B(anchor)), ("W2B", W2B(anchor))):
        rows += [(name, h, wave_curve_u(spec, h, ctx), anchor.a) for h in hs]
    for h in hs:
        u, a = stationary_curve(h, anchor, ctx)
        rows.append(("W3", h, u, a))
    c = np.sqrt(ctx.g * hs)
    rows += [("C+", h, ch, anchor.a) for h, ch in zip(hs, c)]
    rows += [("C-", h, -ch, anchor.a) for h, ch in zip(hs, c)]
    return rows


def cmd_curves(args) -> int:
    pf = load_problem(args.file, _overrides(args))
    anchor = pf.anchor or pf.problem.U_L
    text = curves_csv(curve_rows(anchor, pf.problem.ctx, args.n, args.span))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_validate(args) -> int:
    doc = load_solution_document(args.file)
    entries = []
    for sol in doc.solutions:
        report = validate(sol, doc.problem)
        entries.append({
            "tag": sol.structure_tag,
            "valid": report.valid,
            "violations": [
                {"check": v.check, "wave": v.wave, "magnitude": v.magnitude, "message": v.message}
                for v in report.violations
            ],
        })
    print(json.dumps({"file": str(args.file), "solutions": entries}, indent=2))
    ok = bool(entries) and all(e["valid"] for e in entries)
    return EXIT_OK if ok else EXIT_NO_SOLUTION


def _batch_item(path: str, overrides: dict) -> dict:
    name = Path(path).name
    try:
        doc = run_problem(path, overrides)
    except (SWEError, OSError, ValueError) as exc:
        return {"file": name, "status": "error", "error": type(exc).__name__, "message": str(exc)}
    return {
        "file": name,
        "status": "ok",
        "solutions": len(doc.solutions),
        "tags": [s.structure_tag for s in doc.solutions],
        "diagnostics": [
            {k: (v if np.isfinite(v) else None) for k, v in s.diagnostics.items()}
            for s in doc.solutions
        ],
    }


def batch_summary(directory, overrides: dict | None = None, jobs: int = 1) -> dict:
    """Solve every ``*.json`` file of ``directory``; rows are sorted by file name."""
    files = sorted(str(p) for p in Path(directory).glob("*.json"))
    overrides = overrides or {}
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_batch_item, files, [overrides] * len(files)))
    else:
        rows = [_batch_item(f, overrides) for f in files]
    rows.sort(key=lambda r: r["file"])
    counts = {str(k): 0 for k in range(4)}
    errors = 0
    for r in rows:
        if r["status"] == "ok":
            key = str(min(r["solutions"], 3))
            counts[key] += 1
        else:
            errors += 1
    return {"files": rows, "counts": counts, "errors": errors}


def cmd_batch(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise ValidationError(f"{directory} is not a directory", field="dir")
    summary = batch_summary(directory, _overrides(args), args.jobs)
    text = json.dumps(summary, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit code 2 is reserved for "no solution"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="swe-riemann",
        description="Exact Riemann solver for shallow water flow over a bottom step.",
    )
    common = _Parser(add_help=False)
    common.add_argument("--g", type=float, help="gravity (overrides the file)")
    common.add_argument("--tol-abs", type=float, help="absolute tolerance")
    common.add_argument("--tol-rel", type=float, help="relative tolerance")
    common.add_argument("--grid", type=int, help="scan grid size")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve a problem file")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the document here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sample", parents=[common], help="tabulate solution profiles")
    p.add_argument("file")
    p.add_argument("--t", type=float)
    p.add_argument("--xmin", type=float)
    p.add_argument("--xmax", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--side", choices=("LEFT", "RIGHT"), help="limit taken at x = 0")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("curves", parents=[common], help="tabulate wave curves")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=201, help="points per curve")
    p.add_argument("--span", type=float, default=100.0, help="depth range factor")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("validate", help="re-check a solution document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("batch", parents=[common], help="solve every problem in a directory")
    p.add_argument("dir")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoSolution as exc:
        return _fail(str(exc), EXIT_NO_SOLUTION)
    except (SWEError, OSError, ValueError) as exc:
        # includes vacuum data, which lies outside the solver's scope
        return _fail(f"{type(exc).__name__}: {exc}", EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
