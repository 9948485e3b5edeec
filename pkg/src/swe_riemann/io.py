"""Problem files, solution documents and CSV tables.

Problem files are JSON objects::

    {
      "g": 9.81,
      "left":  {"h": 2.0, "u": 0.0, "a": 0.0},
      "right": {"h": 1.0, "u": 0.0, "a": 0.0},
      "options": {
        "tol_abs": 1e-10, "tol_rel": 1e-12, "grid": 512,
        "profile": {"x_min": -1.0, "x_max": 1.0, "t": 0.1, "n": 201}
      }
    }

Only ``left`` and ``right`` are required; a state may also be written as
a list ``[h, u, a]``.  Solution documents are JSON as well, with floats
written in their shortest round-trip form, so reading a document and
writing it again reproduces the same bytes.
"""
from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import GravityContext, State
from .curves import WaveFamily
from .errors import ParseError, ValidationError
from .generators import DEFAULT_GRID
from .sampler import ProfileRequest, Side
from .waves import RiemannProblem, Solution, Wave, WaveKind

__all__ = [
    "FORMAT",
    "ProblemFile",
    "SolutionDocument",
    "curves_csv",
    "document_to_json",
    "load_problem",
    "load_solution_document",
    "parse_problem",
    "parse_solution_document",
    "problem_to_dict",
    "profile_csv",
    "solution_document",
]

FORMAT = "swe-riemann/solution"
VERSION = 1


@dataclass(frozen=True)
class ProblemFile:
    """A parsed and validated problem file."""

    problem: RiemannProblem
    grid: int = DEFAULT_GRID
    profile: ProfileRequest | None = None
    # optional anchor for curve tables; defaults to the left state
    anchor: State | None = None


@dataclass
class SolutionDocument:
    problem: RiemannProblem
    grid: int
    solutions: list[Solution]
    reasons: dict[str, list[str]] = field(default_factory=dict)


# ---------------------------------------------------------------- parsing


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None


def _line_of(text: str, key: str) -> int | None:
    needle = json.dumps(key)
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def _number(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"expected a number, got {value!r}", field=name)
    x = float(value)
    if not math.isfinite(x):
        raise ValidationError("must be finite", field=name)
    return x


def _positive(value, name: str) -> float:
    x = _number(value, name)
    if not x > 0:
        raise ValidationError(f"must be positive, got {x!r}", field=name)
    return x


def _state(obj, name: str) -> State:
    if isinstance(obj, list):
        if len(obj) != 3:
            raise ValidationError("a state list must be [h, u, a]", field=name)
        obj = dict(zip("hua", obj))
    if not isinstance(obj, dict):
        raise ValidationError("expected an object with h, u, a", field=name)
    unknown = set(obj) - {"h", "u", "a"}
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)}", field=name)
    for key in ("h", "u", "a"):
        if key not in obj:
            raise ValidationError("missing", field=f"{name}.{key}")
    return State(
        _positive(obj["h"], f"{name}.h"),
        _number(obj["u"], f"{name}.u"),
        _number(obj["a"], f"{name}.a"),
    )


def _int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"expected an integer, got {value!r}", field=name)
    if value < minimum:
        raise ValidationError(f"must be at least {minimum}", field=name)
    return value


def _profile(obj) -> ProfileRequest:
    name = "options.profile"
    if not isinstance(obj, dict):
        raise ValidationError("expected an object", field=name)
    for key in ("x_min", "x_max", "t", "n"):
        if key not in obj:
            raise ValidationError("missing", field=f"{name}.{key}")
    side = obj.get("side_at_zero", "RIGHT")
    if side not in ("LEFT", "RIGHT"):
        raise ValidationError("must be LEFT or RIGHT", field=f"{name}.side_at_zero")
    x_min = _number(obj["x_min"], f"{name}.x_min")
    x_max = _number(obj["x_max"], f"{name}.x_max")
    if not x_min < x_max:
        raise ValidationError("x_min must be smaller than x_max", field=f"{name}.x_max")
    return ProfileRequest(
        x_min, x_max, _positive(obj["t"], f"{name}.t"), _int(obj["n"], f"{name}.n", 2), Side(side)
    )


def parse_problem(text: str, overrides: dict | None = None) -> ProblemFile:
    """Parse and validate a problem file.

    ``overrides`` (keys ``g``, ``tol_abs``, ``tol_rel``, ``grid``) replace
    the file values, as the command-line flags do.

    Raises
    ------
    ParseError
        Malformed JSON or a top level that is not an object.
    ValidationError
        Schema violation; the offending field is named.
    """
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise ParseError("a problem file must hold a JSON object", line=1)
    try:
        return _build_problem(doc, overrides or {})
    except ValidationError as exc:
        if exc.field is not None and exc.line is None:
            exc.line = _line_of(text, exc.field.split(".")[-1])
        raise


def _build_problem(doc: dict, overrides: dict) -> ProblemFile:
    unknown = set(doc) - {"g", "left", "right", "options", "anchor"}
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)}", field=min(unknown))
    for key in ("left", "right"):
        if key not in doc:
            raise ValidationError("missing", field=key)
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise ValidationError("expected an object", field="options")
    unknown = set(options) - {"tol_abs", "tol_rel", "grid", "max_iter", "profile"}
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)}", field="options")

    def pick(key, source, default):
        if overrides.get(key) is not None:
            return overrides[key]
        return source.get(key, default)

    g = _positive(pick("g", doc, 9.81), "g")
    tol_abs = _positive(pick("tol_abs", options, 1e-10), "options.tol_abs")
    tol_rel = _positive(pick("tol_rel", options, 1e-12), "options.tol_rel")
    max_iter = _int(options.get("max_iter", 200), "options.max_iter", 1)
    grid = _int(pick("grid", options, DEFAULT_GRID), "options.grid", 8)
    ctx = GravityContext(g=g, tol_abs=tol_abs, tol_rel=tol_rel, max_iter=max_iter)
    left = _state(doc["left"], "left")
    right = _state(doc["right"], "right")
    profile = _profile(options["profile"]) if "profile" in options else None
    anchor = _state(doc["anchor"], "anchor") if "anchor" in doc else None
    return ProblemFile(RiemannProblem(left, right, ctx), grid, profile, anchor)


def load_problem(path, overrides: dict | None = None) -> ProblemFile:
    return parse_problem(Path(path).read_text(), overrides)


# ---------------------------------------------------------- serialization


def _state_dict(U: State) -> dict:
    return {"h": U.h, "u": U.u, "a": U.a}


def _finite_or_none(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def problem_to_dict(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> dict:
    ctx = problem.ctx
    return {
        "g": ctx.g,
        "left": _state_dict(problem.U_L),
        "right": _state_dict(problem.U_R),
        "options": {"tol_abs": ctx.tol_abs, "tol_rel": ctx.tol_rel, "max_iter": ctx.max_iter,
                    "grid": grid},
    }


def _solution_dict(sol: Solution) -> dict:
    return {
        "tag": sol.structure_tag,
        "aliases": list(sol.aliases),
        "constant": None if sol.constant is None else _state_dict(sol.constant),
        "waves": [
            {
                "kind": w.kind.value,
                "family": int(w.family),
                "left": _state_dict(w.left),
                "right": _state_dict(w.right),
                "speed": [w.speed_lo, w.speed_hi],
            }
            for w in sol.waves
        ],
        # an infinite Lax margin (no shocks) is written as null
        "diagnostics": {k: _finite_or_none(v) for k, v in sol.diagnostics.items()},
    }


def solution_document(doc: SolutionDocument) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "problem": problem_to_dict(doc.problem, doc.grid),
        "solutions": [_solution_dict(s) for s in doc.solutions],
        "reasons": {k: list(v) for k, v in sorted(doc.reasons.items())},
    }


def document_to_json(doc: SolutionDocument) -> str:
    """Serialise with full float precision (shortest round-trip repr)."""
    return json.dumps(solution_document(doc), indent=2) + "\n"


def parse_solution_document(text: str) -> SolutionDocument:
    """Inverse of :func:`document_to_json`.

    Solutions come back with ``validated=False``; run
    :func:`~swe_riemann.waves.validate` to re-establish admissibility.
    """
    raw = _loads(text)
    if not isinstance(raw, dict) or raw.get("format") != FORMAT:
        raise ParseError(f"not a {FORMAT} document", field="format")
    try:
        pf = _build_problem(raw["problem"], {})
        sols = [_solution_from(s, pf.problem.ctx.g) for s in raw["solutions"]]
        reasons = {str(k): [str(r) for r in v] for k, v in raw["reasons"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ParseError(f"bad solution document: {exc!r}") from None
    return SolutionDocument(pf.problem, pf.grid, sols, reasons)


def _solution_from(obj: dict, g: float) -> Solution:
    waves = tuple(
        Wave(
            WaveKind(w["kind"]),
            WaveFamily(w["family"]),
            _state(w["left"], "wave.left"),
            _state(w["right"], "wave.right"),
            float(w["speed"][0]),
            float(w["speed"][1]),
        )
        for w in obj["waves"]
    )
    diagnostics = {k: (math.inf if v is None and k == "min_lax_margin" else v)
                   for k, v in obj["diagnostics"].items()}
    constant = None if obj["constant"] is None else _state(obj["constant"], "constant")
    return Solution(waves, obj["tag"], tuple(obj["aliases"]), diagnostics, False, g, constant)


def load_solution_document(path) -> SolutionDocument:
    return parse_solution_document(Path(path).read_text())


# ------------------------------------------------------------------- CSV


def _csv_text(header, rows) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(x)) if not isinstance(x, str) else x for x in row])
    return buf.getvalue()


def profile_csv(table: np.ndarray) -> str:
    """CSV text with columns ``x,h,u,a`` from a :func:`sample_profile` table."""
    return _csv_text(("x", "h", "u", "a"), table.tolist())


def curves_csv(rows) -> str:
    """Long-format CSV ``curve,h,u,a`` from ``(name, h, u, a)`` rows."""
    return _csv_text(("curve", "h", "u", "a"), rows)
