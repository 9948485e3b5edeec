"""Scalar root finding: safeguarded Newton, Brent refinement, and grid scans.

All wave-curve intersections in this package are one-dimensional problems
in a depth (or bottom level) parameter.  Curves are monotone, so a sign
change once found is a guaranteed bracket.  Matching functions built from
stationary jumps are only defined on part of the parameter range; the scan
helper treats ``nan`` as "undefined here" and searches the edges of every
defined interval as well as its interior.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

from .errors import ConvergenceFailure, EmptyBracket

__all__ = ["brent", "newton_bisect", "scan_roots"]


def newton_bisect(
    f: Callable[[float], float],
    df: Callable[[float], float],
    lo: float,
    hi: float,
    x0: float | None = None,
    tol_abs: float = 1e-10,
    tol_rel: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """Hybrid Newton/bisection on a bracket ``[lo, hi]`` with a sign change.

    A Newton step is taken whenever it stays inside the current bracket and
    halves the residual fast enough; otherwise the bracket is bisected.
    Converged once the step falls below ``tol_rel * |x|`` and the residual
    is below ``tol_abs``, or the bracket collapses to adjacent floats.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise EmptyBracket(f"no sign change on [{lo}, {hi}]")
    if flo > 0:
        lo, hi = hi, lo
    x = 0.5 * (lo + hi) if x0 is None or not (min(lo, hi) < x0 < max(lo, hi)) else x0
    fx = f(x)
    dx_old = abs(hi - lo)
    for _ in range(max_iter):
        if fx == 0.0:
            return x
        if fx < 0:
            lo = x
        else:
            hi = x
        d = df(x)
        step = None
        if d != 0.0 and math.isfinite(d):
            cand = x - fx / d
            if min(lo, hi) < cand < max(lo, hi) and abs(2.0 * fx) <= abs(dx_old * d):
                step = cand
        if step is None:
            step = 0.5 * (lo + hi)
        dx_old = abs(step - x)
        x_prev, x = x, step
        fx = f(x)
        if dx_old <= tol_rel * abs(x) and abs(fx) <= tol_abs:
            return x
        if x == x_prev or abs(hi - lo) <= 4.0 * np.spacing(abs(x)):
            return x
    raise ConvergenceFailure(f"newton_bisect did not converge in {max_iter} iterations")


def brent(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol_rel: float = 1e-14,
    max_iter: int = 200,
) -> float:
    """Brent's method on a sign-changing bracket, mapped onto package errors."""
    try:
        return brentq(f, lo, hi, xtol=1e-300, rtol=max(tol_rel, 4 * np.finfo(float).eps),
                      maxiter=max_iter)
    except ValueError as exc:
        raise EmptyBracket(str(exc)) from None
    except RuntimeError as exc:
        raise ConvergenceFailure(str(exc)) from None


def _edge(f_scalar, x_ok: float, x_bad: float, iters: int = 60) -> float:
    """Last defined point before ``f_scalar`` turns ``nan`` between the two."""
    for _ in range(iters):
        mid = 0.5 * (x_ok + x_bad)
        if mid == x_ok or mid == x_bad:
            break
        if math.isnan(f_scalar(mid)):
            x_bad = mid
        else:
            x_ok = mid
    return x_ok


def _edge_vec(f_vector, x_ok: float, x_bad: float, width: int = 64, rounds: int = 10) -> float:
    """Same as :func:`_edge` using ``width`` vectorised samples per round."""
    for _ in range(rounds):
        xs = np.linspace(x_ok, x_bad, width + 2)[1:-1]
        bad = np.isnan(f_vector(xs))
        if not bad.any():
            x_ok = xs[-1]
            continue
        j = int(np.argmax(bad))
        if j > 0:
            x_ok = xs[j - 1]
        x_bad = xs[j]
        if abs(x_bad - x_ok) <= 2.0 * np.spacing(max(abs(x_ok), abs(x_bad))):
            break
    return x_ok


def scan_roots(
    f_scalar: Callable[[float], float],
    grid: Sequence[float],
    values: Sequence[float] | None = None,
    tol_rel: float = 1e-14,
    max_iter: int = 200,
    f_vector: Callable[[np.ndarray], np.ndarray] | None = None,
    margin: Callable[[float], float] | None = None,
) -> list[float]:
    """All roots of ``f_scalar`` detected on ``grid``.

    ``values`` may hold precomputed samples of the function on the grid and
    ``f_vector`` a vectorised version of it.  ``nan`` marks points where the
    function is undefined; roots lying between the last defined grid point
    and the true edge of a defined interval are recovered by locating the
    edge first (with ``f_vector`` when given).
    """
    grid = np.asarray(grid, dtype=float)
    if values is None:
        values = f_vector(grid) if f_vector is not None else np.array([f_scalar(x) for x in grid])
    values = np.asarray(values, dtype=float)
    defined = ~np.isnan(values)

    def edge(x_ok, x_bad):
        if margin is not None:
            m_ok, m_bad = margin(x_ok), margin(x_bad)
            if m_ok >= 0 > m_bad:
                x = brent(margin, x_ok, x_bad, tol_rel=4e-16, max_iter=max_iter)
                # step back onto the defined side
                step = 4.0 * np.spacing(abs(x)) * (1.0 if x_bad > x_ok else -1.0)
                for _ in range(40):
                    if (x - x_ok) * (x_bad - x_ok) <= 0:
                        break
                    if not math.isnan(f_scalar(x)):
                        return x
                    x -= step
                    step *= 2.0
        if f_vector is not None:
            return _edge_vec(f_vector, x_ok, x_bad)
        return _edge(f_scalar, x_ok, x_bad)

    # pairs (x, f(x)) in order, with interval edges inserted
    points: list[tuple[float, float, int]] = []  # x, fx, interval id
    interval = 0
    n = len(grid)
    # only grid points next to a sign change or an interval edge matter;
    # skipped stretches keep one sign so no bracket is lost
    idx = np.flatnonzero(defined)
    keep = np.zeros(n, dtype=bool)
    with np.errstate(invalid="ignore"):
        sc = np.flatnonzero(values[:-1] * values[1:] <= 0)
    keep[sc] = keep[sc + 1] = True
    if len(idx):
        d = np.diff(defined.astype(np.int8))
        keep[np.flatnonzero(d == 1) + 1] = True
        keep[np.flatnonzero(d == -1)] = True
        keep[idx[0]] = keep[idx[-1]] = True
    for i in np.flatnonzero(keep & defined):
        if i > 0 and not defined[i - 1]:
            xe = edge(grid[i], grid[i - 1])
            fe = f_scalar(xe) if xe != grid[i] else math.nan
            if not math.isnan(fe):
                points.append((xe, fe, interval))
        points.append((grid[i], values[i], interval))
        if i + 1 < n and not defined[i + 1]:
            xe = edge(grid[i], grid[i + 1])
            fe = f_scalar(xe) if xe != grid[i] else math.nan
            if not math.isnan(fe):
                points.append((xe, fe, interval))
            interval += 1
    roots: list[float] = []
    for (x0, f0, k0), (x1, f1, k1) in itertools.pairwise(points):
        if k0 != k1:
            continue
        if f0 == 0.0:
            roots.append(x0)
            continue
        if f0 * f1 < 0:
            roots.append(brent(f_scalar, x0, x1, tol_rel=tol_rel, max_iter=max_iter))
    if points and points[-1][1] == 0.0:
        roots.append(points[-1][0])
    out: list[float] = []
    for r in roots:
        if not out or abs(r - out[-1]) > 1e-13 * max(1.0, abs(r)):
            out.append(r)
    return out
