"""Acceptance criteria 1-10, each at its stated tolerance.

Every test records one PASS/FAIL line (shown in the terminal summary).
Criteria 2 and 3 audit all solutions logged by the other criteria, so they
come last in this file.
"""
import itertools
import math
import time

import numpy as np
import oracles
from builders import datasets

from swe_riemann import (
    DEFAULT_CONTEXT,
    W1,
    W2B,
    Multiplicity,
    ProfileRequest,
    RiemannProblem,
    State,
    VacuumData,
    WaveKind,
    critical_data,
    hugoniot_u,
    rarefaction_u,
    reflect_problem,
    reflect_solution,
    same_solution,
    sample,
    sample_profile,
    shock_speed,
    solve,
    stationary_roots,
    sw_images,
    wave_curve_u,
    zero_speed_point,
)

G = 9.81
CTX = DEFAULT_CONTEXT


def _middle(sol):
    """State between the 1-waves and the 2-waves of a flat-bottom solution."""
    if not sol.waves:
        return sol.constant
    for w in sol.waves:
        if int(w.family) == 2:
            return w.left
    return sol.waves[-1].right


# ------------------------------------------------------------------ 1


def test_criterion_01_flat_bottom_oracle(record, solution_log):
    rng = np.random.default_rng(101)
    checked = worst = 0.0
    count_ok = True
    vacuum_mismatch = 0
    while checked < 1000:
        hL, hR = rng.uniform(0.1, 10.0, 2)
        uL, uR = rng.uniform(-5.0, 5.0, 2)
        problem = RiemannProblem(State(hL, uL, 0.0), State(hR, uR, 0.0))
        try:
            hs, us = oracles.star_state(hL, uL, hR, uR)
        except ValueError:
            try:
                solve(problem)
                vacuum_mismatch += 1
            except VacuumData:
                pass
            continue
        sols = solve(problem)
        solution_log.extend(sols)
        checked += 1
        if len(sols) != 1 or any(w.kind is WaveKind.STATIONARY for w in sols[0].waves):
            count_ok = False
            continue
        m = _middle(sols[0])
        worst = max(worst, abs(m.h - hs), abs(m.u - us))
    passed = count_ok and worst <= 1e-8 and vacuum_mismatch == 0
    record(1, passed, f"1000 flat problems, one solution each={count_ok}, "
                      f"max middle-state error {worst:.2e}")
    assert passed


# ------------------------------------------------------------------ 4


def _phi(h, h0, u0, da):
    return da + u0 * u0 / (2 * G) * (h0 * h0 / (h * h) - 1.0) + h - h0


def test_criterion_04_stationary_roots(record):
    rng = np.random.default_rng(104)
    worst_phi = worst_oracle = worst_collision = worst_crit = 0.0
    order_ok = True
    for i in range(1000):
        h0 = rng.uniform(0.1, 5.0)
        u0 = rng.choice([-1.0, 1.0]) * rng.uniform(0.05, 3.0) * math.sqrt(G * h0)
        U0 = State(h0, u0, 0.0)
        h_min, a_thr = critical_data(U0, CTX)
        da = rng.uniform(-h0, a_thr)
        r = stationary_roots(U0, da, CTX)
        if r.multiplicity is Multiplicity.NONE:
            order_ok = False
            continue
        lo, hi = r.h_star, r.h_star_upper
        worst_phi = max(worst_phi, abs(_phi(lo, h0, u0, da)), abs(_phi(hi, h0, u0, da)))
        order_ok &= lo <= h_min <= hi
        if i < 200:
            ref = oracles.stationary_depths(h0, u0, da)
            if len(ref) == 2:
                worst_oracle = max(worst_oracle, abs(lo - ref[0]) / ref[0], abs(hi - ref[1]) / ref[1])
        # collision level
        rc = stationary_roots(U0, a_thr, CTX)
        worst_collision = max(worst_collision, abs(rc.h_star - h_min) / h_min,
                              abs(rc.h_star_upper - h_min) / h_min)
        sup, sub = sw_images(U0, a_thr, CTX)
        for V in (sup, sub):
            target = math.copysign(math.sqrt(G * V.h), u0)
            worst_crit = max(worst_crit, abs(V.u - target) / max(1.0, abs(target)))
    # the closed-form collision level against the bisected oracle
    worst_level = 0.0
    for _ in range(10):
        h0 = rng.uniform(0.1, 5.0)
        u0 = rng.uniform(0.1, 3.0) * math.sqrt(G * h0)
        level = oracles.critical_level(h0, u0)
        worst_level = max(worst_level, abs(critical_data(State(h0, u0), CTX)[1] - level) / h0)
    passed = (worst_phi <= 1e-10 and order_ok and worst_collision <= 1e-6
              and worst_crit <= 1e-8 and worst_oracle <= 1e-10 and worst_level <= 1e-8)
    record(4, passed, f"phi residual {worst_phi:.1e}, ordering={order_ok}, "
                      f"collision {worst_collision:.1e}, critical image {worst_crit:.1e}, "
                      f"oracle roots {worst_oracle:.1e}, level {worst_level:.1e}")
    assert passed


# ------------------------------------------------------------------ 5


def test_criterion_05_wave_curve_regularity(record):
    rng = np.random.default_rng(105)
    mono = convex = w2b_mono = True
    worst_match = 0.0
    for _ in range(100):
        h0 = rng.uniform(0.1, 5.0)
        U0 = State(h0, rng.uniform(-5.0, 5.0), 0.0)
        c1, c2b = W1(U0), W2B(U0)
        for h in np.geomspace(0.05 * h0, 20.0 * h0, 60):
            if abs(h - h0) < 3e-5 * h0:
                continue
            d = 1e-5 * h
            um, uc, up = (wave_curve_u(c1, x, CTX) for x in (h - d, h, h + d))
            mono &= (up - um) / (2 * d) < 0
            convex &= (up - 2 * uc + um) / (d * d) > 0
            vm, vp = (wave_curve_u(c2b, x, CTX) for x in (h - d, h + d))
            w2b_mono &= (vp - vm) / (2 * d) > 0
        # shock and rarefaction branches meet with equal value and slope:
        # second-order one-sided differences from each side of h0
        d = 1e-5 * h0
        for spec in (c1, c2b):
            u = [wave_curve_u(spec, h0 + k * d, CTX) for k in (-2, -1, 0, 1, 2)]
            left = (3 * u[2] - 4 * u[1] + u[0]) / (2 * d)
            right = (-3 * u[2] + 4 * u[3] - u[4]) / (2 * d)
            branch_values = (hugoniot_u(int(spec.family), h0, U0, CTX),
                             rarefaction_u(int(spec.family), h0, U0, CTX, spec.direction))
            worst_match = max(worst_match, abs(left - right) / max(1.0, abs(left)),
                              abs(branch_values[0] - branch_values[1]))
    passed = mono and convex and w2b_mono and worst_match <= 1e-8
    record(5, passed, f"W1 decreasing={mono}, W1 convex={convex}, W2B increasing={w2b_mono}, "
                      f"branch mismatch {worst_match:.1e}")
    assert passed


# ------------------------------------------------------------------ 6


def test_criterion_06_zero_speed_points(record):
    rng = np.random.default_rng(106)
    worst = worst_oracle = 0.0
    signs = True
    for _ in range(100):
        h0 = rng.uniform(0.1, 5.0)
        c0 = math.sqrt(G * h0)
        for fam, u0 in ((1, rng.uniform(1.05, 4.0) * c0), (2, -rng.uniform(1.05, 4.0) * c0)):
            U0 = State(h0, u0, 0.0)
            ht = zero_speed_point(fam, U0, CTX)

            def speed(h, fam=fam, U0=U0):
                return shock_speed(fam, U0, State(h, hugoniot_u(fam, h, U0, CTX), 0.0), CTX)

            worst = max(worst, abs(speed(ht)))
            below, above = speed(ht * (1 - 1e-6)), speed(ht * (1 + 1e-6))
            # a 1-shock slows down as it strengthens; the backward 2-shock mirrors it
            signs &= (below > 0 > above) if fam == 1 else (below < 0 < above)
            worst_oracle = max(worst_oracle, abs(ht - oracles.zero_speed_depth(h0, abs(u0))) / ht)
    passed = worst <= 1e-10 and signs and worst_oracle <= 1e-12
    record(6, passed, f"|speed(h~)| {worst:.1e}, sign change={signs}, oracle {worst_oracle:.1e}")
    assert passed


# ------------------------------------------------------------------ 7


def test_criterion_07_round_trips(record, solution_log):
    summary = []
    passed = True
    for tag in ("C1", "C2", "C3", "C4", "C5", "C6", "C7"):
        data = datasets(tag, 50, seed=700 + int(tag[1]))
        ok = 0
        for problem, built in data:
            sols = solve(problem)
            solution_log.extend(sols)
            match = [s for s in sols if same_solution(s, built, 1e-8)]
            if match and tag in match[0].tags:
                ok += 1
        summary.append(f"{tag} {ok}/{len(data)}")
        passed &= len(data) >= 50 and ok == len(data)
    record(7, passed, ", ".join(summary))
    assert passed


# ------------------------------------------------------------------ 8


def test_criterion_08_multiplicity_and_nonexistence(record, solution_log):
    rng = np.random.default_rng(108)
    n = 10_000
    hL, hR = rng.uniform(0.1, 5.0, (2, n))
    uL, uR = rng.uniform(-5.0, 5.0, (2, n))
    da = rng.uniform(0.0, 1.0, n)
    counts = {}
    multi_ok = True
    t0 = time.perf_counter()
    for i in range(n):
        problem = RiemannProblem(State(hL[i], uL[i], 0.0), State(hR[i], uR[i], da[i]))
        try:
            sols = solve(problem)
        except VacuumData:
            continue
        k = len(sols)
        counts[k] = counts.get(k, 0) + 1
        if k >= 2:
            solution_log.extend(sols)
            multi_ok &= all(_audit(s)[0] for s in sols)
            multi_ok &= all(not same_solution(a, b, 1e-8) for j, a in enumerate(sols)
                            for b in sols[j + 1:])
    elapsed = time.perf_counter() - t0
    passed = counts.get(0, 0) >= 1 and sum(v for k, v in counts.items() if k >= 2) >= 1 and multi_ok
    record(8, passed, f"{n} problems in {elapsed:.0f}s, solution counts "
                      f"{dict(sorted(counts.items()))}, multi-solution audits pass={multi_ok}")
    assert passed


# ------------------------------------------------------------------ 9


def test_criterion_09_reflection_covariance(record, solution_log):
    rng = np.random.default_rng(109)
    bad = 0
    for _ in range(500):
        problem = RiemannProblem(
            State(rng.uniform(0.1, 5.0), rng.uniform(-5.0, 5.0), 0.0),
            State(rng.uniform(0.1, 5.0), rng.uniform(-5.0, 5.0), rng.uniform(-1.0, 1.0)),
        )
        direct = [reflect_solution(s) for s in solve(problem)]
        mirrored = solve(reflect_problem(problem))
        solution_log.extend(mirrored)
        if len(direct) != len(mirrored):
            bad += 1
            continue
        for s in direct:
            m = [t for t in mirrored if same_solution(s, t, 1e-10)]
            if not m or any(abs(a.speed_lo - b.speed_lo) > 1e-10 * max(1.0, abs(a.speed_lo))
                            or abs(a.speed_hi - b.speed_hi) > 1e-10 * max(1.0, abs(a.speed_hi))
                            for a, b in zip(s.waves, m[0].waves)):
                bad += 1
    record(9, bad == 0, f"500 problems, {bad} mismatches")
    assert bad == 0


# ----------------------------------------------------------------- 10


def test_criterion_10_sampler(record):
    dam = solve(RiemannProblem(State(2.0, 0.0, 0.0), State(1.0, 0.0, 0.0)))[0]
    cases = [dam] + [s for p, _ in datasets("C5", 3, seed=1010) + datasets("C6", 3, seed=1011)
                     for s in solve(p)]
    # dyadic abscissae so that alpha * x and alpha * t are exact
    xs = np.arange(-4096, 4097) / 512.0
    t = 0.5
    exact = True
    for sol in cases:
        for alpha in (2.0, 10.0):
            for x in xs:
                exact &= sample(sol, x / t) == sample(sol, (alpha * x) / (alpha * t))
    table = sample_profile(dam, ProfileRequest(-1.0, 1.0, 0.1, 1000))
    worst = 0.0
    for x, h, u, _ in table:
        ho, uo = oracles.sample_flat(2.0, 0.0, 1.0, 0.0, x / 0.1)
        worst = max(worst, abs(h - ho), abs(u - uo))
    passed = exact and worst <= 1e-8
    record(10, passed, f"self-similar exactly={exact}, dam-break profile error {worst:.1e}")
    assert passed


# ------------------------------------------------------------- 2 and 3


def _audit(sol):
    """Independent jump and monotonicity checks on one solution.

    Returns ``(ok, rh, stationary, lax_margin, mc_ok, bottom_gap)``.
    """
    rh = st = 0.0
    lax = math.inf
    mc = True
    for w in sol.waves:
        L, R = w.left, w.right
        if w.kind is WaveKind.SHOCK:
            s = w.speed_lo
            mass = s * (R.h - L.h) - (R.h * R.u - L.h * L.u)
            mom = s * (R.h * R.u - L.h * L.u) - (R.h * R.u ** 2 + G * R.h ** 2 / 2
                                                   - L.h * L.u ** 2 - G * L.h ** 2 / 2)
            scale_m = max(abs(s) * max(L.h, R.h), abs(L.h * L.u), abs(R.h * R.u),
                          math.sqrt(G * max(L.h, R.h)) * min(L.h, R.h))
            scale_p = max(abs(s * L.h * L.u), abs(s * R.h * R.u), L.h * L.u ** 2 + G * L.h ** 2 / 2,
                          R.h * R.u ** 2 + G * R.h ** 2 / 2)
            rh = max(rh, abs(mass) / scale_m, abs(mom) / scale_p)
            sign = -1.0 if int(w.family) == 1 else 1.0
            lam_L = L.u + sign * math.sqrt(G * L.h)
            lam_R = R.u + sign * math.sqrt(G * R.h)
            lax = min(lax, lam_L - s, s - lam_R)
        elif w.kind is WaveKind.STATIONARY:
            q = max(abs(L.h * L.u), abs(R.h * R.u), 1e-300)
            head_L = L.u ** 2 / 2 + G * (L.h + L.a)
            head_R = R.u ** 2 / 2 + G * (R.h + R.a)
            scale = max(L.u ** 2 / 2 + G * (L.h + abs(L.a)), R.u ** 2 / 2 + G * (R.h + abs(R.a)))
            st = max(st, abs(L.h * L.u - R.h * R.u) / q, abs(head_L - head_R) / scale)
            # critical endpoints (|u|^2 = gh up to rounding) count as either side
            fl, fr = L.u ** 2 - G * L.h, R.u ** 2 - G * R.h
            crit_l = abs(fl) <= 1e-9 * G * L.h
            crit_r = abs(fr) <= 1e-9 * G * R.h
            mc &= crit_l or crit_r or (fl > 0) == (fr > 0)
    states = sol.states or [sol.constant]
    tv = sum(abs(b.a - a.a) for a, b in itertools.pairwise(states))
    gap = abs(tv - abs(states[-1].a - states[0].a))
    ok = rh <= 1e-9 and st <= 1e-10 and lax > 0 and mc and gap <= 1e-14 * max(
        1.0, abs(states[0].a), abs(states[-1].a))
    return ok, rh, st, lax, mc, gap


def _corpus(solution_log):
    extra = []
    for tag in ("C1", "C2", "C3", "C4", "C5", "C6", "C7"):
        for problem, _ in datasets(tag, 10, seed=900 + int(tag[1])):
            extra.extend(solve(problem))
    return list(solution_log) + extra


def test_criterion_02_jump_relations(record, solution_log):
    corpus = _corpus(solution_log)
    rh = st = 0.0
    lax = math.inf
    for sol in corpus:
        _, r, s, m, _, _ = _audit(sol)
        rh, st, lax = max(rh, r), max(st, s), min(lax, m)
    passed = rh <= 1e-9 and st <= 1e-10 and lax > 0
    record(2, passed, f"{len(corpus)} solutions, RH {rh:.1e}, stationary {st:.1e}, "
                      f"min Lax margin {lax:.2e}")
    assert passed


def test_criterion_03_monotonicity(record, solution_log):
    corpus = _corpus(solution_log)
    mc_ok = True
    worst_gap = 0.0
    for sol in corpus:
        _, _, _, _, mc, gap = _audit(sol)
        mc_ok &= mc
        worst_gap = max(worst_gap, gap)
    passed = mc_ok and all(_audit(sol)[5] <= 1e-14 * max(1.0, abs(sol.states[0].a if sol.states else 0.0), abs(sol.states[-1].a if sol.states else 0.0)) for sol in corpus)
    record(3, passed, f"{len(corpus)} solutions, same side of C at every stationary wave={mc_ok}, "
                      f"max |sum|da| - |aR - aL|| {worst_gap:.1e}")
    assert passed
