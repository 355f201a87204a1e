"""Acceptance criteria at their stated tolerances, one summary line each."""

import math

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from qcdist import ball, bounds, elliptic, grotzsch, mn_lemma, rings
from qcdist.checks import log_grid, mu_symmetry_defect, random_ball_points

B_STATED = 4.376879


def report(number, name, ok, detail):
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'} {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_01_mu_identity():
    # log-spaced open grid in (1e-4, 1 - 1e-4)
    rs = log_grid(1e-4, 1 - 1e-4, 52)[1:-1]
    defects = [mu_symmetry_defect(r) for r in rs]
    worst = max(abs(c) for c, _ in defects)
    raw = max(abs(w) for _, w in defects)
    report(1, "mu(r) mu(r') = (pi/2)^2", len(rs) == 50 and worst < 1e-11,
           f"max defect {worst:.2e} at the exact complement (binary64 r' alone: {raw:.2e})")


def test_02_legendre():
    worst = 0.0
    for r in np.linspace(0.01, 0.99, 50):
        rp = elliptic.complement(r)
        K, Kp = elliptic.complete_K(r), elliptic.complete_K(rp)
        E, Ep = elliptic.complete_E(r), elliptic.complete_E(rp)
        worst = max(worst, abs(E * Kp + Ep * K - K * Kp - math.pi / 2))
    report(2, "Legendre relation", worst < 1e-11, f"max residual {worst:.2e}")


def test_03_b_constant():
    b = 4 / math.pi * elliptic.complete_K(1 / math.sqrt(2)) ** 2
    report(3, "b = (4/pi) K(1/sqrt 2)^2", abs(b - B_STATED) <= 5e-6, f"b = {b:.15g}")


def test_04_krzyz_sandwich():
    Ks = np.geomspace(1.001, 100, 40)
    gaps = []
    for K in Ks:
        lo, hi = bounds.krzyz_c1_bounds(K)
        c1 = bounds.krzyz_c1(K)
        gaps.append(min(c1 - lo, hi - c1))
    report(4, "(K-1)/(K+1) < c1 < 2(K-1)/(sqrt K+1)", min(gaps) > 0,
           f"40 K in [1.001, 100], min gap {min(gaps):.2e}")


def test_05_lambda_sandwich():
    gaps = []
    for K in (1.01, 1.1, 1.5, 2, 3):
        lam = rings.eta_Kn(K, 2, 1).value
        gaps.append(min(lam - math.exp(math.pi * (K - 1)), math.exp(B_STATED * (K - 1)) - lam))
    report(5, "e^{pi(K-1)} < lambda(K) < e^{b(K-1)}", min(gaps) > 0, f"min gap {min(gaps):.2e}")


def test_06_mn_lemma():
    p = mn_lemma.MNParams(3, 2)
    tr = mn_lemma.iterate_a(p)
    seq = tr.sequence
    a0 = seq[0]
    a = tr.limit_estimate
    resid = abs(mn_lemma.quadratic_residual(p, a0))
    fix = abs(mn_lemma.p_func(p, a) - mn_lemma.q_func(p, a))
    ok = (abs(a0 - 1.3254) < 5e-5 and resid < 1e-10
          and all(y > x for x, y in zip(seq, seq[1:]))
          and seq[36] > 17 and max(seq) < 8 * math.e ** 2 and fix < 1e-9 and tr.converged)
    report(6, "m,n-lemma at (3,2)", ok,
           f"a0={a0:.10f} resid={resid:.1e} a36={seq[36]:.10f} a={a:.10f} |p-q|={fix:.1e} steps={len(seq) - 1}")


def test_07_bound_chain():
    Ks = np.linspace(1, 5, 101)[1:]
    worst_b = min(B_STATED * (K - 1) - bounds.main_theorem_bound(K, 2).value for K in Ks)
    Ks = np.linspace(1, 17, 101)[1:]
    failed = []
    first_margin = None
    for K in Ks:
        reps = bounds.stabrmk_bounds(K, 2)
        failed += [r for r in reps if r.failed]
        if first_margin is None:
            first_margin = next(r.margin for r in reps if r.check_id == "linear-chain")
    # both sides vanish at K = 1, so the margin is O(K - 1)
    eps = [10.0 ** -k for k in range(2, 9)]
    tail = [next(r.margin for r in bounds.stabrmk_bounds(1 + e, 2) if r.check_id == "linear-chain") for e in eps]
    shrinking = all(0 <= b < a for a, b in zip(tail, tail[1:])) and tail[-1] < 10 * eps[-1]
    ok = worst_b >= 0 and not failed and shrinking
    report(7, "log lambda(K) <= b(K-1) and the (4+6 log 2)(K-1) chain", ok,
           f"min margin b-form {worst_b:.2e}; linear chain failures {len(failed)}; "
           f"margin {first_margin:.2e} at K=1.16, {tail[-1]:.2e} at K=1+1e-8")


def test_08_witness_maps():
    rng = np.random.default_rng(2024)
    lines = []
    worst = math.inf
    cases = [(2, K) for K in (1.1, 1.5, 2, 4)] + [(3, K) for K in (1.21, 2.25)]
    for n, K in cases:
        f = ball.RadialStretching.from_dilatation(K, n)
        xs = np.vstack([random_ball_points(rng, 200, n), f.argmax_radius * np.eye(n)[0]])
        rho_bound = bounds.main_theorem_bound(K, n).upper
        euc_bound = min(4.5, 2.19) * (K - 1) if n == 2 else bounds.mycor_bound(K, n).value
        rho = max(ball.hyperbolic_distance(f(x), x) for x in xs)
        euc = max(float(np.linalg.norm(f(x) - x)) for x in xs)
        worst = min(worst, rho_bound - rho, euc_bound - euc)
        lines.append(f"n={n} K={K}: rho {rho:.4f}<={rho_bound:.4f}, |f-x| {euc:.4f}<={euc_bound:.4f}")
    report(8, "radial stretching witnesses", worst >= 0, f"min margin {worst:.3e}; " + "; ".join(lines))


def test_09_delta():
    r = np.linspace(0, 1, 1_000_000)
    errs, gaps = [], []
    for alpha in (0.1, 0.25, 0.5, 0.9):
        d = ball.radial_stretch_delta(ball.RadialStretching(2, alpha))
        errs.append(abs(np.max(r ** alpha - r) - d))
        gaps.append(d - (1 - alpha) / math.e)
    report(9, "delta closed form", max(errs) < 1e-8 and min(gaps) > 0,
           f"max grid error {max(errs):.2e}, min delta-(1-alpha)/e {min(gaps):.2e}")


def test_10_corollary_coherence():
    errs = [abs(bounds.corollary_bound(K, 0) - (1 - 2 * bounds.a_constant(K, 2).value)) for K in (1.2, 2, 5)]
    margins = []
    for K in np.linspace(1.05, 10, 30):
        for r in np.linspace(0.02, 0.98, 30):
            # rhs - lhs = (1 - lhs) - (1 - rhs), both from complements to avoid cancellation
            lhs, lhs_c = grotzsch.phi_K_pair(K, r)
            _, w_c = grotzsch.phi_K_pair(K, math.sqrt((1 + r) / 2), math.sqrt((1 - r) / 2))
            margins.append(lhs_c ** 2 / (1 + lhs) - 2 * w_c ** 2)
    ok = max(errs) < 1e-10 and min(margins) >= 0 and len(margins) == 900
    report(10, "corollary at 0 and the Schwarz comparison", ok,
           f"|bound(K,0)-(1-2a)| <= {max(errs):.1e}; 900-point min margin {min(margins):.2e}")


def test_11_chord_bound():
    rng = np.random.default_rng(7)
    worst = math.inf
    for n in (2, 3):
        xs = random_ball_points(rng, 10_000, n)
        ys = random_ball_points(rng, 10_000, n)
        for x, y in zip(xs, ys):
            d, bound = ball.chord_bound(x, y)
            worst = min(worst, bound - d)
    eq = 0.0
    for x in random_ball_points(rng, 20, 3):
        d, bound = ball.chord_bound(x, -x)
        eq = max(eq, abs(bound - d))
    report(11, "|x-y| <= 2 tanh(rho/4)", worst >= 0 and eq < 1e-12,
           f"20000 pairs, min margin {worst:.2e}; antipodal max |gap| {eq:.2e}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
