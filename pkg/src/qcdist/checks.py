"""Verification suites: every identity and inequality evaluated on grids.

Each suite is a function ``suite(points=..., seed=...) -> list[CheckReport]``
registered in ``SUITES``. ``points`` scales the grid sizes.
"""

import math
from fractions import Fraction

import numpy as np

from . import ball, bounds, elliptic, grotzsch, mn_lemma, rings
from .report import check, record

__all__ = ["SUITES", "run_suites", "mu_symmetry_defect", "complement_residual", "linear_grid", "log_grid", "random_ball_points"]

HALF_PI_SQ = (0.5 * math.pi) ** 2


def linear_grid(start, stop, count):
    return [float(v) for v in np.linspace(start, stop, count)]


def log_grid(start, stop, count):
    return [float(v) for v in np.geomspace(start, stop, count)]


def random_ball_points(rng, count, n, radius=1.0):
    """Uniform samples from the ball of the given radius in R^n."""
    v = rng.standard_normal((count, n))
    v /= np.linalg.norm(v, axis=1)[:, None]
    r = radius * rng.random(count) ** (1.0 / n)
    return v * r[:, None]


def complement_residual(r, rp):
    """sqrt(1 - r^2) - rp for a rounded complement rp, from the exact rational 1 - r^2 - rp^2."""
    e = Fraction(1) - Fraction(r) ** 2 - Fraction(rp) ** 2
    return float(e) / (2.0 * rp)


def mu_symmetry_defect(r):
    """mu(r) mu(r') - (pi/2)^2 with r' the exact complement of r.

    The binary64 r' is off by up to half an ulp, and near r' = 1 mu amplifies
    that by roughly 1/r^2; the rounding is removed to first order with mu'.
    Returns (corrected, raw).
    """
    rp = elliptic.complement(r)
    m_rp = grotzsch.mu(rp)
    corrected = grotzsch.mu(r) * (m_rp + grotzsch.dmu_dr(rp) * complement_residual(r, rp))
    return corrected - HALF_PI_SQ, grotzsch.mu(r) * m_rp - HALF_PI_SQ


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def elliptic_suite(points=50, seed=0):
    out = []
    grid = linear_grid(0.01, 0.99, points)
    for r in grid:
        k = elliptic.complete_K(r)
        via_agm = math.pi / (2.0 * elliptic.agm(1.0, elliptic.complement(r)))
        out.append(check("K-agm", _rel(k, via_agm), 1e-12, r=r))
        out.append(check("K-quadrature", _rel(k, elliptic.quadrature_K(r)), 1e-11, r=r))
        out.append(check("E-quadrature", abs(elliptic.complete_E(r) - elliptic.quadrature_E(r)), 1e-12, r=r))
        rp = elliptic.complement(r)
        legendre = (elliptic.complete_E(r) * elliptic.complete_K(rp)
                    + elliptic.complete_E(rp) * k - k * elliptic.complete_K(rp))
        out.append(check("legendre", abs(legendre - 0.5 * math.pi), 1e-11, r=r))
    ks = [elliptic.complete_K(r) for r in grid]
    es = [elliptic.complete_E(r) for r in grid]
    out.append(check("K-increasing", 0.0, min(b - a for a, b in zip(ks, ks[1:])), strict=True))
    out.append(check("E-decreasing", 0.0, min(a - b for a, b in zip(es, es[1:])), strict=True))
    b = 4.0 / math.pi * elliptic.complete_K(1.0 / math.sqrt(2.0)) ** 2
    out.append(check("b-constant", abs(b - 4.376879), 5e-6, b=b))
    return out


def mu_suite(points=50, seed=0):
    out = []
    for r in log_grid(1e-4, 1 - 1e-4, points):
        corrected, raw = mu_symmetry_defect(r)
        out.append(check("mu-symmetry", abs(corrected), 1e-11, r=r))
        out.append(record("mu-symmetry-raw", abs(raw), 1e-11, note="binary64 r', input-rounding limited", r=r))
    rs = linear_grid(0.02, 0.98, points)
    for K in (1.1, 2.0, 5.0, 17.0):
        for r in rs:
            back = grotzsch.phi_K_pair(1.0 / K, *grotzsch.phi_K_pair(K, r))[0]
            out.append(check("phi-inverse", abs(back - r), 1e-10, K=K, r=r))
            pyth = grotzsch.phi_K(K, r) ** 2 + grotzsch.phi_K(1.0 / K, elliptic.complement(r)) ** 2
            out.append(check("phi-pythagorean", abs(pyth - 1.0), 1e-10, K=K, r=r))
        # compare complements: phi_K(r) itself rounds to 1 for large K
        comps = [grotzsch.phi_K_pair(K, r)[1] for r in rs]
        out.append(check("phi-increasing-r", 0.0, min(a - b for a, b in zip(comps, comps[1:])), strict=True, K=K))
    for y in linear_grid(0.05, 10.0, points):
        inv, inv_c = grotzsch.mu_inv_pair(y)
        out.append(check("mu-roundtrip", _rel(grotzsch.mu_from_pair(inv, inv_c), y), 1e-11, y=y))
        th = math.tanh(y)
        sech = 1.0 / math.cosh(y)
        # 1 - tanh^8 = sech^2 (1 + tanh^2)(1 + tanh^4), free of cancellation
        tanh8_form = sech * math.sqrt((1 + th * th) * (1 + th ** 4))
        out.append(check("mu-inv-sandwich-1", sech, tanh8_form, strict=True, y=y))
        # relative gap is ~1e-12 at y = 6.5 and ~1e-18 at y = 10
        out.append(check("mu-inv-sandwich-2", tanh8_form, inv, strict=y < 6, rtol=1e-14, y=y))
        out.append(check("mu-inv-sandwich-3", inv, 4.0 * math.exp(-y), strict=True, y=y))
    mus = [grotzsch.mu(r) for r in rs]
    out.append(check("mu-decreasing", 0.0, min(a - b for a, b in zip(mus, mus[1:])), strict=True))
    for r in (0.1, 0.5, 0.9):
        vals = [grotzsch.phi_K(K, r) for K in (1.1, 2.0, 5.0, 17.0)]
        out.append(check("phi-increasing-K", 0.0, min(b - a for a, b in zip(vals, vals[1:])), strict=True, r=r))
    for K in log_grid(1.001, 100.0, 40):
        c1 = bounds.krzyz_c1(K)
        lo, hi = bounds.krzyz_c1_bounds(K)
        out.append(check("krzyz-lower", lo, c1, strict=True, K=K))
        out.append(check("krzyz-upper", c1, hi, strict=True, K=K))
    return out


def rings_suite(points=50, seed=0):
    out = []
    for K in (1.5, 2.0, 4.0):
        for t in (0.5, 1.0, 3.0, 10.0):
            via_tau = rings.tau_2_inverse(rings.tau_n(2, t).value / K)
            closed = rings.eta_K2(K, t)
            r = math.sqrt(t / (1 + t))
            s = grotzsch.phi_K(K, r)
            out.append(check("eta-tau-consistency", _rel(via_tau, closed), 1e-8, K=K, t=t))
            out.append(check("eta-closed-forms", _rel(s * s / (1 - s * s), closed), 1e-8, K=K, t=t))
    for K in (1.01, 1.1, 1.5, 2.0, 3.0):
        lam = rings.lambda_K(K)
        out.append(check("lambda-lower", math.exp(math.pi * (K - 1)), lam, strict=True, K=K))
        out.append(check("lambda-upper", lam, math.exp(4.376879 * (K - 1)), strict=True, K=K))
    for K in linear_grid(1.0 + 0.2 / points, 1.2, points):
        out.append(record("belinskii", rings.lambda_K(K), 1 + 12 * (K - 1), note="reported only", K=K))
    Ks = linear_grid(1.0, 10.0, points)
    for n in (3, 4):
        for t in (0.5, 1.0, 4.0):
            ups = [rings.eta_Kn(K, n, t).upper for K in Ks]
            out.append(check("eta-enclosure-monotone-K", 0.0, min(b - a for a, b in zip(ups, ups[1:])), n=n, t=t))
            for K in Ks[1:]:
                enc = rings.eta_Kn(K, n, t)
                ok = (enc.rigor == rings.BOUND_ONLY and 0 < enc.lower <= enc.upper < math.inf)
                out.append(check("enclosure-discipline", 0.0, 1.0 if ok else -1.0, K=K, n=n, t=t))
    # n = 2: the capacity enclosure formula used for n >= 3 must contain the exact value
    for t in (0.1, 1.0, 10.0):
        exact = rings.tau_n(2, t).value
        s = math.sqrt(1 + t)
        lower = 0.5 * 2 * math.pi / math.log(4 * s)
        upper = 0.5 * 2 * math.pi / math.log(s)
        out.append(check("tau-enclosure-n2-lower", lower, exact, t=t))
        out.append(check("tau-enclosure-n2-upper", exact, upper, t=t))
    return out


def ball_suite(points=50, seed=0):
    out = []
    rng = np.random.default_rng(seed)
    for n in (2, 3):
        xs = random_ball_points(rng, 40 * points, n, radius=0.999)
        ys = random_ball_points(rng, 40 * points, n, radius=0.999)
        zs = random_ball_points(rng, 40 * points, n, radius=0.999)
        worst = math.inf
        worst_tri = math.inf
        worst_sym = 0.0
        for x, y, z in zip(xs, ys, zs):
            lhs, rhs = ball.chord_bound(x, y)
            worst = min(worst, rhs - lhs)
            dxy = ball.hyperbolic_distance(x, y)
            worst_sym = max(worst_sym, abs(dxy - ball.hyperbolic_distance(y, x)))
            worst_tri = min(worst_tri, ball.hyperbolic_distance(x, z) + ball.hyperbolic_distance(z, y) - dxy)
        out.append(check("chord-bound", 0.0, worst, n=n))
        out.append(check("rho-triangle", 0.0, worst_tri + 1e-9, n=n))
        out.append(check("rho-symmetry", worst_sym, 1e-12, n=n))
        for x in xs[:20]:
            lhs, rhs = ball.chord_bound(x, -x)
            out.append(check("chord-equality", abs(lhs - rhs), 1e-12, n=n, norm=float(np.linalg.norm(x))))
            out.append(check("rho-identity", ball.hyperbolic_distance(x, x), 0.0, n=n))
        for a, u, v in zip(xs[:points], ys[:points], zs[:points]):
            T = ball.mobius_to_origin(a)
            moved = (ball.hyperbolic_distance(T(u), T(v)), ball.hyperbolic_distance(u, v))
            out.append(check("mobius-invariance", _rel(*moved), 1e-10, n=n))
            out.append(check("mobius-center", float(np.linalg.norm(T(a))), 1e-12, n=n))
    for alpha in (0.1, 0.25, 0.5, 0.9):
        f = ball.RadialStretching(2, alpha)
        r = np.linspace(0.0, 1.0, 1_000_001)
        grid_max = float(np.max(r ** alpha - r))
        out.append(check("delta-grid", abs(grid_max - f.delta), 1e-8, alpha=alpha))
        out.append(check("delta-lower", (1 - alpha) / math.e, f.delta, strict=True, alpha=alpha))
        outside = np.array([0.6, 0.8]) * 1.5
        out.append(check("stretch-identity-outside", float(np.linalg.norm(f(outside) - outside)), 0.0, alpha=alpha))
    return out


def bounds_suite(points=50, seed=0):
    out = []
    for K in linear_grid(1.0, 17.0, points):
        for n in (2, 3):
            out.extend(bounds.stabrmk_bounds(K, n))
            chain = bounds.mycor_bound(K, n).chain
            out.append(check("tanh-chain", chain, 4.5 * (K - 1), K=K, n=n))
            delta = ball.RadialStretching.from_dilatation(K, n).delta
            out.append(check("delta-vs-linear", delta, 4.5 * (K - 1), K=K, n=n))
        out.extend(bounds.origin_bound_chain(K, 2))
        out.extend(bounds.origin_bound_chain(K, 3))
    for K in linear_grid(1.0 + 4.0 / points, 5.0, points):
        out.append(check("b-bound", bounds.main_theorem_bound(K, 2).value, 4.376879 * (K - 1), K=K))
    for K in (1.2, 2.0, 5.0):
        a = bounds.a_constant(K, 2).value
        out.append(check("corollary-at-0", abs(bounds.corollary_bound(K, 0.0) - (1 - 2 * a)), 1e-10, K=K))
        up = bounds.sandwich_eta(K, 2, 0.0).upper.value
        out.append(check("sandwich-at-0", abs(up - (1 - 2 * a)), 1e-10, K=K))
    for K in linear_grid(1.05, 10.0, 30):
        for r in linear_grid(0.02, 0.98, 30):
            lhs = grotzsch.phi_K(K, r)
            rhs = 2 * grotzsch.phi_K(K, math.sqrt((1 + r) / 2)) ** 2 - 1
            out.append(check("schwarz-comparison", lhs, rhs, K=K, r=r))
    xs = linear_grid(0.0, 0.95, 20)
    for K in (1.0, 1.5, 2.0, 4.0):
        vals = [bounds.corollary_bound(K, x) for x in xs]
        out.append(check("corollary-increasing-x", 0.0, min(b - a for a, b in zip(vals, vals[1:])), strict=True, K=K))
    for x in xs:
        out.append(check("corollary-K1", abs(bounds.corollary_bound(1.0, x) - x), 1e-12, x=x))
        vals = [bounds.corollary_bound(K, x) for K in (1.0, 1.5, 2.0, 4.0)]
        out.append(check("corollary-increasing-K", 0.0, min(b - a for a, b in zip(vals, vals[1:])), x=x))
    out.append(record("f0-linear-window", 1.0, bounds.origin_chain_max_valid_K(20.0),
                      note="largest grid K in (1, 20] where the linear bound on |f(0)| holds"))
    for n in (2, 3, 4, 6, 10):
        out.append(record("main-bound-n-dependence", 0.0, bounds.main_theorem_bound(2.0, n).upper,
                          note="upper bound on rho displacement at K=2", n=n))
    return out


def mn_suite(points=50, seed=0):
    out = []
    p = mn_lemma.MNParams(3, 2)
    M = mn_lemma.compute_M(p)
    out.append(check("M-residual", abs(mn_lemma.quadratic_residual(p, M)), 1e-10, M=M))
    out.append(check("M-value", abs(M - 1.3254), 5e-5, M=M))
    tr = mn_lemma.iterate_a(p)
    seq = tr.sequence
    out.append(check("a-increasing", 0.0, min(b - a for a, b in zip(seq, seq[1:])), strict=True, steps=len(seq)))
    out.append(check("a-bounded", max(seq), tr.upper_cap, strict=True))
    out.append(check("a36>17", 17.0, seq[36], strict=True, a36=seq[36]))
    a = tr.limit_estimate
    out.append(check("fixed-point", abs(mn_lemma.p_func(p, a) - mn_lemma.q_func(p, a)), 1e-9, a=a))
    out.append(check("limit-below-cap", a, tr.upper_cap, strict=True, a=a))
    cap = tr.upper_cap
    out.append(check("p-exceeds-q-at-cap", mn_lemma.q_func(p, cap), mn_lemma.p_func(p, cap), strict=True, c=cap))
    for params in ((1, 1), (3, 2), (5, 4)):
        q = mn_lemma.MNParams(*params)
        Mq = mn_lemma.compute_M(q)
        out.append(check("M>1", 1.0, Mq, strict=True, m=q.m, n=q.n))
        out.append(check("ineq-at-M", mn_lemma.p_func(q, Mq), mn_lemma.q_func(q, Mq), m=q.m, n=q.n))
        g1 = mn_lemma.concavity_g(q, 1.0)
        worst = max(mn_lemma.concavity_f(q, x) for x in linear_grid(1.0, Mq, points))
        out.append(check("concavity-precondition", worst, g1, m=q.m, n=q.n))
    out.append(check("ineq-at-1", abs(mn_lemma.p_func(p, 1.0) - mn_lemma.q_func(p, 1.0)), 0.0))
    xs = np.linspace(1.0, 17.0, 200 * points + 1)[1:]
    worst = min(mn_lemma.q_func(p, x) - mn_lemma.p_func(p, x) for x in xs)
    out.append(check("ineq-on-[1,17]", 0.0, worst, strict=True, grid=len(xs)))
    return out


def witness_suite(points=50, seed=0):
    """Radial stretchings against the displacement bounds."""
    out = []
    rng = np.random.default_rng(seed)
    cases = [(2, K) for K in (1.1, 1.5, 2.0, 4.0)] + [(3, K) for K in (1.21, 2.25)]
    for n, K in cases:
        f = ball.RadialStretching.from_dilatation(K, n)
        rho_bound = bounds.main_theorem_bound(K, n).upper
        euc = bounds.mycor_bound(K, n).value
        xs = random_ball_points(rng, 4 * points, n)
        # the worst radius for |f(x) - x| is always among the witnesses
        xs = np.vstack([xs, f.argmax_radius * np.eye(n)[0]])
        worst_rho = max(ball.hyperbolic_distance(f(x), x) for x in xs)
        worst_euc = max(float(np.linalg.norm(f(x) - x)) for x in xs)
        out.append(check("witness-rho", worst_rho, rho_bound, K=K, n=n))
        out.append(check("witness-euclid", worst_euc, euc, K=K, n=n))
    return out


def conjecture_suite(points=50, seed=0):
    Ks = [1.0, 1.5, 2.0, 3.0]
    ts = linear_grid(0.1, 0.9, 5)
    rs = linear_grid(0.05, 0.95, 10)
    return bounds.averaging_conjecture_scan(Ks, ts, rs)


SUITES = {
    "elliptic": elliptic_suite,
    "mu-identities": mu_suite,
    "rings": rings_suite,
    "ball": ball_suite,
    "bounds": bounds_suite,
    "mn-lemma": mn_suite,
    "witness-maps": witness_suite,
    "conjecture": conjecture_suite,
}


def run_suites(names=None, points=50, seed=0):
    """Yield (suite_name, CheckReport) for the selected suites in registry order."""
    selected = list(SUITES) if not names else list(names)
    for name in selected:
        for report in SUITES[name](points=points, seed=seed):
            yield name, report
