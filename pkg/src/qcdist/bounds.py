"""Quantitative distortion bounds for K-quasiconformal maps of B^n.

Every bound carries the range of K on which it is proven. Outside that range
the calculators return an infinite bound or a not-applicable report instead
of extrapolating. K = 1 short-circuits to the degenerate values.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .elliptic import complete_K
from .errors import DomainError, UsageError
from .grotzsch import mu_inv, phi_K, phi_K_pair
from .mn_lemma import MNParams, p_func
from .report import check, not_applicable, record
from .rings import (
    BOUND_ONLY,
    EXACT,
    Enclosure,
    _check_dim,
    eta_Kn,
    grotzsch_constant_interval,
    phi_lower_coefficient,
)

__all__ = [
    "B_CONSTANT",
    "LINEAR_CONSTANT",
    "K_WINDOW_LINEAR",
    "DisplacementBound",
    "FxBounds",
    "krzyz_c1",
    "krzyz_c1_bounds",
    "a_constant",
    "main_theorem_bound",
    "mycor_bound",
    "stabrmk_bounds",
    "sandwich_eta",
    "corollary_bound",
    "origin_bound_chain",
    "origin_chain_max_valid_K",
    "averaging_mean",
    "averaging_conjecture_scan",
]

# b = (4/pi) K(1/sqrt 2)^2
B_CONSTANT = 4.0 / math.pi * complete_K(1.0 / math.sqrt(2.0)) ** 2
# (4 + 6 log 2), the slope of the linear bound on log((1-a)/a) for K in [1, 17]
LINEAR_CONSTANT = 4.0 + 6.0 * math.log(2.0)
K_WINDOW_LINEAR = (1.0, 17.0)
MN_PARAMS_LINEAR = MNParams(3, 2)


def _check_K(K):
    if not K >= 1:
        raise DomainError(f"dilatation K must be >= 1, got K={K!r}")
    return float(K)


def krzyz_c1(K):
    """mu^{-1}(log((sqrt K + 1)/(sqrt K - 1))), the sharp bound for |f(0)| in the plane."""
    K = _check_K(K)
    if K == 1:
        return 0.0
    sk = math.sqrt(K)
    # (sqrt K + 1)/(sqrt K - 1) = (sqrt K + 1)^2/(K - 1), no cancellation near K = 1
    return mu_inv(math.log((sk + 1.0) ** 2 / (K - 1.0)))


def krzyz_c1_bounds(K):
    """Elementary bounds (K-1)/(K+1) < c1 < 2(K-1)/(sqrt K + 1)."""
    K = _check_K(K)
    return (K - 1.0) / (K + 1.0), 2.0 * (K - 1.0) / (math.sqrt(K) + 1.0)


def a_constant(K, n):
    """Enclosure of a = phi_{1/K,n}(1/sqrt 2)^2."""
    K = _check_K(K)
    n = _check_dim(n)
    if K == 1:
        return Enclosure.exact(0.5)
    if n == 2:
        _, v = phi_K_pair(K, 1.0 / math.sqrt(2.0))
        # phi_{1/K}(1/sqrt 2) is the complement of phi_K(1/sqrt 2)
        return Enclosure.exact(v * v)
    c, beta = phi_lower_coefficient(K, n)
    return Enclosure(c * c * 0.5 ** beta, 0.5, BOUND_ONLY)


def main_theorem_bound(K, n):
    """Enclosure of log((1-a)/a) = log eta_{K,n}(1), the bound on rho(f(x), x)."""
    K = _check_K(K)
    n = _check_dim(n)
    if K == 1:
        return Enclosure.exact(0.0)
    eta = eta_Kn(K, n, 1.0)
    if eta.is_exact:
        return Enclosure.exact(math.log(eta.value))
    return Enclosure(0.0, math.log(eta.upper), BOUND_ONLY)


@dataclass(frozen=True)
class DisplacementBound:
    """Upper bound for sup |f(x) - x| (euclidean) or rho(f(x), x) (hyperbolic)."""

    kind: str
    value: float
    rigor: str
    validity: tuple
    source: str
    candidates: dict = field(default_factory=dict)
    chain: float | None = None

    @property
    def applicable(self):
        return math.isfinite(self.value)


def mycor_bound(K, n):
    """Best proven linear bound for |f(x) - x|, f in Id_K(boundary of B^n).

    (9/2)(K - 1) holds for K in [1, 17] and every n; (b/2)(K - 1) holds for
    n = 2 and all K. The smaller applicable one is returned. ``chain`` is
    2 tanh(B/4) with B the upper end of ``main_theorem_bound``.
    """
    K = _check_K(K)
    n = _check_dim(n)
    if K == 1:
        return DisplacementBound("euclidean", 0.0, EXACT, (1.0, 1.0), "K=1",
                                 {"uniform": 0.0, "planar": 0.0} if n == 2 else {"uniform": 0.0}, 0.0)
    candidates = {}
    if K_WINDOW_LINEAR[0] <= K <= K_WINDOW_LINEAR[1]:
        candidates["uniform"] = 4.5 * (K - 1.0)
    if n == 2:
        candidates["planar"] = 0.5 * B_CONSTANT * (K - 1.0)
    chain = 2.0 * math.tanh(main_theorem_bound(K, n).upper / 4.0)
    if not candidates:
        return DisplacementBound("euclidean", math.inf, BOUND_ONLY, K_WINDOW_LINEAR,
                                 "not applicable: K > 17 for n >= 3", {}, chain)
    source = min(candidates, key=candidates.get)
    validity = K_WINDOW_LINEAR if source == "uniform" else (1.0, math.inf)
    return DisplacementBound("euclidean", candidates[source], BOUND_ONLY, validity,
                             source, candidates, chain)


def _lambda_candidates(n):
    lo, hi = grotzsch_constant_interval(n)
    return (lo,) if lo == hi else (lo, hi)


def stabrmk_bounds(K, n, M=None):
    """Evaluate each inequality of the log((1-a)/a) bound chain at (K, n).

    For n >= 3 the left side is only known from above; that upper value is
    what gets compared. lambda_n is unknown for n >= 3, so lambda-dependent
    right sides are evaluated at the upper end 2 e^{n-1} of its range (the
    right sides increase with lambda_n).
    """
    K = _check_K(K)
    n = _check_dim(n)
    reports = []
    lhs = main_theorem_bound(K, n).upper
    beta = K ** (1.0 / (n - 1))
    lam_hi = grotzsch_constant_interval(n)[1]
    phi_rhs = math.log(lam_hi ** (2.0 * (beta - 1.0)) * 2.0 ** beta - 1.0)
    reports.append(check("lambda-form", lhs, phi_rhs, K=K, n=n, lam=lam_hi))

    M = beta if M is None else float(M)
    for lam in _lambda_candidates(n):
        cid = "lambda-linearization"
        if not (M >= 1 and 1 <= beta <= M):
            reports.append(not_applicable(cid, f"beta={beta:.6g} outside [1, M={M:.6g}]", K=K, n=n, lam=lam))
            continue
        two_lam2 = 2.0 * lam * lam
        v = 2.0 * math.log(two_lam2) * two_lam2 ** (M - 1.0)
        left = math.log(lam ** (2.0 * (beta - 1.0)) * 2.0 ** beta - 1.0)
        reports.append(check(cid, left, v * (beta - 1.0), K=K, n=n, lam=lam, M=M))

    lo, hi = K_WINDOW_LINEAR
    if lo <= K <= hi:
        mn = p_func(MN_PARAMS_LINEAR, K)  # log(2^{3K-2} K^{2K} - 1)
        reports.append(check("linear-chain-a", lhs, mn, K=K, n=n))
        reports.append(check("linear-chain-mn", mn, LINEAR_CONSTANT * (K - 1.0), K=K, n=n))
        reports.append(check("linear-chain", lhs, LINEAR_CONSTANT * (K - 1.0), K=K, n=n))
        reports.append(check("linear-chain-nine", LINEAR_CONSTANT * (K - 1.0), 9.0 * (K - 1.0),
                             strict=K > 1, K=K, n=n))
    else:
        reports.append(not_applicable("linear-chain", "proven only for K in [1, 17]", K=K, n=n))
    if n == 2:
        reports.append(check("b-bound", lhs, B_CONSTANT * (K - 1.0), K=K, n=n))
    return reports


class FxBounds(NamedTuple):
    """Bounds on |f(x)|; each side is an Enclosure of the bound's own value."""

    lower: Enclosure
    upper: Enclosure


def sandwich_eta(K, n, x_norm, m=1.0, M=1.0):
    """Range of |f(x)| for a K-qc f with f(inf) = inf and B^n(m) in f(B^n) in B^n(M).

    Solves eta_{1/K,n}(T) <= (M + |f|)/(m - |f|) and
    (m + |f|)/(M - |f|) <= eta_{K,n}(T), T = (1 + |x|)/(1 - |x|), for |f|.
    Both solved expressions increase with the eta value, so the outer ends of
    the eta enclosures give certified bounds; eta_{1/K} <= T <= eta_K bounds
    the inner ends.
    """
    K = _check_K(K)
    n = _check_dim(n)
    if m > M:
        raise UsageError(f"need m <= M, got m={m!r}, M={M!r}")
    if not (0 < m <= 1 <= M):
        raise DomainError(f"need 0 < m <= 1 <= M, got m={m!r}, M={M!r}")
    if not 0 <= x_norm < 1:
        raise DomainError(f"need 0 <= |x| < 1, got {x_norm!r}")
    T = (1.0 + x_norm) / (1.0 - x_norm)
    eta_up = eta_Kn(K, n, T)
    eta_down = eta_Kn(1.0 / K, n, T)

    def solve_upper(e):
        return (e * M - m) / (1.0 + e)

    def solve_lower(e):
        return max(0.0, (e * m - M) / (1.0 + e))

    if eta_up.is_exact and eta_down.is_exact:
        return FxBounds(Enclosure.exact(solve_lower(eta_down.value)),
                        Enclosure.exact(solve_upper(eta_up.value)))
    lower = Enclosure(solve_lower(eta_down.lower), solve_lower(max(eta_down.lower, T)), BOUND_ONLY)
    upper = Enclosure(min(solve_upper(T), solve_upper(eta_up.upper)), solve_upper(eta_up.upper), BOUND_ONLY)
    return FxBounds(lower, upper)


def corollary_bound(K, x_norm):
    """Plane bound |f(x)| <= 2 phi_K(sqrt((1 + |x|)/2))^2 - 1."""
    K = _check_K(K)
    if not 0 <= x_norm < 1:
        raise DomainError(f"need 0 <= |x| < 1, got {x_norm!r}")
    if K == 1:
        return float(x_norm)
    w = phi_K(K, math.sqrt(0.5 * (1.0 + x_norm)))
    return 2.0 * w * w - 1.0


def origin_bound_chain(K, n=2):
    """Check |f(0)| <= 1 - 2a <= 1 - 2^{1-beta} 4^{1-K} K^{-2K} (<= (2 + 3 log 2)(K - 1) for n = 2)."""
    K = _check_K(K)
    n = _check_dim(n)
    beta = K ** (1.0 / (n - 1))
    bound = 1.0 - 2.0 * a_constant(K, n).lower
    middle = 1.0 - 2.0 ** (1.0 - beta) * 4.0 ** (1.0 - K) * K ** (-2.0 * K)
    reports = [check("f0-a-chain", bound, middle, K=K, n=n)]
    if n == 2:
        right = (2.0 + 3.0 * math.log(2.0)) * (K - 1.0)
        reports.append(check("f0-linear", middle, right, K=K, n=n))
    return reports


def origin_chain_max_valid_K(K_max=20.0, count=2001):
    """Largest grid K in (1, K_max] up to which 1 - 2^{3(1-K)} K^{-2K} <= (2 + 3 log 2)(K - 1)."""
    c = 2.0 + 3.0 * math.log(2.0)
    last = 1.0
    for i in range(1, count + 1):
        K = 1.0 + (K_max - 1.0) * i / count
        if 1.0 - 2.0 ** (3.0 * (1.0 - K)) * K ** (-2.0 * K) > c * (K - 1.0) + 1e-15:
            break
        last = K
    return last


def averaging_mean(r, s):
    return math.sqrt(0.5 * (r + s))


def averaging_conjecture_scan(K_grid, t_grid, r_grid):
    """Margins of A(phi_K(t), phi_K(r)) <= phi_K(A(t, r)), A(r, s) = sqrt((r + s)/2).

    The slice t = 1 is proven and is asserted (it is always included); all
    other points are recorded only.
    """
    reports = []
    ts = [1.0] + [float(t) for t in t_grid if t != 1.0]
    for K in K_grid:
        K = _check_K(K)
        for t in ts:
            if not 0 < t <= 1:
                raise DomainError(f"t must lie in (0, 1], got {t!r}")
            for r in r_grid:
                if not 0 < r < 1:
                    raise DomainError(f"r must lie in (0, 1), got {r!r}")
                lhs = averaging_mean(phi_K(K, t), phi_K(K, r))
                rhs = phi_K(K, averaging_mean(t, r))
                if t == 1.0:
                    reports.append(check("schwarz-comparison", lhs, rhs, K=K, t=t, r=float(r)))
                else:
                    reports.append(record("averaging-conjecture", lhs, rhs, K=K, t=t, r=float(r)))
    return reports
