"""Groetzsch and Teichmueller ring capacities and the functions built on them.

For n = 2 everything reduces to mu and is computed exactly. For n >= 3 no
closed form is available and every quantity is returned as an ``Enclosure``
tagged ``bound-only``; only the sides that follow from proven inequalities
are finite.

The lower bound for phi_{1/K,n} used throughout is

    phi_{1/K,n}(r) >= C r^beta,  beta = K^{1/(n-1)},
    C = max(LAMBDA_UPPER(n)^{1-beta}, 2^{1-beta} K^{-beta})

where LAMBDA_UPPER(n) = 2 e^{n-1} bounds the Groetzsch ring constant from
above. Since 1 - beta <= 0, the upper end of the lambda_n interval is the one
that gives a valid lower bound.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .grotzsch import mu_from_pair, mu, mu_inv_pair, phi_K

__all__ = [
    "EXACT",
    "BOUND_ONLY",
    "Enclosure",
    "grotzsch_constant_interval",
    "gamma_2",
    "tau_n",
    "tau_2_inverse",
    "phi_lower_coefficient",
    "phi_Kn",
    "eta_Kn",
    "eta_K2",
    "lambda_K",
]

EXACT = "exact"
BOUND_ONLY = "bound-only"
LAMBDA_2 = 4.0


@dataclass(frozen=True)
class Enclosure:
    """Certified interval [lower, upper] for a quantity."""

    lower: float
    upper: float
    rigor: str = BOUND_ONLY

    def __post_init__(self):
        if self.rigor not in (EXACT, BOUND_ONLY):
            raise ValueError(f"unknown rigor tag {self.rigor!r}")
        if not self.lower <= self.upper:
            raise ValueError(f"empty enclosure [{self.lower}, {self.upper}]")
        if self.rigor == EXACT and self.upper - self.lower > 1e-10 * max(1.0, abs(self.lower)):
            raise ValueError("exact enclosure is wider than rounding error")

    @classmethod
    def exact(cls, value):
        value = float(value)
        return cls(value, value, EXACT)

    @property
    def is_exact(self):
        return self.rigor == EXACT

    @property
    def value(self):
        """Point value; only defined for exact enclosures."""
        if not self.is_exact:
            raise ValueError("bound-only enclosure has no point value")
        return 0.5 * (self.lower + self.upper)

    def map_increasing(self, f):
        return Enclosure(f(self.lower), f(self.upper), self.rigor)

    def __contains__(self, x):
        return self.lower <= x <= self.upper

    def __str__(self):
        if self.is_exact:
            return f"{self.value:.12g}"
        return f"{self.lower:.12g}..{self.upper:.12g} [{self.rigor}]"


def _check_dim(n):
    if int(n) != n or n < 2:
        raise DomainError(f"dimension must be an integer n >= 2, got n={n!r}")
    return int(n)


def grotzsch_constant_interval(n):
    """Known range of the Groetzsch ring constant: 4 <= lambda_n < 2 e^{n-1}."""
    n = _check_dim(n)
    if n == 2:
        return LAMBDA_2, LAMBDA_2
    return LAMBDA_2, 2.0 * math.exp(n - 1)


def _sphere_area(n):
    # omega_{n-1}, surface area of the unit sphere in R^n
    return 2.0 * math.pi ** (0.5 * n) / math.gamma(0.5 * n)


def gamma_2(s):
    """Capacity of the plane Groetzsch ring, gamma_2(s) = 2 pi / mu(1/s)."""
    if not s > 1:
        raise DomainError(f"gamma_2 requires s > 1, got s={s!r}")
    return 2.0 * math.pi / mu(1.0 / s)


def _gamma_n_enclosure(n, s):
    # omega (log(lambda_n s))^{1-n} <= gamma_n(s) <= omega (log s)^{1-n}
    lam_hi = grotzsch_constant_interval(n)[1]
    w = _sphere_area(n)
    lower = w * math.log(lam_hi * s) ** (1 - n)
    upper = w * math.log(s) ** (1 - n) if s > 1 else math.inf
    return lower, upper


def tau_n(n, t):
    """Teichmueller capacity tau_n(t) = 2^{1-n} gamma_n(sqrt(1+t))."""
    n = _check_dim(n)
    if not t > 0:
        raise DomainError(f"tau_n requires t > 0, got t={t!r}")
    s = math.sqrt(1.0 + t)
    if n == 2:
        # gamma_2(sqrt(1+t)) / 2 = pi / mu(1/sqrt(1+t))
        return Enclosure.exact(math.pi / mu(1.0 / s))
    lower, upper = _gamma_n_enclosure(n, s)
    c = 2.0 ** (1 - n)
    return Enclosure(c * lower, c * upper, BOUND_ONLY)


def tau_2_inverse(c, lo=1e-8, hi=1e8, tol=1e-14):
    """Solve tau_2(t) = c for t by bisection in log t."""
    f_lo = tau_n(2, lo).value
    f_hi = tau_n(2, hi).value
    if not f_hi <= c <= f_lo:
        raise DomainError(f"tau_2^{{-1}}: {c!r} outside [{f_hi}, {f_lo}]")
    a, b = math.log(lo), math.log(hi)
    while b - a > tol:
        m = 0.5 * (a + b)
        # tau_2 is decreasing
        if tau_n(2, math.exp(m)).value > c:
            a = m
        else:
            b = m
    return math.exp(0.5 * (a + b))


def phi_lower_coefficient(K, n):
    """(C, beta) with phi_{1/K,n}(r) >= C r^beta for K >= 1."""
    n = _check_dim(n)
    if not K >= 1:
        raise DomainError(f"need K >= 1, got K={K!r}")
    beta = K ** (1.0 / (n - 1))
    lam_hi = grotzsch_constant_interval(n)[1]
    lam_form = lam_hi ** (1.0 - beta)
    chain_form = 2.0 ** (1.0 - beta) * K ** (-beta)
    return max(lam_form, chain_form), beta


def phi_Kn(K, n, r):
    """phi_{K,n}(r) for K > 0 as an Enclosure.

    n = 2 gives phi_K exactly. For n >= 3 and K < 1 (the phi_{1/K,n} case)
    the lower side is C r^beta and the upper side r; for K > 1 inverting
    that bound gives r <= phi_{K,n}(r) <= (r/C)^{1/beta}.
    """
    n = _check_dim(n)
    if not K > 0:
        raise DomainError(f"phi_Kn requires K > 0, got K={K!r}")
    if not 0 < r < 1:
        raise DomainError(f"phi_Kn requires r in (0, 1), got r={r!r}")
    if K == 1:
        return Enclosure.exact(r)
    if n == 2:
        return Enclosure.exact(phi_K(K, r))
    if K < 1:
        c, beta = phi_lower_coefficient(1.0 / K, n)
        return Enclosure(min(r, c * r ** beta), r, BOUND_ONLY)
    c, beta = phi_lower_coefficient(K, n)
    return Enclosure(r, min(1.0, (r / c) ** (1.0 / beta)), BOUND_ONLY)


def eta_K2(K, t):
    """eta_{K,2}(t) = u^2 / v^2, u = phi_K(sqrt(t/(1+t))), v = phi_{1/K}(1/sqrt(1+t)).

    u^2/v^2 equals s^2/(1-s^2) with s = u; the ratio form avoids the
    cancellation in 1 - s^2 when s is close to 1.
    """
    if not K > 0:
        raise DomainError(f"eta requires K > 0, got K={K!r}")
    if not t > 0:
        raise DomainError(f"eta requires t > 0, got t={t!r}")
    if K == 1:
        return float(t)
    r = math.sqrt(t / (1.0 + t))
    rp = 1.0 / math.sqrt(1.0 + t)
    # v = phi_{1/K}(r') is the complement of u, so one inversion gives both
    u, v = mu_inv_pair(mu_from_pair(r, rp) / K)
    return (u / v) ** 2


def eta_Kn(K, n, t):
    """eta_{K,n}(t) = tau_n^{-1}(tau_n(t)/K) as an Enclosure.

    n >= 3, K >= 1: t <= eta <= (1+t)^beta / C^2 - 1.
    n >= 3, K < 1: the inverse function, so
    max(0, (C^2 (1+t))^{1/beta} - 1) <= eta <= t with (C, beta) taken at 1/K.
    """
    n = _check_dim(n)
    if not K > 0:
        raise DomainError(f"eta_Kn requires K > 0, got K={K!r}")
    if not t > 0:
        raise DomainError(f"eta_Kn requires t > 0, got t={t!r}")
    if K == 1:
        return Enclosure.exact(t)
    if n == 2:
        return Enclosure.exact(eta_K2(K, t))
    if K > 1:
        c, beta = phi_lower_coefficient(K, n)
        # a = phi_{1/K,n}(1/sqrt(1+t))^2 >= C^2 (1+t)^{-beta}
        upper = (1.0 + t) ** beta / (c * c) - 1.0
        return Enclosure(float(t), max(float(t), upper), BOUND_ONLY)
    c, beta = phi_lower_coefficient(1.0 / K, n)
    lower = (c * c * (1.0 + t)) ** (1.0 / beta) - 1.0
    return Enclosure(min(float(t), max(0.0, lower)), float(t), BOUND_ONLY)


def lambda_K(K):
    """lambda(K) = eta_{K,2}(1)."""
    return eta_K2(K, 1.0)
