"""The plane Groetzsch modulus mu(r), its inverse and the distortion phi_K.

    mu(r) = (pi/2) K(r') / K(r),     phi_K(r) = mu^{-1}(mu(r) / K)

mu is a decreasing homeomorphism of (0, 1) onto (0, inf) with
mu(r) mu(r') = (pi/2)^2, which lets ``mu_inv`` always solve for whichever
of r and r' is the smaller one.
"""

import math

from .elliptic import EPS, _K_of_complement, complement
from .errors import DomainError

__all__ = ["mu", "mu_from_pair", "mu_inv", "mu_inv_pair", "dmu_dr", "phi_K", "phi_K_pair"]

HALF_PI = 0.5 * math.pi
MU_SYMMETRIC = HALF_PI  # mu(1/sqrt(2))
# for y above this, mu^{-1}(y) = 4 e^{-y} to full double precision
ASYMPTOTIC_Y = 35.0
BRACKET_EPS = 1e-15
MAX_ITER = 200


def _check_r(r, name="r"):
    if not 0 < r < 1:
        raise DomainError(f"{name} must lie in (0, 1), got {r!r}")


def mu_from_pair(r, rp):
    """mu evaluated from r and r' = sqrt(1 - r^2) given separately.

    Needed when r has rounded to 1 but r' still carries the information.
    """
    return HALF_PI * _K_of_complement(r) / _K_of_complement(rp)


def mu(r):
    """Modulus of the plane Groetzsch ring, mu(r) = (pi/2) K(r')/K(r)."""
    _check_r(r)
    return mu_from_pair(float(r), complement(r))


def dmu_dr(r):
    """Derivative mu'(r) = -pi^2 / (4 r r'^2 K(r)^2)."""
    _check_r(r)
    rp = complement(r)
    k = _K_of_complement(rp)
    return -(math.pi ** 2) / (4.0 * r * rp * rp * k * k)


def _solve_small(y):
    """Return s in (0, 1/sqrt(2)] with mu(s) = y, for y >= pi/2."""
    if y > ASYMPTOTIC_Y:
        return 4.0 * math.exp(-y)
    lo, hi = BRACKET_EPS, 1.0 / math.sqrt(2.0)
    # 4e^{-y} is an upper bound for mu^{-1}(y) and already very close for large y
    x = min(4.0 * math.exp(-y), hi)
    for _ in range(MAX_ITER):
        g = mu(x) - y
        if g == 0.0:
            return x
        # mu decreasing: g > 0 means the root lies to the right
        if g > 0:
            lo = x
        else:
            hi = x
        step = g / dmu_dr(x)
        nxt = x - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= 4 * EPS * x or hi - lo <= 4 * EPS * hi:
            return nxt
        x = nxt
    return x


def mu_inv_pair(y):
    """Return (r, r') with mu(r) = y, both computed without cancellation."""
    if not y > 0:
        raise DomainError(f"mu_inv requires y > 0, got y={y!r}")
    y = float(y)
    if y >= MU_SYMMETRIC:
        s = _solve_small(y)
        return s, complement(s)
    # mu(r') = (pi/2)^2 / mu(r): solve for the small complementary modulus
    sp = _solve_small(HALF_PI * HALF_PI / y)
    return complement(sp), sp


def mu_inv(y):
    """Inverse of mu on (0, inf)."""
    return mu_inv_pair(y)[0]


def phi_K(K, r):
    """Hersch-Pfluger distortion function phi_K(r) = mu^{-1}(mu(r)/K), K > 0.

    phi_K(0) = 0 and phi_K(1) = 1 by continuity.
    """
    if not K > 0:
        raise DomainError(f"phi_K requires K > 0, got K={K!r}")
    if not 0 <= r <= 1:
        raise DomainError(f"phi_K requires 0 <= r <= 1, got r={r!r}")
    if r == 0 or r == 1 or K == 1:
        return float(r)
    return mu_inv(mu(r) / K)


def phi_K_pair(K, r, rp=None):
    """(phi_K(r), sqrt(1 - phi_K(r)^2)) with the complement kept accurate.

    Passing ``rp`` (the complement of ``r``) lets compositions such as
    phi_{1/K}(phi_K(r)) run without rounding the intermediate value to 1.
    """
    if not K > 0:
        raise DomainError(f"phi_K requires K > 0, got K={K!r}")
    if rp is None:
        _check_r(r)
        rp = complement(r)
    elif not (0 < r <= 1 and 0 < rp <= 1):
        raise DomainError(f"need r, r' in (0, 1], got r={r!r}, r'={rp!r}")
    if K == 1:
        return float(r), float(rp)
    return mu_inv_pair(mu_from_pair(r, rp) / K)
