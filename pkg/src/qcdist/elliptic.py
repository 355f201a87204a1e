"""Complete elliptic integrals of the first and second kind.

Both are evaluated with the arithmetic-geometric mean. The functions take the
modulus ``r`` (not the parameter ``m = r**2``). ``quadrature_K`` and
``quadrature_E`` integrate the defining integrals directly and exist only to
cross-check the AGM route.
"""

import math

from scipy import integrate

from .errors import DomainError

__all__ = [
    "agm",
    "complement",
    "complete_K",
    "complete_E",
    "quadrature_K",
    "quadrature_E",
]

EPS = 2.220446049250313e-16
AGM_MAX_ITER = 64
# below this complementary modulus K(r) is replaced by log(4/r')
ASYMPTOTIC_RP = 1e-10


def agm(a, b):
    """Arithmetic-geometric mean of two positive numbers."""
    if not (a > 0 and b > 0):
        raise DomainError(f"agm requires a > 0 and b > 0, got a={a!r}, b={b!r}")
    a, b = float(a), float(b)
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= 4 * EPS * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complement(r):
    """Return r' = sqrt(1 - r^2), factored to keep accuracy near r = 1."""
    if not 0 <= r <= 1:
        raise DomainError(f"complementary modulus needs 0 <= r <= 1, got r={r!r}")
    return math.sqrt((1.0 - r) * (1.0 + r))


def _K_of_complement(rp):
    # K as a function of r' so that callers holding r' never round through r
    if rp < ASYMPTOTIC_RP:
        return math.log(4.0 / rp)
    return math.pi / (2.0 * agm(1.0, rp))


def complete_K(r):
    """Complete elliptic integral of the first kind, K(r), for 0 <= r < 1."""
    if not 0 <= r < 1:
        raise DomainError(f"complete_K requires 0 <= r < 1, got r={r!r}")
    return _K_of_complement(complement(r))


def _E_of_complement(rp, r):
    if rp == 0.0:
        return 1.0
    if rp < ASYMPTOTIC_RP:
        # E(r) = 1 + (r'^2/2)(log(4/r') - 1/2) + O(r'^4 log r')
        return 1.0 + 0.5 * rp * rp * (math.log(4.0 / rp) - 0.5)
    a, b = 1.0, rp
    c = r
    power = 0.5
    total = power * c * c
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= 4 * EPS * a:
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        power *= 2.0
        total += power * c * c
    return math.pi / (2.0 * a) * (1.0 - total)


def complete_E(r):
    """Complete elliptic integral of the second kind, E(r), for 0 <= r <= 1."""
    if not 0 <= r <= 1:
        raise DomainError(f"complete_E requires 0 <= r <= 1, got r={r!r}")
    return _E_of_complement(complement(r), float(r))


def quadrature_K(r):
    """K(r) by adaptive quadrature of the defining integral.

    The substitution x = sin(theta) turns the endpoint singularity of
    1/sqrt((1-x^2)(1-r^2 x^2)) into the smooth integrand
    1/sqrt(1 - r^2 sin^2 theta) on [0, pi/2].
    """
    if not 0 <= r < 1:
        raise DomainError(f"quadrature_K requires 0 <= r < 1, got r={r!r}")
    r2 = float(r) ** 2
    value, _ = integrate.quad(
        lambda th: 1.0 / math.sqrt(1.0 - r2 * math.sin(th) ** 2),
        0.0, 0.5 * math.pi, epsabs=0.0, epsrel=1e-13, limit=200,
    )
    return value


def quadrature_E(r):
    """E(r) by adaptive quadrature of sqrt(1 - r^2 sin^2 theta)."""
    if not 0 <= r <= 1:
        raise DomainError(f"quadrature_E requires 0 <= r <= 1, got r={r!r}")
    r2 = float(r) ** 2
    value, _ = integrate.quad(
        lambda th: math.sqrt(max(0.0, 1.0 - r2 * math.sin(th) ** 2)),
        0.0, 0.5 * math.pi, epsabs=0.0, epsrel=1e-13, limit=200,
    )
    return value
