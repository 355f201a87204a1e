"""Hyperbolic geometry of the unit ball B^n and the radial stretching maps."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UsageError

__all__ = [
    "as_ball_point",
    "hyperbolic_distance",
    "chord_bound",
    "MobiusMap",
    "mobius_to_origin",
    "RadialStretching",
    "radial_stretch_apply",
    "radial_stretch_delta",
]


def as_ball_point(x):
    """Validate ``x`` as a point of B^n, n >= 2, and return it as a float array."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise UsageError(f"ball points are vectors of length n >= 2, got shape {x.shape}")
    if not np.dot(x, x) < 1.0:
        raise DomainError(f"point {x.tolist()} is not inside the unit ball")
    return x


def _pair(x, y):
    x, y = as_ball_point(x), as_ball_point(y)
    if x.shape != y.shape:
        raise UsageError(f"dimension mismatch: {x.size} vs {y.size}")
    return x, y


def _distance_data(x, y):
    # |x - y| and t = sqrt((1-|x|^2)(1-|y|^2))
    d = float(np.linalg.norm(x - y))
    t = math.sqrt((1.0 - float(np.dot(x, x))) * (1.0 - float(np.dot(y, y))))
    return d, t


def hyperbolic_distance(x, y):
    """Hyperbolic distance rho(x, y) in B^n.

    From tanh^2(rho/2) = d^2/(d^2 + t^2) one gets sinh(rho/2) = d/t, which
    stays accurate both for nearby points and near the boundary.
    """
    x, y = _pair(x, y)
    d, t = _distance_data(x, y)
    return 2.0 * math.asinh(d / t)


def chord_bound(x, y):
    """Return (|x - y|, 2 tanh(rho(x, y)/4)); the first never exceeds the second."""
    x, y = _pair(x, y)
    d, t = _distance_data(x, y)
    return d, 2.0 * math.tanh(0.5 * math.asinh(d / t))


@dataclass(frozen=True)
class MobiusMap:
    """Automorphism of B^n sending ``center`` to the origin.

        T_a(x) = ((1 - |a|^2)(x - a) - |x - a|^2 a) / (1 - 2<x, a> + |x|^2 |a|^2)
    """

    center: np.ndarray

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        a = self.center
        aa = float(np.dot(a, a))
        xa = x - a
        num = (1.0 - aa) * xa - float(np.dot(xa, xa)) * a
        den = 1.0 - 2.0 * float(np.dot(x, a)) + float(np.dot(x, x)) * aa
        return num / den

    def inverse(self):
        return MobiusMap(-self.center)


def mobius_to_origin(x):
    """Moebius self-map T of B^n with T(x) = 0."""
    return MobiusMap(as_ball_point(x).copy())


@dataclass(frozen=True)
class RadialStretching:
    """The map z -> |z|^(alpha-1) z on B^n, identity outside B^n.

    It is K-quasiconformal with K = alpha^(1-n).
    """

    n: int
    alpha: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"dimension must be an integer >= 2, got {self.n!r}")
        if not 0 < self.alpha <= 1:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha!r}")

    @classmethod
    def from_dilatation(cls, K, n):
        if not K >= 1:
            raise DomainError(f"K must be >= 1, got {K!r}")
        return cls(n, K ** (1.0 / (1 - n)))

    @property
    def K(self):
        return self.alpha ** (1 - self.n)

    def __call__(self, z):
        return radial_stretch_apply(self, z)

    @property
    def delta(self):
        return radial_stretch_delta(self)

    @property
    def argmax_radius(self):
        """Radius where |f(z) - z| = r^alpha - r is largest."""
        if self.alpha == 1:
            return 0.0
        return (1.0 / self.alpha) ** (1.0 / (self.alpha - 1.0))


def radial_stretch_apply(f, z):
    z = np.asarray(z, dtype=float)
    if z.shape != (f.n,):
        raise UsageError(f"expected a point of R^{f.n}, got shape {z.shape}")
    r = float(np.linalg.norm(z))
    if r >= 1.0 or r == 0.0 or f.alpha == 1:
        return z.copy()
    return r ** (f.alpha - 1.0) * z


def radial_stretch_delta(f):
    """sup |f(z) - z| over B^n, equal to (1 - alpha) alpha^(alpha/(1 - alpha))."""
    a = f.alpha
    if a == 1:
        return 0.0
    return (1.0 - a) * a ** (a / (1.0 - a))
