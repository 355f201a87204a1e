"""Fixed-point construction for the inequality

    p(x) = log(2^(m x - m + 1) x^(n x) - 1)  <=  q(x) = (2 m log 2 + 2 n)(x - 1).

p and q are tangent at x = 1. The inequality holds on [1, M] with M given in
closed form, and the iteration a_0 = M, a_{k+1} = p^{-1}(q(a_k)) increases to
the point a > 1 where p and q cross again. For (m, n) = (3, 2) this is what
extends (4 + 6 log 2)(K - 1) bounds up to K = 17.
"""

import math
from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [
    "MNParams",
    "IterationTrace",
    "compute_M",
    "quadratic_residual",
    "u_func",
    "p_func",
    "dp_func",
    "q_func",
    "p_inverse",
    "upper_cap",
    "iterate_a",
    "concavity_f",
    "concavity_g",
]

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class MNParams:
    m: float
    n: float

    def __post_init__(self):
        if not (self.m >= 1 and self.n >= 1):
            raise DomainError(f"need m, n >= 1, got m={self.m!r}, n={self.n!r}")


@dataclass
class IterationTrace:
    params: MNParams
    sequence: list = field(default_factory=list)
    converged: bool = False

    @property
    def limit_estimate(self):
        return self.sequence[-1]

    @property
    def upper_cap(self):
        return upper_cap(self.params)

    def __getitem__(self, k):
        return self.sequence[k]

    def __len__(self):
        return len(self.sequence)


def _params(params):
    if isinstance(params, MNParams):
        return params
    return MNParams(*params)


def _rhs_constant(m, n):
    return math.log(1.0 + (n + m * LOG2) ** 2 / n)


def compute_M(params):
    """Larger root of (m x - m + 1) log 2 + n x (x - 1) = log(1 + (n + m log 2)^2 / n)."""
    p = _params(params)
    m, n = p.m, p.n
    t = (m * LOG2 - n) / (2.0 * n)
    return math.sqrt(((m - 1.0) * LOG2 + _rhs_constant(m, n)) / n + t * t) - t


def quadratic_residual(params, x):
    p = _params(params)
    m, n = p.m, p.n
    return (m * x - m + 1.0) * LOG2 + n * x * (x - 1.0) - _rhs_constant(m, n)


def u_func(params, x):
    p = _params(params)
    return (p.m * x - p.m + 1.0) * LOG2 + p.n * x * math.log(x)


def _check_x(x):
    if not x >= 1:
        raise DomainError(f"p and q are defined for x >= 1, got x={x!r}")


def p_func(params, x):
    _check_x(x)
    u = u_func(params, x)
    # log(e^u - 1) without forming e^u
    return u + math.log(-math.expm1(-u))


def dp_func(params, x):
    _check_x(x)
    p = _params(params)
    u = u_func(p, x)
    du = p.n + p.m * LOG2 + p.n * math.log(x)
    return -du / math.expm1(-u)


def q_func(params, x):
    _check_x(x)
    p = _params(params)
    return (2.0 * p.m * LOG2 + 2.0 * p.n) * (x - 1.0)


def upper_cap(params):
    """2^(2m/n) e^2: p exceeds q there, so the crossing point lies below it."""
    p = _params(params)
    return 2.0 ** (2.0 * p.m / p.n) * math.e ** 2


def p_inverse(params, y, tol=1e-15, max_iter=200):
    """Solve p(x) = y on [1, inf) by safeguarded Newton iteration."""
    p = _params(params)
    if not y >= 0:
        raise DomainError(f"p_inverse requires y >= 0, got y={y!r}")
    if y == 0:
        return 1.0
    lo, hi = 1.0, upper_cap(p) + 1.0
    while p_func(p, hi) < y:
        lo, hi = hi, 2.0 * hi
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        g = p_func(p, x) - y
        if g == 0:
            return x
        if g < 0:
            lo = x
        else:
            hi = x
        nxt = x - g / dp_func(p, x)
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= tol * x:
            return nxt
        x = nxt
    return x


def iterate_a(params, max_steps=10_000, tol=1e-13):
    """Run a_0 = M, a_{k+1} = p^{-1}(q(a_k)) until the step drops below ``tol``.

    Iteration also stops as soon as a step fails to increase the sequence, so
    the returned sequence is strictly increasing. Non-convergence is reported
    through ``converged`` rather than raised.
    """
    p = _params(params)
    if max_steps < 1 or not tol > 0:
        raise DomainError("need max_steps >= 1 and tol > 0")
    trace = IterationTrace(p, [compute_M(p)])
    a = trace.sequence[0]
    for _ in range(max_steps):
        nxt = p_inverse(p, q_func(p, a))
        if not nxt > a:
            trace.converged = True
            break
        trace.sequence.append(nxt)
        if nxt - a < tol:
            trace.converged = True
            break
        a = nxt
    return trace


def concavity_f(params, x):
    p = _params(params)
    return 2.0 ** (p.m * x - p.m + 1.0) * x ** (p.n * x) - 1.0


def concavity_g(params, x):
    p = _params(params)
    return (x / p.n) * (p.n + p.m * LOG2 + p.n * math.log(x)) ** 2
