"""Command-line front end.

    qcdist eval mu 0.70710678
    qcdist eval eta 2 2 1
    qcdist verify --suite mn-lemma
    qcdist table c1 --K 1.01:5:50 --format csv
    qcdist table mn-lemma --m 3 --n 2
    qcdist mn-lemma
    qcdist scan-conjecture --K 1:3:5 --t 0.1:0.9:9 --r 0.05:0.95:19

Exit codes: 0 success / all checks pass, 1 an asserted check failed,
2 usage or domain error. ``QCDIST_THREADS`` sets the worker count for grid
sweeps; output order never depends on it.
"""

import functools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import click
import numpy as np

from . import ball, bounds, checks, elliptic, grotzsch, mn_lemma, rings
from .errors import DomainError, UsageError
from .rings import Enclosure

__all__ = ["cli", "main", "GridSpec", "parse_grid", "REGISTRY"]


@dataclass(frozen=True)
class GridSpec:
    name: str
    start: float
    stop: float
    count: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.count < 2:
            raise UsageError(f"--{self.name}: grid needs count >= 2, got {self.count}")
        if not self.start < self.stop:
            raise UsageError(f"--{self.name}: grid needs start < stop, got {self.start}:{self.stop}")
        if self.spacing not in ("linear", "log"):
            raise UsageError(f"unknown spacing {self.spacing!r}")
        if self.spacing == "log" and self.start <= 0:
            raise UsageError(f"--{self.name}: log grid needs start > 0")

    def points(self):
        if self.spacing == "log":
            return checks.log_grid(self.start, self.stop, self.count)
        return checks.linear_grid(self.start, self.stop, self.count)


def parse_grid(name, text, spacing="linear"):
    """Parse ``start:stop:count``; a bare number gives a one-point list."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) != 3:
            raise ValueError
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"--{name}: expected start:stop:count or a number, got {text!r}") from None
    return GridSpec(name, start, stop, count, spacing).points()


def _threads():
    try:
        return max(1, int(os.environ.get("QCDIST_THREADS", "1")))
    except ValueError:
        return 1


def ordered_map(fn, items):
    """Map over a grid, possibly in worker threads, preserving grid order."""
    items = list(items)
    workers = _threads()
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (DomainError, UsageError) as exc:
            kind = "domain error" if isinstance(exc, DomainError) else "usage error"
            click.echo(f"{kind}: {exc}", err=True)
            sys.exit(2)
    return wrapper


def fmt(value):
    if isinstance(value, Enclosure):
        return str(value)
    if isinstance(value, bounds.DisplacementBound):
        if not value.applicable:
            return value.source
        return f"{value.value:.12g} [{value.source}, K in [{value.validity[0]:g}, {value.validity[1]:g}]]"
    if isinstance(value, (tuple, list)):
        return " ".join(fmt(v) for v in value)
    if isinstance(value, np.ndarray):
        return " ".join(f"{v:.12g}" for v in value)
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _vector(text):
    try:
        return np.array([float(v) for v in text.split(",")])
    except ValueError:
        raise UsageError(f"expected a comma-separated vector, got {text!r}") from None


def _int(text):
    try:
        v = float(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None
    if v != int(v):
        raise UsageError(f"expected an integer, got {text!r}")
    return int(v)


def _float(text):
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"expected a number, got {text!r}") from None


# name -> (function, argument parsers, argument names)
REGISTRY = {
    "agm": (elliptic.agm, (_float, _float), "a b"),
    "K": (elliptic.complete_K, (_float,), "r"),
    "E": (elliptic.complete_E, (_float,), "r"),
    "mu": (grotzsch.mu, (_float,), "r"),
    "mu_inv": (grotzsch.mu_inv, (_float,), "y"),
    "phi_K": (grotzsch.phi_K, (_float, _float), "K r"),
    "gamma_2": (rings.gamma_2, (_float,), "s"),
    "tau_n": (rings.tau_n, (_int, _float), "n t"),
    "phi_Kn": (rings.phi_Kn, (_float, _int, _float), "K n r"),
    "eta": (rings.eta_Kn, (_float, _int, _float), "K n t"),
    "lambda": (rings.lambda_K, (_float,), "K"),
    "c1": (bounds.krzyz_c1, (_float,), "K"),
    "main_bound": (bounds.main_theorem_bound, (_float, _int), "K n"),
    "mycor": (bounds.mycor_bound, (_float, _int), "K n"),
    "corollary": (bounds.corollary_bound, (_float, _float), "K |x|"),
    "delta": (lambda a: ball.radial_stretch_delta(ball.RadialStretching(2, a)), (_float,), "alpha"),
    "rho": (ball.hyperbolic_distance, (_vector, _vector), "x1,x2,.. y1,y2,.."),
    "M": (lambda m, n: mn_lemma.compute_M((m, n)), (_float, _float), "m n"),
    "p_inv": (lambda m, n, y: mn_lemma.p_inverse((m, n), y), (_float, _float, _float), "m n y"),
}
REGISTRY["eta_Kn"] = REGISTRY["eta"]


@click.group()
def cli():
    """Special functions and distortion bounds for quasiconformal maps of the unit ball."""


@cli.command("eval")
@click.argument("function_name")
@click.argument("args", nargs=-1)
@handle_errors
def cmd_eval(function_name, args):
    """Evaluate FUNCTION_NAME at ARGS and print the value (12 significant digits)."""
    if function_name not in REGISTRY:
        listing = "\n".join(f"  {k} {v[2]}" for k, v in REGISTRY.items())
        raise UsageError(f"unknown function {function_name!r}; available:\n{listing}")
    fn, parsers, names = REGISTRY[function_name]
    if len(args) != len(parsers):
        raise UsageError(f"{function_name} takes arguments: {names}")
    values = [p(a) for p, a in zip(parsers, args)]
    click.echo(fmt(fn(*values)))


@cli.command("verify")
@click.option("--suite", "suites", multiple=True, type=click.Choice(list(checks.SUITES)),
              help="Suite to run (repeatable); default all.")
@click.option("--points", default=50, show_default=True, help="Grid size scale.")
@click.option("--seed", default=0, show_default=True, help="Seed for random samples.")
@click.option("--format", "fmt_", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--failures-only", is_flag=True, help="Only print failed checks and the summary.")
@handle_errors
def cmd_verify(suites, points, seed, fmt_, failures_only):
    """Run the inequality suites; exit 1 if any asserted check fails."""
    total = failed = 0
    for name, rep in checks.run_suites(suites, points=points, seed=seed):
        total += 1
        failed += rep.failed
        if failures_only and not rep.failed:
            continue
        if fmt_ == "json":
            d = rep.to_dict()
            d["suite"] = name
            click.echo(json.dumps(d))
        else:
            click.echo(f"[{name}] {rep.line()}")
    click.echo(f"# {total} checks, {failed} failed", err=fmt_ == "json")
    sys.exit(1 if failed else 0)


def _row_c1(K):
    lo, hi = bounds.krzyz_c1_bounds(K)
    return {"K": K, "c1": bounds.krzyz_c1(K), "c1_lower": lo, "c1_upper": hi}


def _row_bounds(n):
    def row(K):
        d = _row_c1(K)
        d["eta_K2_1"] = rings.eta_K2(K, 1.0) if K > 1 else 1.0
        d["main_bound_n2"] = bounds.main_theorem_bound(K, 2).value
        d[f"main_bound_n{max(n, 3)}_upper"] = bounds.main_theorem_bound(K, max(n, 3)).upper
        mb = bounds.mycor_bound(K, n)
        d["uniform_bound"] = 4.5 * (K - 1) if K <= bounds.K_WINDOW_LINEAR[1] else math.inf
        d["planar_bound"] = 0.5 * bounds.B_CONSTANT * (K - 1) if n == 2 else math.nan
        d["mycor_bound"] = mb.value
        d["chain"] = mb.chain
        return d
    return row


def _write_rows(rows, fmt_, out):
    if fmt_ == "csv":
        cols = list(rows[0])
        out.write(",".join(cols) + "\n")
        for r in rows:
            out.write(",".join(_csv_value(r[c]) for c in cols) + "\n")
    else:
        for r in rows:
            out.write(json.dumps({k: _json_value(v) for k, v in r.items()}) + "\n")


def _csv_value(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def _open_out(path):
    if path in (None, "-"):
        return click.get_text_stream("stdout")
    try:
        return open(path, "w", newline="")
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        sys.exit(2)


@cli.command("table")
@click.argument("which", type=click.Choice(["c1", "bounds", "mn-lemma"]))
@click.option("--K", "k_spec", default=None, help="K grid start:stop:count (c1 default 1.01:5:50, bounds 1:17:33).")
@click.option("--grid", type=click.Choice(["linear", "log"]), default="linear", show_default=True)
@click.option("--n", "n_", default=2, show_default=True, help="Dimension for the bounds table, or n of the m,n lemma.")
@click.option("--m", "m_", default=3.0, show_default=True, help="m of the m,n lemma.")
@click.option("--rows", default=37, show_default=True, help="mn-lemma: number of iterates a_0..a_{rows-1}.")
@click.option("--format", "fmt_", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("-o", "--output", default=None, help="Output path (default stdout).")
@handle_errors
def cmd_table(which, k_spec, grid, n_, m_, rows, fmt_, output):
    """Tabulate c1, the displacement bounds, or the m,n-lemma iterates."""
    if which == "mn-lemma":
        params = mn_lemma.MNParams(m_, n_)
        seq = mn_lemma.iterate_a(params).sequence
        data = [{"k": k, "a_k": a} for k, a in enumerate(seq[:rows])]
    else:
        default = "1.01:5:50" if which == "c1" else "1:17:33"
        Ks = parse_grid("K", k_spec or default, grid)
        row = _row_c1 if which == "c1" else _row_bounds(n_)
        data = ordered_map(row, Ks)
    out = _open_out(output)
    _write_rows(data, fmt_, out)
    if out is not sys.stdout and output not in (None, "-"):
        out.close()


@cli.command("mn-lemma")
@click.option("--m", "m_", default=3.0, show_default=True)
@click.option("--n", "n_", default=2.0, show_default=True)
@click.option("--tol", default=1e-13, show_default=True)
@click.option("--max-steps", default=10_000, show_default=True)
@handle_errors
def cmd_mn_lemma(m_, n_, tol, max_steps):
    """Run a_0 = M, a_{k+1} = p^{-1}(q(a_k)) and report the crossing point."""
    params = mn_lemma.MNParams(m_, n_)
    tr = mn_lemma.iterate_a(params, max_steps=max_steps, tol=tol)
    a = tr.limit_estimate
    click.echo(f"M = a_0     {tr[0]:.12g}")
    click.echo(f"residual    {mn_lemma.quadratic_residual(params, tr[0]):.3e}")
    if len(tr) > 36:
        click.echo(f"a_36        {tr[36]:.12g}")
    click.echo(f"limit a     {a:.12g}")
    click.echo(f"p(a) - q(a) {mn_lemma.p_func(params, a) - mn_lemma.q_func(params, a):.3e}")
    click.echo(f"steps       {len(tr) - 1}")
    click.echo(f"converged   {tr.converged}")
    click.echo(f"cap         {tr.upper_cap:.12g}")
    sys.exit(0 if tr.converged else 1)


@cli.command("scan-conjecture")
@click.option("--K", "k_spec", default="1:3:5", show_default=True)
@click.option("--t", "t_spec", default="0.1:0.9:9", show_default=True)
@click.option("--r", "r_spec", default="0.05:0.95:19", show_default=True)
@click.option("--format", "fmt_", type=click.Choice(["csv", "json"]), default="json", show_default=True)
@click.option("-o", "--output", default=None, help="Output path (default stdout).")
@handle_errors
def cmd_scan_conjecture(k_spec, t_spec, r_spec, fmt_, output):
    """Margins of A(phi_K(t), phi_K(r)) <= phi_K(A(t, r)); only t = 1 is asserted."""
    Ks = parse_grid("K", k_spec)
    ts = parse_grid("t", t_spec)
    rs = parse_grid("r", r_spec)
    per_K = ordered_map(lambda K: bounds.averaging_conjecture_scan([K], ts, rs), Ks)
    reports = [rep for block in per_K for rep in block]
    out = _open_out(output)
    if fmt_ == "json":
        for rep in reports:
            out.write(rep.to_json() + "\n")
    else:
        rows = [{"check_id": r.check_id, **r.params, "lhs": r.lhs, "rhs": r.rhs,
                 "margin": r.margin, "pass": "" if r.passed is None else str(r.passed).lower()}
                for r in reports]
        _write_rows(rows, "csv", out)
    if output not in (None, "-"):
        out.close()
    asserted = [r for r in reports if r.passed is not None]
    explored = [r for r in reports if r.passed is None]
    failed = sum(r.failed for r in asserted)
    click.echo(f"# t=1 slice: {len(asserted)} asserted, {failed} failed", err=True)
    if explored:
        worst = min(explored, key=lambda r: r.margin)
        click.echo(f"# min exploratory margin {worst.margin:.6e} at "
                   + " ".join(f"{k}={v:g}" for k, v in worst.params.items()), err=True)
    sys.exit(1 if failed else 0)


def main():
    cli()


if __name__ == "__main__":
    main()
