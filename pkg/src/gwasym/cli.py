"""Command-line interface.

Subcommands: ``compute`` (build and cache count tables), ``bounds``
(exact inequality checks on a cache), ``singularity`` (x0 / expansion
pipeline), ``verify`` (empirical conjecture suites).  Reports are JSON on
stdout; progress and errors go to stderr.  Exit codes: 0 success or
all-pass, 1 verification failure, 2 usage error, 3 computation error.
"""

from __future__ import annotations

import functools
import json
import os
import sys
import time

import click
import gmpy2

from . import bounds as bounds_mod
from . import cache as cache_mod
from . import empirics, recursions, singularity
from .errors import GwasymError

REPORT_VERSION = 1

EXIT_VERIFY_FAIL = 1
EXIT_COMPUTE_ERROR = 3


def _progress(label):
    def cb(d, d_max):
        print(f"{label}: d={d}/{d_max}", file=sys.stderr, flush=True)
    return cb


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _report(command: str, params: dict, results: dict,
            provenance: dict, t_start: float) -> dict:
    return {
        "report_version": REPORT_VERSION,
        "command": command,
        "parameters": params,
        "results": results,
        "provenance": provenance,
        "volatile": {
            "generated_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
            "wall_time_s": round(time.monotonic() - t_start, 3),
        },
    }


def _computation_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except GwasymError as exc:
            print(json.dumps({"error": type(exc).__name__,
                              "message": str(exc)}),
                  file=sys.stderr)
            sys.exit(EXIT_COMPUTE_ERROR)
    return wrapper


@click.group()
def main():
    """Exact curve counts, bound verification, and singularity analysis."""


@main.command()
@click.argument("target", type=click.Choice(["p2", "p3"]))
@click.option("--genus", type=click.IntRange(0, 1), default=0,
              show_default=True)
@click.option("--dmax", type=click.IntRange(min=1), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              default=None, help="Also export the table to this path.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True,
              help="Export format for --out.")
@_computation_errors
def compute(target, genus, dmax, out_path, fmt):
    """Compute a count table and store it in the cache directory."""
    if target == "p3" and genus != 0:
        raise click.UsageError("unsupported combination: p3 has no genus-1 "
                               "recursion")
    t_start = time.monotonic()
    progress = _progress(f"compute {target} g{genus}")
    if target == "p3":
        table = recursions.p3_genus0(dmax, progress)
    elif genus == 0:
        table = recursions.p2_genus0(dmax, progress)
    else:
        table = recursions.p2_genus1(dmax, progress=progress)

    cache_dir = cache_mod.default_cache_dir()
    cache_path = os.path.join(
        cache_dir, cache_mod.cache_filename(target, genus, dmax))
    cache_mod.write_cache(table, cache_path)

    if target == "p3":
        entries = sum(2 * d + 1 for d in range(1, dmax + 1))
        largest = max(table.N(d, p) for d in range(1, dmax + 1)
                      for p in range(0, 2 * d + 1))
    else:
        entries = dmax
        largest = max(table.N(d) for d in range(1, dmax + 1))

    if out_path is not None:
        if fmt == "csv":
            cache_mod.write_cache(table, out_path, with_counts=True)
        else:
            doc = {
                "version": cache_mod.CACHE_VERSION,
                "target": target,
                "genus": genus,
                "dmax": dmax,
                "rows": [
                    {"d": d, "p": p, "n": str(table.n(d, p)),
                     "N": str(table.N(d, p))}
                    for d in range(1, dmax + 1)
                    for p in range(0, 2 * d + 1)
                ] if target == "p3" else [
                    {"d": d, "n": str(table.n(d)), "N": str(table.N(d))}
                    for d in range(1, dmax + 1)
                ],
            }
            with open(out_path, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")

    _emit(_report(
        "compute",
        {"target": target, "genus": genus, "dmax": dmax,
         "out": out_path, "format": fmt},
        {"entries": entries, "largest_N": str(largest),
         "cache_path": cache_path},
        {"d_max": dmax},
        t_start,
    ))


@main.command("bounds")
@click.argument("cache_path", type=click.Path(exists=True, dir_okay=False))
@_computation_errors
def bounds_cmd(cache_path):
    """Run every applicable exact bound check on a cached table."""
    t_start = time.monotonic()
    table = cache_mod.read_cache(cache_path)
    reports = [bounds_mod.check_integrality(table)]
    if table.target == "p2" and table.genus == 0:
        reports.append(bounds_mod.check_p2_sandwich(table))
        reports.append(bounds_mod.check_catalan_sandwich(table))
        reports.append(bounds_mod.check_stirling(table.d_max))
    elif table.target == "p3":
        reports.append(bounds_mod.check_p3_coarse_bound(table))
        _, maj = bounds_mod.p3_majorants(table)
        reports.append(maj)
    all_pass = all(r.passed for r in reports)
    _emit(_report(
        "bounds",
        {"cache": cache_path},
        {"all_pass": all_pass, "checks": [r.summary() for r in reports]},
        {"target": table.target, "genus": table.genus,
         "d_max": table.d_max, "arithmetic": "exact"},
        t_start,
    ))
    if not all_pass:
        sys.exit(EXIT_VERIFY_FAIL)


@main.command("singularity")
@click.argument("cache_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--prec", type=click.IntRange(min=64), default=256,
              show_default=True, help="Working precision in bits.")
@click.option("--coeffs", "m_coeffs", type=click.IntRange(min=6), default=24,
              show_default=True, help="Highest expansion index M.")
@click.option("--terms", "d_terms", type=click.IntRange(min=1), default=None,
              help="Series terms D to use (default: all).")
@_computation_errors
def singularity_cmd(cache_path, prec, m_coeffs, d_terms):
    """Locate the singular point and extract expansion coefficients."""
    t_start = time.monotonic()
    table = cache_mod.read_cache(cache_path)
    profile = singularity.build_profile(table, p_bits=prec, M=m_coeffs,
                                        D=d_terms)
    x0 = profile.x0
    a4 = profile.a_reduced(4)
    with gmpy2.context(precision=prec + 16):
        a4_relation = abs(a4 - (gmpy2.mpfr(3) / 2 + profile.a2 / 3))
        tol = gmpy2.mpfr(2) ** (-prec + 4) * abs(a4)
    results = {
        "x0": {
            "value": float(x0.value),
            "error_bar": float(x0.error_bar),
            "root_estimate": float(x0.root_value),
            "ratio_estimate": float(x0.ratio_value),
            "discrepancy": float(abs(x0.root_value - x0.ratio_value)),
        },
        "a0": float(profile.a0),
        "a2": float(profile.a2),
        "a4": float(a4),
        "abs_a5": float(abs(profile.a_reduced(5))),
        "a4_relation_check": "pass" if a4_relation <= tol else "fail",
        "residue": str(profile.residue),
        "residue_check": "pass" if profile.residue == -gmpy2.mpq(1, 48)
        else "fail",
        "a_coeffs": [
            {"index": c.index, "value": float(c.value),
             "parity": "imaginary" if c.is_imaginary else "real"}
            for c in profile.a_coeffs
        ],
        "b_coeffs": [
            {"index": c.index, "value": float(c.value),
             "parity": "imaginary" if c.is_imaginary else "real"}
            for c in profile.b_coeffs
        ],
    }
    if m_coeffs >= 10:
        m_res = min(m_coeffs, 20)
        res = singularity.ode_residual(
            profile, m_res, [gmpy2.mpfr(s) for s in
                             ("-1e-3", "-1e-4", "-1e-5")])
        results["ode_residual"] = {str(k): float(v) for k, v in res.items()}
        results["ode_truncation"] = m_res
    _emit(_report(
        "singularity",
        {"cache": cache_path, "prec": prec, "coeffs": m_coeffs,
         "terms": d_terms},
        results,
        {"d_max": table.d_max, "d_used": x0.d_used, "precision_bits": prec,
         "truncation_M": profile.M, "truncation_M1": profile.M1},
        t_start,
    ))


@main.command("verify")
@click.argument("cache_paths", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
@click.option("--suite", type=click.Choice(["asymptotics", "monotone",
                                            "rays"]),
              default="asymptotics", show_default=True)
@click.option("--prec", type=click.IntRange(min=64), default=256,
              show_default=True)
@_computation_errors
def verify_cmd(cache_paths, suite, prec):
    """Empirical verification suites over one or more caches."""
    t_start = time.monotonic()
    tables = [cache_mod.read_cache(p) for p in cache_paths]
    params = {"caches": list(cache_paths), "suite": suite, "prec": prec}
    if suite == "asymptotics":
        results, ok = _suite_asymptotics(tables, prec)
    elif suite == "monotone":
        results, ok = _suite_monotone(tables, prec)
    else:
        results, ok = _suite_rays(tables, prec)
    _emit(_report("verify", params, results,
                  {"precision_bits": prec,
                   "d_max": [t.d_max for t in tables]},
                  t_start))
    if not ok:
        sys.exit(EXIT_VERIFY_FAIL)


def _suite_asymptotics(tables, prec):
    g0 = next((t for t in tables if t.target == "p2" and t.genus == 0), None)
    if g0 is None:
        raise GwasymError("asymptotics suite needs a p2 genus-0 cache")
    profile = singularity.build_profile(g0, p_bits=prec)
    ds = [d for d in (100, 150, 200, 250, 300, 350, 400) if d <= g0.d_max]
    rows = []
    prev = None
    decreasing = True
    for d in ds:
        pred = singularity.asymptotic_predict(0, profile, d, 5, prec)
        exact = gmpy2.mpfr(g0.n(d), prec)
        rel = abs(pred / exact - 1)
        rows.append({"d": d, "relative_error": float(rel)})
        if prev is not None and not rel < prev:
            decreasing = False
        prev = rel
    results = {"genus0": {"N": 5, "rows": rows,
                          "error_decreasing": decreasing}}
    ok = decreasing
    g1 = next((t for t in tables if t.target == "p2" and t.genus == 1), None)
    if g1 is not None:
        rows1 = []
        prev = None
        dec1 = True
        with gmpy2.context(precision=prec):
            for d in ds:
                if d > g1.d_max:
                    continue
                dev = abs(48 * d * gmpy2.mpfr(g1.n(d), prec)
                          * gmpy2.exp(d * profile.x0.value) - 1)
                rows1.append({"d": d, "abs_deviation": float(dev)})
                if prev is not None and not dev < prev:
                    dec1 = False
                prev = dev
        results["genus1"] = {"rows": rows1, "deviation_decreasing": dec1}
        ok = ok and dec1
    return results, ok


def _suite_monotone(tables, prec):
    results = {"sequences": []}
    ok = True
    for t in tables:
        if t.target != "p2":
            continue
        seq = t.sequence()
        d_start = 1
        if t.genus == 1:
            seq = seq[2:]  # n_{1,1} = n_{1,2} = 0
            d_start = 3
        d_star = empirics.monotone_from(seq, d_start)
        results["sequences"].append({
            "target": t.target, "genus": t.genus, "d_max": t.d_max,
            "monotone_from": d_star,
        })
        if d_star is None:
            ok = False
    if not results["sequences"]:
        raise GwasymError("monotone suite needs at least one p2 cache")
    return results, ok


def _suite_rays(tables, prec):
    p3 = next((t for t in tables if t.target == "p3"), None)
    if p3 is None:
        raise GwasymError("rays suite needs a p3 cache")
    rays = [(1, 0), (1, 1), (1, 2), (2, 2)]
    results = {"rays": []}
    for alpha, beta in rays:
        if alpha > p3.d_max:
            continue
        rep = empirics.p3_ray(p3, alpha, beta, p_bits=prec)
        results["rays"].append(rep.summary())
    return results, True


if __name__ == "__main__":
    main()
