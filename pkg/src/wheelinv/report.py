"""Per-n verification runs and the JSON report that collects them."""

from __future__ import annotations

import datetime
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import __version__
from . import spectra, theorems
from .exact import Matrix
from .theorems import TheoremCheck
from .wheel import special_laplacian

DEFAULT_ORACLE_CUTOFF = 64

# Names of checks that only make sense for even n.
EVEN_ONLY = (
    "inverse_formula",
    "ld_identity",
    "dw_identity",
    "rank_and_kernel",
    "laplacian_shape",
    "cofactor_theorem",
    "alternating_sum",
    "q_rows",
    "f_vector",
    "moore_penrose",
    "edm_decomposition",
    "pinv_spectrum",
    "psd",
    "interlacing",
    "d_inertia",
    "edm_predicate",
    "trace",
)


def faulty_laplacian(n: int) -> Matrix:
    """Special Laplacian with entry (2, 3) off by one, for exercising failure paths."""
    lap = special_laplacian(n)
    return lap.with_entry(1, 2, lap[1, 2] + 1)


@dataclass
class NResult:
    n: int
    checks: list[TheoremCheck] = field(default_factory=list)
    not_applicable: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def run(self, name: str, fn: Callable[[], TheoremCheck]) -> None:
        start = time.perf_counter()
        self.checks.append(fn())
        self.timings[name] = time.perf_counter() - start

    def skip(self, name: str, reason: str) -> None:
        self.not_applicable.append({"name": name, "n": self.n, "reason": reason})


def verify_n(
    n: int,
    oracle_cutoff: int = DEFAULT_ORACLE_CUTOFF,
    tol: float = spectra.ZERO_TOL,
    inject_fault: bool = False,
) -> NResult:
    """Run every applicable check for one ``n``."""
    if n < 4:
        raise ValueError(f"too small: n >= 4 required, got {n}")
    res = NResult(n)
    res.run("distance_bfs", lambda: theorems.check_distance_bfs(n))
    res.run("determinant_formula", lambda: theorems.check_determinant_formula(n))

    if n % 2:
        if n <= oracle_cutoff:
            res.run("singular_odd", lambda: theorems.check_singular_odd(n))
        else:
            res.skip("singular_odd", f"n > oracle cutoff {oracle_cutoff}; det D = 0 covers it")
        for name in EVEN_ONLY:
            res.skip(name, "odd n: D is singular, no inverse formula")
        return res

    lap = faulty_laplacian(n) if inject_fault else None
    slack = 10 * tol
    res.run("inverse_formula", lambda: theorems.check_inverse_formula(n, oracle_cutoff=oracle_cutoff, laplacian=lap))
    res.run("ld_identity", lambda: theorems.check_ld_identity(n, laplacian=lap))
    res.run("dw_identity", lambda: theorems.check_dw_identity(n))
    res.run("rank_and_kernel", lambda: theorems.check_rank_and_kernel(n, laplacian=lap))
    res.run("laplacian_shape", lambda: theorems.check_laplacian_shape(n, laplacian=lap))
    res.run("cofactor_theorem", lambda: theorems.check_cofactor_theorem(n, laplacian=lap))
    res.run("alternating_sum", lambda: theorems.check_alternating_sum(n))
    if n >= 6:
        res.run("q_rows", lambda: theorems.check_q_rows(n))
        res.run("f_vector", lambda: theorems.check_f_vector(n))
    else:
        res.skip("q_rows", "closed forms need n >= 6")
        res.skip("f_vector", "closed form needs n >= 6")
    if n <= oracle_cutoff:
        res.run("moore_penrose", lambda: theorems.check_moore_penrose(n, laplacian=lap))
        res.run("edm_decomposition", lambda: theorems.check_edm_decomposition(n))
        res.run("pinv_spectrum", lambda: spectra.check_pinv_spectrum(n, tol=slack))
    else:
        for name in ("moore_penrose", "edm_decomposition", "pinv_spectrum"):
            res.skip(name, f"n > oracle cutoff {oracle_cutoff}")
    res.run("psd", lambda: spectra.check_psd(n, laplacian=lap, tol=tol))
    res.run("interlacing", lambda: spectra.check_interlacing(n, laplacian=lap, slack=slack))
    res.run("d_inertia", lambda: spectra.check_d_inertia(n, tol=tol))
    res.run("edm_predicate", lambda: spectra.check_edm_predicate(n, tol=tol))
    res.run("trace", lambda: spectra.check_trace(n, laplacian=lap, tol=tol))
    return res


def build_report(results: Iterable[NResult], config: dict) -> dict:
    """Assemble the report; order of ``results`` does not matter.

    Timing and the timestamp live under ``header``; everything else is a
    deterministic function of ``config``.
    """
    results = sorted(results, key=lambda r: r.n)
    checks = sorted((c for r in results for c in r.checks), key=lambda c: (c.n, c.name))
    skipped = sorted((s for r in results for s in r.not_applicable), key=lambda s: (s["n"], s["name"]))
    timings = {f"{r.n}:{name}": round(t, 6) for r in results for name, t in sorted(r.timings.items())}
    passed = sum(c.passed for c in checks)
    return {
        "header": {
            "tool": "wheelinv",
            "version": __version__,
            "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
            "timings_s": timings,
        },
        "config": config,
        "checks": [c.to_json_obj() for c in checks],
        "not_applicable": skipped,
        "summary": {
            "total": len(checks),
            "passed": passed,
            "failed": len(checks) - passed,
            "not_applicable": len(skipped),
        },
    }


def run_verification(
    ns: Iterable[int],
    *,
    oracle_cutoff: int = DEFAULT_ORACLE_CUTOFF,
    tol: float = spectra.ZERO_TOL,
    inject_fault: bool = False,
    jobs: int = 1,
    config: dict | None = None,
) -> dict:
    ns = list(ns)
    args = [(n, oracle_cutoff, tol, inject_fault) for n in ns]
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(verify_n, *zip(*args)))
    else:
        results = [verify_n(*a) for a in args]
    return build_report(results, config or {})
