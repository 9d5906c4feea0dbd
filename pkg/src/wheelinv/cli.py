"""Command line interface: ``wheelinv gen | verify | spectrum``.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import __version__
from .exact import Matrix
from .report import DEFAULT_ORACLE_CUTOFF, run_verification
from .spectra import ZERO_TOL, spectrum_report
from .theorems import closed_form_inverse, pseudo_inverse_from_distance
from .wheel import distance_matrix, special_laplacian

EXIT_FAILED = 1
EXIT_IO = 3

_BUILDERS = {
    "distance": distance_matrix,
    "laplacian": special_laplacian,
    "inverse": lambda n: closed_form_inverse(n).total,
    "pseudoinverse": pseudo_inverse_from_distance,
}
_EVEN_ONLY = {"laplacian", "inverse", "pseudoinverse"}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc}", err=True)
        sys.exit(EXIT_IO)


def _check_n(n: int, even: bool) -> None:
    if n < 4:
        raise click.UsageError(f"n must be >= 4, got {n}")
    if even and n % 2:
        raise click.UsageError(f"even n required, got n={n}")


def _matrix_text(m: Matrix, fmt: str) -> str:
    if fmt == "csv":
        return m.to_csv()
    return json.dumps(m.to_json_obj()) + "\n"


@click.group()
@click.version_option(__version__, prog_name="wheelinv")
def main():
    """Exact checks for the distance-matrix inverse of even wheel graphs."""


@main.command()
@click.option("--n", "n", type=int, required=True, help="Number of vertices.")
@click.option(
    "--what",
    type=click.Choice(sorted(_BUILDERS)),
    default="distance",
    show_default=True,
)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write here instead of stdout.")
def gen(n, what, fmt, out):
    """Print one matrix with exact "p/q" entries."""
    _check_n(n, what in _EVEN_ONLY)
    _emit(_matrix_text(_BUILDERS[what](n), fmt), out)


def _report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "name", "passed", "witness"])
    for c in report["checks"]:
        witness = "" if c["witness"] is None else json.dumps(c["witness"], sort_keys=True)
        writer.writerow([c["n"], c["name"], "true" if c["passed"] else "false", witness])
    for s in report["not_applicable"]:
        writer.writerow([s["n"], s["name"], "not-applicable", s["reason"]])
    return buf.getvalue()


@main.command()
@click.option("--n", "n", type=int, default=None, help="Single vertex count.")
@click.option("--n-min", type=int, default=None)
@click.option("--n-max", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--oracle-cutoff", type=int, default=DEFAULT_ORACLE_CUTOFF, show_default=True,
              help="Largest n compared against Gauss-Jordan and checked for Penrose equations.")
@click.option("--tol", type=float, default=ZERO_TOL, show_default=True,
              help="Relative zero tolerance for spectra; chain slack is 10x this.")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes.")
@click.option("--inject-fault", is_flag=True, hidden=True,
              help="Perturb one Laplacian entry by 1 (self-test of the failure path).")
def verify(n, n_min, n_max, fmt, out, oracle_cutoff, tol, jobs, inject_fault):
    """Run every check for each n and write a report.

    Odd n get the determinant and singularity checks only; the rest are
    listed as not applicable.
    """
    if n is not None:
        if n_min is not None or n_max is not None:
            raise click.UsageError("use either --n or --n-min/--n-max")
        ns = [n]
    else:
        if n_min is None or n_max is None:
            raise click.UsageError("give --n or both --n-min and --n-max")
        if n_min > n_max:
            raise click.UsageError("--n-min exceeds --n-max")
        ns = list(range(n_min, n_max + 1))
    for k in ns:
        _check_n(k, even=False)
    if tol <= 0:
        raise click.UsageError("--tol must be positive")

    config = {
        "command": "verify",
        "n": ns if len(ns) > 1 else ns[0],
        "oracle_cutoff": oracle_cutoff,
        "tol": tol,
        "inject_fault": inject_fault,
    }
    report = run_verification(
        ns, oracle_cutoff=oracle_cutoff, tol=tol, inject_fault=inject_fault, jobs=jobs, config=config
    )
    text = json.dumps(report, indent=2) + "\n" if fmt == "json" else _report_csv(report)
    _emit(text, out)
    summary = report["summary"]
    click.echo(
        f"{summary['passed']}/{summary['total']} checks passed, "
        f"{summary['not_applicable']} not applicable",
        err=True,
    )
    if summary["failed"]:
        sys.exit(EXIT_FAILED)


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--tol", type=float, default=ZERO_TOL, show_default=True)
def spectrum(n, fmt, out, tol):
    """Eigenvalues of D and the special Laplacian, with the chain -2/lambda_k."""
    _check_n(n, even=True)
    rep = spectrum_report(n, tol)
    if fmt == "json":
        text = json.dumps(rep.to_json_obj()) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "mu", "lambda", "chain"])
        chain = rep.chain
        for k in range(n):
            writer.writerow([
                k + 1,
                repr(rep.d_eigenvalues[k]),
                repr(rep.l_eigenvalues[k]),
                repr(chain[k]) if k < len(chain) else "",
            ])
        text = buf.getvalue()
    _emit(text, out)


if __name__ == "__main__":
    main()
