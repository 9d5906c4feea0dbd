"""Floating-point spectra: a cyclic Jacobi eigensolver and the spectral checks.

All tolerances are relative.  Zero detection and inequality slack scale with
the largest eigenvalue magnitude of the matrix involved, since entries grow
with ``n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exact import Matrix
from .theorems import TheoremCheck, _result, centering_matrix, pseudo_inverse_from_distance
from .wheel import _require_even, distance_matrix, special_laplacian

__all__ = [
    "JacobiConvergenceError",
    "SpectrumReport",
    "symmetric_eigenvalues",
    "inertia",
    "spectrum_report",
    "edm_predicate",
    "check_psd",
    "check_interlacing",
    "check_d_inertia",
    "check_edm_predicate",
    "check_trace",
    "check_pinv_spectrum",
]

ZERO_TOL = 1e-9
CHAIN_SLACK = 1e-8
OFF_DIAGONAL_TOL = 1e-12
MAX_SWEEPS = 100


class JacobiConvergenceError(RuntimeError):
    pass


def _round_robin(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings of ``0..m-1`` (m even) so every pair meets once in ``m - 1`` rounds."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        half = m // 2
        p = np.array(players[:half])
        q = np.array(players[half:][::-1])
        lo, hi = np.minimum(p, q), np.maximum(p, q)
        rounds.append((lo, hi))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _as_float_symmetric(m) -> np.ndarray:
    if isinstance(m, Matrix):
        if not m.is_symmetric():
            raise ValueError("matrix is not symmetric")
        return m.to_float()
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


def symmetric_eigenvalues(m, *, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, sorted descending.

    Cyclic Jacobi: each sweep visits every off-diagonal pair once, grouped
    into rounds of disjoint pairs so a whole round is applied as one vectorized
    update.  Iterates until the off-diagonal Frobenius norm drops below
    ``1e-12`` times the Frobenius norm of the input.

    Exact :class:`Matrix` inputs are checked for symmetry before conversion.
    """
    a = _as_float_symmetric(m)
    n = a.shape[0]
    fro = np.linalg.norm(a)
    if n == 1 or fro == 0.0:
        return np.sort(np.diag(a))[::-1]
    # a padded dummy index never rotates
    size = n + (n % 2)
    if size != n:
        a = np.pad(a, ((0, 1), (0, 1)))
    rounds = _round_robin(size)
    skip = 1e-16 * fro
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off < OFF_DIAGONAL_TOL * fro:
            break
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > skip
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
    else:
        raise JacobiConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    vals = np.diag(a)[:n]
    trace = float(np.trace(_as_float_symmetric(m)))
    if abs(vals.sum() - trace) > 1e-9 * max(abs(trace), fro):
        raise JacobiConvergenceError("eigenvalue sum drifted from the trace")
    return np.sort(vals)[::-1]


def inertia(eigenvalues, tol: float = ZERO_TOL) -> tuple[int, int, int]:
    """(positive, zero, negative) counts; zero means within ``tol`` times the spectral radius."""
    ev = np.asarray(eigenvalues)
    cut = tol * np.max(np.abs(ev))
    pos = int(np.sum(ev > cut))
    neg = int(np.sum(ev < -cut))
    return pos, len(ev) - pos - neg, neg


@dataclass(frozen=True)
class SpectrumReport:
    """Descending spectra of ``D`` (``mu``) and the special Laplacian (``lambda``)."""

    n: int
    d_eigenvalues: tuple[float, ...]
    l_eigenvalues: tuple[float, ...]
    tolerance: float = ZERO_TOL

    @property
    def chain(self) -> tuple[float, ...]:
        """``-2/lambda_k`` for ``k = 1..n-1``."""
        return tuple(-2.0 / lam for lam in self.l_eigenvalues[:-1])

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "mu": list(self.d_eigenvalues),
            "lambda": list(self.l_eigenvalues),
            "tol": self.tolerance,
            "chain": list(self.chain),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def spectrum_report(n: int, tol: float = ZERO_TOL) -> SpectrumReport:
    _require_even(n)
    mu = _wheel_eigenvalues("D", n)
    lam = _wheel_eigenvalues("L", n)
    return SpectrumReport(n, tuple(map(float, mu)), tuple(map(float, lam)), tol)


@lru_cache(maxsize=16)
def _wheel_eigenvalues(label: str, n: int) -> np.ndarray:
    m = distance_matrix(n) if label == "D" else special_laplacian(n)
    ev = symmetric_eigenvalues(m)
    ev.flags.writeable = False
    return ev


def _eigs_or_witness(m: Matrix | None, label: str, n: int):
    """Eigenvalues of ``m``, or of the wheel's own ``D``/``L`` when ``m`` is None."""
    try:
        if m is None:
            return _wheel_eigenvalues(label, n), None
        return symmetric_eigenvalues(m), None
    except (ValueError, JacobiConvergenceError) as exc:
        return None, {"what": label, "error": str(exc)}


def check_psd(n: int, *, laplacian: Matrix | None = None, tol: float = ZERO_TOL) -> TheoremCheck:
    """Special Laplacian is PSD with a one-dimensional numerical kernel."""
    lam, witness = _eigs_or_witness(laplacian, "L", n)
    if witness is not None:
        return _result("psd", n, witness)
    cut = tol * lam[0]
    near_zero = int(np.sum(np.abs(lam) <= cut))
    if lam[-1] < -cut:
        witness = {"what": "min eigenvalue", "actual": float(lam[-1]), "bound": -cut}
    elif near_zero != 1:
        witness = {"what": "near-zero eigenvalues", "actual": near_zero, "expected": 1}
    return _result("psd", n, witness, min_eigenvalue=float(lam[-1]))


def check_interlacing(
    n: int,
    *,
    distance: Matrix | None = None,
    laplacian: Matrix | None = None,
    slack: float = CHAIN_SLACK,
) -> TheoremCheck:
    """``0 > -2/l1 >= mu2 >= -2/l2 >= ... >= -2/l_{n-1} >= mu_n``.

    Every comparison is non-strict with additive slack
    ``slack * max(|mu_n|, 2/l_{n-1})``, except the leading one, which
    requires ``-2/l1 < -slack``.
    """
    mu, witness = _eigs_or_witness(distance, "D", n)
    if witness is None:
        lam, witness = _eigs_or_witness(laplacian, "L", n)
    if witness is not None:
        return _result("interlacing", n, witness)
    if lam[n - 2] <= 0:
        return _result("interlacing", n, {"what": "lambda_{n-1}", "actual": float(lam[n - 2])})
    chain = -2.0 / lam[: n - 1]
    eps = slack * max(abs(mu[-1]), 2.0 / lam[n - 2])
    seq = [chain[0]]
    labels = ["-2/lambda_1"]
    for k in range(1, n):
        seq.append(mu[k])
        labels.append(f"mu_{k + 1}")
        if k < n - 1:
            seq.append(chain[k])
            labels.append(f"-2/lambda_{k + 1}")
    if not seq[0] < -eps:
        witness = {"what": "0 > -2/lambda_1", "actual": float(seq[0]), "slack": eps}
    else:
        for i in range(len(seq) - 1):
            if seq[i] < seq[i + 1] - eps:
                witness = {
                    "what": f"{labels[i]} >= {labels[i + 1]}",
                    "left": float(seq[i]),
                    "right": float(seq[i + 1]),
                    "slack": eps,
                }
                break
    return _result("interlacing", n, witness)


def check_d_inertia(n: int, *, distance: Matrix | None = None, tol: float = ZERO_TOL) -> TheoremCheck:
    """``D`` has one positive and ``n - 1`` negative eigenvalues.

    Any ``n >= 4`` is accepted; for odd ``n`` the check fails, and the
    reported inertia shows the zero eigenvalue.
    """
    mu, witness = _eigs_or_witness(distance, "D", n)
    if witness is not None:
        return _result("d_inertia", n, witness)
    got = inertia(mu, tol)
    if got != (1, 0, n - 1):
        witness = {"what": "inertia", "actual": list(got), "expected": [1, 0, n - 1]}
    return _result("d_inertia", n, witness, inertia=list(got))


def edm_predicate(d: Matrix, tol: float = ZERO_TOL, *, radius: float | None = None) -> tuple[bool, float]:
    """Whether ``x' D x <= 0`` on the complement of ``1``, via the spectrum of ``PDP``.

    Returns the verdict and the largest eigenvalue of ``PDP``.  ``radius`` is
    the spectral radius of ``d`` if already known.
    """
    p = centering_matrix(d.rows)
    top = float(symmetric_eigenvalues(p @ d @ p)[0])
    if radius is None:
        radius = float(np.max(np.abs(symmetric_eigenvalues(d))))
    return top <= tol * radius, top


def check_edm_predicate(n: int, *, distance: Matrix | None = None, tol: float = ZERO_TOL) -> TheoremCheck:
    mu, witness = _eigs_or_witness(distance, "D", n)
    if witness is not None:
        return _result("edm_predicate", n, witness)
    d = distance_matrix(n) if distance is None else distance
    try:
        ok, top = edm_predicate(d, tol, radius=float(np.max(np.abs(mu))))
    except (ValueError, JacobiConvergenceError) as exc:
        return _result("edm_predicate", n, {"what": "PDP", "error": str(exc)})
    witness = None if ok else {"what": "max eigenvalue of PDP", "actual": top}
    return _result("edm_predicate", n, witness, max_pdp_eigenvalue=top)


def check_trace(
    n: int,
    *,
    distance: Matrix | None = None,
    laplacian: Matrix | None = None,
    tol: float = ZERO_TOL,
) -> TheoremCheck:
    """Eigenvalue sums of ``D`` and ``L`` match their exact traces.

    The error is measured relative to ``max(|trace|, ||A||_F)`` because the
    trace of the hollow ``D`` is zero.
    """
    d = distance_matrix(n) if distance is None else distance
    lap = special_laplacian(n) if laplacian is None else laplacian
    for label, m, given in (("D", d, distance), ("L", lap, laplacian)):
        ev, witness = _eigs_or_witness(given, label, n)
        if witness is not None:
            return _result("trace", n, witness)
        exact = sum(m.diagonal())
        scale = max(abs(float(exact)), float(np.linalg.norm(m.to_float())))
        if abs(float(ev.sum()) - float(exact)) > tol * scale:
            return _result(
                "trace", n, {"what": f"trace {label}", "actual": float(ev.sum()), "expected": str(exact)}
            )
    return _result("trace", n)


def check_pinv_spectrum(n: int, *, tol: float = CHAIN_SLACK) -> TheoremCheck:
    """Spectrum of ``-PDP/2`` is ``{0} U {1/lambda_k}``, matched after sorting."""
    lam = _wheel_eigenvalues("L", n)
    pinv = symmetric_eigenvalues(pseudo_inverse_from_distance(n))
    expected = np.sort(np.concatenate([[0.0], 1.0 / lam[:-1]]))[::-1]
    err = np.max(np.abs(pinv - expected))
    witness = None
    if err > tol * np.max(np.abs(expected)):
        witness = {"what": "pseudoinverse spectrum", "max_abs_error": float(err)}
    return _result("pinv_spectrum", n, witness)
