"""Exact checks of the inverse formula and the structure of the special Laplacian.

Each ``check_*`` function returns a :class:`TheoremCheck`.  The matrices
under test default to the constructions in :mod:`wheelinv.wheel` but can be
passed in explicitly, which is how the mutation tests feed perturbed inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exact import (
    Matrix,
    SingularMatrixError,
    cofactor,
    determinant,
    gauss_jordan_inverse,
    has_tail_symmetry,
    rank,
    render_rational,
)
from .wheel import (
    _require_even,
    alternating_sum_identity,
    bfs_distances,
    build_wheel,
    distance_matrix,
    f_vector,
    f_vector_direct,
    q_row,
    q_row_closed_form,
    special_laplacian,
    w_vector,
)

__all__ = [
    "TheoremCheck",
    "InverseDecomposition",
    "closed_form_inverse",
    "centering_matrix",
    "pseudo_inverse_from_distance",
    "check_distance_bfs",
    "check_inverse_formula",
    "check_ld_identity",
    "check_dw_identity",
    "check_rank_and_kernel",
    "check_laplacian_shape",
    "check_moore_penrose",
    "edm_reconstruction",
    "check_edm_decomposition",
    "check_cofactor_theorem",
    "check_determinant_formula",
    "check_singular_odd",
    "check_alternating_sum",
    "check_q_rows",
    "check_f_vector",
]


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of one check at one ``n``.  ``witness`` is set iff it failed."""

    name: str
    n: int
    passed: bool
    witness: Any = None
    detail: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing check carries no witness")
        if not self.passed and self.witness is None:
            raise ValueError("a failing check needs a witness")

    def to_json_obj(self) -> dict:
        obj = {"name": self.name, "n": self.n, "passed": self.passed, "witness": self.witness}
        if self.detail:
            obj["detail"] = self.detail
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _result(name: str, n: int, witness=None, **detail) -> TheoremCheck:
    return TheoremCheck(name, n, witness is None, witness, detail)


def _mismatch(actual: Matrix, expected: Matrix, label: str = "matrix") -> dict | None:
    """Witness for the first differing entry (1-based), or None if equal."""
    if actual.shape != expected.shape:
        return {"what": label, "shape": list(actual.shape), "expected_shape": list(expected.shape)}
    pos = actual.first_difference(expected)
    if pos is None:
        return None
    i, j = pos
    return {
        "what": label,
        "row": i + 1,
        "col": j + 1,
        "actual": render_rational(actual[i, j]),
        "expected": render_rational(expected[i, j]),
    }


def _vec_mismatch(actual: Sequence, expected: Sequence, label: str) -> dict | None:
    if len(actual) != len(expected):
        return {"what": label, "length": len(actual), "expected_length": len(expected)}
    for j, (a, e) in enumerate(zip(actual, expected)):
        if a != e:
            return {
                "what": label,
                "index": j + 1,
                "actual": render_rational(a),
                "expected": render_rational(e),
            }
    return None


def _ones_col(n: int) -> Matrix:
    return Matrix.ones(n, 1)


# ---------------------------------------------------------------------------
# constructions


@dataclass(frozen=True)
class InverseDecomposition:
    """``total = laplacian_part + rank_one_part`` with ``total @ D == I``."""

    n: int
    laplacian_part: Matrix
    rank_one_part: Matrix
    total: Matrix


def closed_form_inverse(n: int, laplacian: Matrix | None = None) -> InverseDecomposition:
    """``-L/2 + (4/(n-1)) w w'`` for even ``n``."""
    if n % 2:
        raise ValueError("no inverse formula (det D = 0) for odd n")
    _require_even(n)
    lap = special_laplacian(n) if laplacian is None else laplacian
    w = Matrix.column(w_vector(n))
    lap_part = lap.scale(Fraction(-1, 2))
    rank_one = (w @ w.T).scale(Fraction(4, n - 1))
    return InverseDecomposition(n, lap_part, rank_one, lap_part + rank_one)


def centering_matrix(n: int) -> Matrix:
    """``P = I - J/n``."""
    return Matrix.identity(n) - Matrix.ones(n).scale(Fraction(1, n))


def pseudo_inverse_from_distance(n: int, distance: Matrix | None = None) -> Matrix:
    """``-PDP/2``, which equals the Moore-Penrose inverse of the special Laplacian."""
    _require_even(n)
    d = distance_matrix(n) if distance is None else distance
    p = centering_matrix(n)
    return (p @ d @ p).scale(Fraction(-1, 2))


# ---------------------------------------------------------------------------
# checks


def check_distance_bfs(n: int) -> TheoremCheck:
    """Block-circulant distance matrix agrees with BFS on the labelled wheel."""
    return _result("distance_bfs", n, _mismatch(distance_matrix(n), bfs_distances(build_wheel(n)), "D"))


def check_inverse_formula(
    n: int,
    *,
    oracle_cutoff: int = 64,
    distance: Matrix | None = None,
    laplacian: Matrix | None = None,
) -> TheoremCheck:
    """Closed-form inverse times ``D`` is ``I``; equals Gauss-Jordan up to the cutoff."""
    d = distance_matrix(n) if distance is None else distance
    inv = closed_form_inverse(n, laplacian).total
    witness = _mismatch(inv @ d, Matrix.identity(n), "inverse @ D")
    oracle = n <= oracle_cutoff
    if witness is None and oracle:
        try:
            witness = _mismatch(inv, gauss_jordan_inverse(d), "inverse vs Gauss-Jordan")
        except SingularMatrixError:
            witness = {"what": "D", "error": "singular"}
    return _result("inverse_formula", n, witness, oracle_compared=oracle)


def check_ld_identity(
    n: int, *, distance: Matrix | None = None, laplacian: Matrix | None = None
) -> TheoremCheck:
    """``L D + 2I = 2 w 1'``."""
    d = distance_matrix(n) if distance is None else distance
    lap = special_laplacian(n) if laplacian is None else laplacian
    lhs = lap @ d + Matrix.identity(n).scale(2)
    rhs = (Matrix.column(w_vector(n)) @ _ones_col(n).T).scale(2)
    return _result("ld_identity", n, _mismatch(lhs, rhs, "L D + 2I"))


def check_dw_identity(n: int, *, distance: Matrix | None = None) -> TheoremCheck:
    """``D w = ((n - 1)/4) 1``."""
    d = distance_matrix(n) if distance is None else distance
    lhs = d @ Matrix.column(w_vector(n))
    rhs = _ones_col(n).scale(Fraction(n - 1, 4))
    return _result("dw_identity", n, _mismatch(lhs, rhs, "D w"))


def check_rank_and_kernel(n: int, *, laplacian: Matrix | None = None) -> TheoremCheck:
    """Exact rank ``n - 1`` and zero row and column sums."""
    lap = special_laplacian(n) if laplacian is None else laplacian
    zeros = (Fraction(0),) * n
    r = rank(lap)
    witness = _vec_mismatch(lap.row_sums(), zeros, "row sums") or _vec_mismatch(
        lap.col_sums(), zeros, "column sums"
    )
    if witness is None and r != n - 1:
        witness = {"what": "rank", "actual": r, "expected": n - 1}
    return _result("rank_and_kernel", n, witness, rank=r)


def check_laplacian_shape(n: int, *, laplacian: Matrix | None = None) -> TheoremCheck:
    """Symmetric with every diagonal entry ``(n - 1)/2``."""
    lap = special_laplacian(n) if laplacian is None else laplacian
    witness = _mismatch(lap, lap.T, "L vs L'") or _vec_mismatch(
        lap.diagonal(), (Fraction(n - 1, 2),) * n, "diagonal"
    )
    return _result("laplacian_shape", n, witness)


def check_moore_penrose(
    n: int, *, distance: Matrix | None = None, laplacian: Matrix | None = None
) -> TheoremCheck:
    """``-PDP/2`` satisfies the four Penrose equations against ``L`` and ``L L+ = P``."""
    lap = special_laplacian(n) if laplacian is None else laplacian
    pinv = pseudo_inverse_from_distance(n, distance)
    l_pinv = lap @ pinv
    pinv_l = pinv @ lap
    witness = (
        _mismatch(l_pinv @ lap, lap, "L L+ L")
        or _mismatch(pinv_l @ pinv, pinv, "L+ L L+")
        or _mismatch(l_pinv.T, l_pinv, "(L L+)'")
        or _mismatch(pinv_l.T, pinv_l, "(L+ L)'")
        or _mismatch(l_pinv, centering_matrix(n), "L L+")
    )
    return _result("moore_penrose", n, witness)


def edm_reconstruction(pinv: Matrix) -> Matrix:
    """``diag(A) J + J diag(A) - 2A``."""
    n = pinv.rows
    diag = Matrix([[pinv[i, i] if i == j else 0 for j in range(n)] for i in range(n)])
    j = Matrix.ones(n)
    return diag @ j + j @ diag - pinv.scale(2)


def check_edm_decomposition(
    n: int, *, distance: Matrix | None = None, zero_diagonal: bool = False
) -> TheoremCheck:
    """``D = diag(L+) J + J diag(L+) - 2 L+`` with ``L+ = -PDP/2``.

    ``zero_diagonal`` drops the diagonal terms; it exists as a negative control.
    """
    d = distance_matrix(n) if distance is None else distance
    pinv = pseudo_inverse_from_distance(n, d)
    recon = pinv.scale(-2) if zero_diagonal else edm_reconstruction(pinv)
    return _result("edm_decomposition", n, _mismatch(recon, d, "reconstructed D"))


def _cofactor_positions(n: int, exhaustive_limit: int) -> list[tuple[int, int]]:
    if n <= exhaustive_limit:
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return [(1, 1), (1, 2), (n, n)]


def check_cofactor_theorem(
    n: int,
    *,
    laplacian: Matrix | None = None,
    exhaustive_limit: int = 16,
) -> TheoremCheck:
    """Cofactors of ``L`` all equal ``2^(n-3)``; the determinant lemma gives ``det D^-1``.

    All positions are checked up to ``exhaustive_limit``, three beyond it.  Up
    to the same limit the adjugate is formed entrywise and
    ``det(-L/2) + (4/(n-1)) w' adj(-L/2) w`` is compared with ``1/(1 - n)``.
    """
    lap = special_laplacian(n) if laplacian is None else laplacian
    expected = Fraction(2 ** (n - 3))
    positions = _cofactor_positions(n, exhaustive_limit)
    witness = None
    for i, j in positions:
        value = cofactor(lap, i, j)
        if value != expected:
            witness = {
                "what": "cofactor",
                "row": i,
                "col": j,
                "actual": render_rational(value),
                "expected": render_rational(expected),
            }
            break
    lemma = None
    if witness is None and n <= exhaustive_limit:
        a = lap.scale(Fraction(-1, 2))
        adj = Matrix([[cofactor(a, j, i) for j in range(1, n + 1)] for i in range(1, n + 1)])
        w = Matrix.column(w_vector(n))
        quad = (w.T @ adj @ w)[0, 0]
        lemma = determinant(a) + Fraction(4, n - 1) * quad
        if lemma != Fraction(1, 1 - n):
            witness = {
                "what": "determinant lemma",
                "actual": render_rational(lemma),
                "expected": render_rational(Fraction(1, 1 - n)),
            }
    return _result(
        "cofactor_theorem",
        n,
        witness,
        positions_checked=len(positions),
        determinant_lemma=lemma is not None,
    )


def check_determinant_formula(n: int, *, distance: Matrix | None = None) -> TheoremCheck:
    """``det D`` is ``1 - n`` for even ``n`` and ``0`` for odd ``n``."""
    d = distance_matrix(n) if distance is None else distance
    det = determinant(d)
    expected = Fraction(1 - n) if n % 2 == 0 else Fraction(0)
    witness = None
    if det != expected:
        witness = {"what": "det D", "actual": render_rational(det), "expected": render_rational(expected)}
    return _result("determinant_formula", n, witness)


def check_singular_odd(n: int) -> TheoremCheck:
    """Gauss-Jordan refuses to invert ``D`` for odd ``n``."""
    if n % 2 == 0:
        raise ValueError("odd n required")
    try:
        gauss_jordan_inverse(distance_matrix(n))
    except SingularMatrixError:
        return _result("singular_odd", n)
    return _result("singular_odd", n, {"what": "D", "error": "inverse unexpectedly exists"})


def check_alternating_sum(n: int) -> TheoremCheck:
    lhs, rhs = alternating_sum_identity(n)
    witness = None
    if lhs != rhs:
        witness = {"what": "alternating sum", "actual": render_rational(lhs), "expected": render_rational(rhs)}
    return _result("alternating_sum", n, witness)


def check_q_rows(n: int) -> TheoremCheck:
    """Closed-form ``q^k`` equals ``c^k' D~`` and is tail-symmetric, for every ``k``."""
    _require_even(n, 6)
    for k in range(1, n // 2):
        direct = q_row(n, k)
        witness = _vec_mismatch(q_row_closed_form(n, k), direct, f"q^{k}")
        if witness is None and not has_tail_symmetry(direct):
            witness = {"what": f"q^{k}", "error": "not tail-symmetric"}
        if witness is not None:
            return _result("q_rows", n, witness)
    return _result("q_rows", n)


def check_f_vector(n: int) -> TheoremCheck:
    """Closed-form ``f`` equals the direct alternating sum and is tail-symmetric."""
    direct = f_vector_direct(n)
    witness = _vec_mismatch(f_vector(n), direct, "f")
    if witness is None and not has_tail_symmetry(direct):
        witness = {"what": "f", "error": "not tail-symmetric"}
    return _result("f_vector", n, witness)
