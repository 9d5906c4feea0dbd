import json
from fractions import Fraction

import pytest

from wheelinv.exact import Matrix, gauss_jordan_inverse, rank
from wheelinv.theorems import (
    TheoremCheck,
    centering_matrix,
    check_alternating_sum,
    check_cofactor_theorem,
    check_determinant_formula,
    check_distance_bfs,
    check_dw_identity,
    check_edm_decomposition,
    check_f_vector,
    check_inverse_formula,
    check_laplacian_shape,
    check_ld_identity,
    check_moore_penrose,
    check_q_rows,
    check_rank_and_kernel,
    check_singular_odd,
    closed_form_inverse,
    pseudo_inverse_from_distance,
)
from wheelinv.wheel import distance_matrix, special_laplacian, w_vector


def test_theorem_check_witness_rule():
    with pytest.raises(ValueError):
        TheoremCheck("x", 4, True, {"bad": 1})
    with pytest.raises(ValueError):
        TheoremCheck("x", 4, False)
    obj = json.loads(TheoremCheck("x", 6, False, {"row": 1}).to_json())
    assert obj == {"name": "x", "n": 6, "passed": False, "witness": {"row": 1}}


def test_closed_form_inverse_w6(w6_inverse, w6_laplacian):
    dec = closed_form_inverse(6)
    assert dec.total == w6_inverse
    assert dec.laplacian_part == w6_laplacian.scale(Fraction(-1, 2))
    assert dec.laplacian_part + dec.rank_one_part == dec.total


def test_closed_form_inverse_w4():
    assert closed_form_inverse(4).total == Matrix.ones(4).scale(Fraction(1, 3)) - Matrix.identity(4)


def test_closed_form_inverse_matches_gauss_jordan():
    assert closed_form_inverse(10).total == gauss_jordan_inverse(distance_matrix(10))


def test_closed_form_inverse_rejects_odd():
    with pytest.raises(ValueError, match="det D = 0"):
        closed_form_inverse(7)


@pytest.mark.parametrize("n", [4, 6, 8, 12, 30])
def test_inverse_side_identities(n):
    inv = closed_form_inverse(n).total
    w = Matrix.column(w_vector(n))
    ones = Matrix.ones(n, 1)
    assert ones.T @ inv == w.T.scale(Fraction(4, n - 1))
    assert rank(w @ w.T) == 1
    assert sum(w_vector(n)) == 1


@pytest.mark.parametrize("n", [4, 6, 8, 10, 16])
def test_all_exact_checks_pass(n):
    checks = [
        check_distance_bfs(n),
        check_inverse_formula(n),
        check_ld_identity(n),
        check_dw_identity(n),
        check_rank_and_kernel(n),
        check_laplacian_shape(n),
        check_moore_penrose(n),
        check_edm_decomposition(n),
        check_cofactor_theorem(n),
        check_determinant_formula(n),
        check_alternating_sum(n),
    ]
    if n >= 6:
        checks += [check_q_rows(n), check_f_vector(n)]
    failed = [c for c in checks if not c.passed]
    assert not failed


def test_dw_identity_values():
    d6 = distance_matrix(6)
    assert (d6 @ Matrix.column(w_vector(6))).column_vector(0) == (Fraction(5, 4),) * 6
    d4 = distance_matrix(4)
    assert (d4 @ Matrix.column(w_vector(4))).column_vector(0) == (Fraction(3, 4),) * 4
    assert check_dw_identity(200).passed


def test_rank_values():
    assert check_rank_and_kernel(6).detail["rank"] == 5
    assert check_rank_and_kernel(4).detail["rank"] == 3
    assert check_rank_and_kernel(100).detail["rank"] == 99


def test_ld_identity_negative_control():
    lap = special_laplacian(6)
    bad = lap.with_entry(2, 4, lap[2, 4] + 1)
    res = check_ld_identity(6, laplacian=bad)
    assert not res.passed
    assert res.witness["what"] == "L D + 2I"
    assert res.witness["row"] == 3


def test_pseudo_inverse_n4():
    # -P(J - I)P/2 = P/2 because PJP = 0 and P^2 = P
    assert pseudo_inverse_from_distance(4) == centering_matrix(4).scale(Fraction(1, 2))


@pytest.mark.parametrize("n", [4, 6, 8, 20])
def test_pseudo_inverse_kernel(n):
    pinv = pseudo_inverse_from_distance(n)
    assert set(pinv.row_sums()) == {0}
    assert special_laplacian(n) @ pinv == centering_matrix(n)


def test_edm_decomposition_negative_control():
    assert check_edm_decomposition(6).passed
    assert check_edm_decomposition(8).passed
    for n in (6, 8):
        res = check_edm_decomposition(n, zero_diagonal=True)
        assert not res.passed and res.witness["what"] == "reconstructed D"


def test_cofactor_values():
    assert check_cofactor_theorem(6).passed
    assert check_cofactor_theorem(4).passed
    res = check_cofactor_theorem(12)
    assert res.passed and res.detail["positions_checked"] == 144 and res.detail["determinant_lemma"]
    big = check_cofactor_theorem(18)
    assert big.passed and big.detail["positions_checked"] == 3


def test_cofactor_negative_control():
    lap = special_laplacian(6)
    res = check_cofactor_theorem(6, laplacian=lap.with_entry(0, 0, lap[0, 0] + 1))
    assert not res.passed and res.witness["what"] == "cofactor"


@pytest.mark.parametrize("n, passed", [(6, True), (7, True), (4, True)])
def test_determinant_formula(n, passed):
    assert check_determinant_formula(n).passed is passed


def test_determinant_formula_detects_wrong_matrix():
    res = check_determinant_formula(6, distance=Matrix.identity(6))
    assert not res.passed and res.witness["actual"] == "1" and res.witness["expected"] == "-5"


def test_singular_odd():
    assert check_singular_odd(7).passed
    assert check_singular_odd(9).passed
    with pytest.raises(ValueError):
        check_singular_odd(8)


@pytest.mark.parametrize("n", [6, 10])
def test_every_single_entry_mutation_is_caught(n):
    lap = special_laplacian(n)
    d = distance_matrix(n)
    for i in range(n):
        for j in range(n):
            bad_l = lap.with_entry(i, j, lap[i, j] + 1)
            assert not check_ld_identity(n, laplacian=bad_l).passed, (i, j)
            bad_d = d.with_entry(i, j, d[i, j] + 1)
            caught = not check_ld_identity(n, distance=bad_d).passed or not check_dw_identity(
                n, distance=bad_d
            ).passed
            assert caught, (i, j)
