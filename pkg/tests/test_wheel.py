from fractions import Fraction

import pytest

from wheelinv.exact import CirculantSpec, Matrix, circulant, has_tail_symmetry
from wheelinv.wheel import (
    WheelModel,
    alternating_sum_identity,
    bfs_distances,
    build_wheel,
    c_vector,
    cycle_adjacency,
    distance_generator,
    distance_matrix,
    f_vector,
    f_vector_direct,
    q_row,
    q_row_closed_form,
    special_laplacian,
    w_vector,
)

from conftest import W6_DISTANCE, W6_EDGES, W6_TWICE_LAPLACIAN

EVEN = list(range(4, 201, 2))


def test_w4_is_complete():
    g = build_wheel(4)
    assert g.adjacency == tuple(tuple(int(i != j) for j in range(4)) for i in range(4))


def test_w6_edges_match_figure():
    assert sorted(build_wheel(6).edges) == sorted(tuple(sorted(e)) for e in W6_EDGES)


def test_build_wheel_rejects_small():
    with pytest.raises(ValueError, match="too small"):
        build_wheel(3)


@pytest.mark.parametrize("n", [5, 6, 9, 30])
def test_wheel_degrees(n):
    g = build_wheel(n)
    assert g.degree(1) == n - 1
    assert all(g.degree(v) == 3 for v in range(2, n + 1))


def test_edge_list_json_round_trip():
    g = build_wheel(8)
    text = g.to_json()
    assert text.startswith('{"n": 8, "edges": [[1, 2]')
    assert WheelModel.from_json(text) == g
    with pytest.raises(ValueError):
        WheelModel.from_json('{"n": 4, "edges": [[1, 2]]}')


def test_bfs_examples():
    assert bfs_distances(build_wheel(6)) == Matrix(W6_DISTANCE)
    assert bfs_distances(build_wheel(4)) == Matrix.ones(4) - Matrix.identity(4)
    d = bfs_distances(build_wheel(11))
    assert d.row_vector(0) == (0,) + (1,) * 10


def test_bfs_rejects_disconnected():
    with pytest.raises(ValueError, match="disconnected"):
        bfs_distances([[0, 0], [0, 0]])


def test_distance_matrix_examples():
    assert distance_matrix(6) == Matrix(W6_DISTANCE)
    assert distance_generator(8) == (0, 1, 2, 2, 2, 2, 1)
    assert distance_matrix(8).row_vector(1)[1:] == (0, 1, 2, 2, 2, 2, 1)
    rim4 = [row[1:] for row in distance_matrix(4).to_rows()[1:]]
    assert Matrix(rim4) == circulant(CirculantSpec((0, 1, 1)))
    with pytest.raises(ValueError):
        distance_matrix(3)


def test_distance_matrix_equals_bfs_for_all_n():
    for n in range(4, 201):
        assert distance_matrix(n) == bfs_distances(build_wheel(n)), n


@pytest.mark.parametrize("n", [4, 5, 10, 51, 200])
def test_distance_invariants(n):
    d = distance_matrix(n)
    assert d.is_symmetric() and d.is_hollow()
    rim = Matrix([row[1:] for row in d.to_rows()[1:]])
    assert rim.row_sums() == (2 * (n - 3),) * (n - 1)


@pytest.mark.parametrize(
    "n, k, expected",
    [(6, 1, (0, 1, 0, 0, 1)), (6, 2, (0, 0, 1, 1, 0)), (8, 3, (0, 0, 0, 1, 1, 0, 0))],
)
def test_c_vector_examples(n, k, expected):
    assert c_vector(n, k) == expected


def test_c_vector_range():
    with pytest.raises(ValueError):
        c_vector(8, 4)
    with pytest.raises(ValueError):
        c_vector(8, 0)


@pytest.mark.parametrize("n", [4, 6, 12, 40])
def test_circulant_blocks_have_row_sum_two(n):
    for k in range(1, n // 2):
        ck = circulant(CirculantSpec(c_vector(n, k)))
        assert ck.row_sums() == (2,) * (n - 1)


def test_special_laplacian_examples():
    assert special_laplacian(6) == Matrix(W6_TWICE_LAPLACIAN).scale(Fraction(1, 2))
    assert special_laplacian(4) == Matrix.identity(4).scale(2) - Matrix.ones(4).scale(Fraction(1, 2))
    for bad in (3, 5, 7, 2):
        with pytest.raises(ValueError, match="even n required"):
            special_laplacian(bad)


def test_special_laplacian_invariants():
    for n in EVEN:
        lap = special_laplacian(n)
        assert lap.is_symmetric()
        assert set(lap.row_sums()) == {0}
        assert set(lap.diagonal()) == {Fraction(n - 1, 2)}


@pytest.mark.parametrize("n, value", [(4, -1), (6, -2), (8, -3)])
def test_alternating_sum_examples(n, value):
    assert alternating_sum_identity(n) == (value, value)


def test_alternating_sum_all_even():
    for n in EVEN:
        lhs, rhs = alternating_sum_identity(n)
        assert lhs == rhs


def _q_by_rows(n, k):
    # independent route: add rows k+1 and n-k of the BFS rim block
    d = bfs_distances(build_wheel(n)).to_rows()
    rim = [row[1:] for row in d[1:]]
    return tuple(a + b for a, b in zip(rim[k], rim[n - k - 1]))


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (8, 1, (2, 2, 3, 4, 4, 3, 2)),
        (8, 3, (4, 4, 3, 1, 1, 3, 4)),
        (6, 1, (2, 2, 3, 3, 2)),
        (6, 2, (4, 3, 1, 1, 3)),
        (10, 2, (4, 3, 2, 3, 4, 4, 3, 2, 3)),
    ],
)
def test_q_row_closed_form_examples(n, k, expected):
    assert q_row_closed_form(n, k) == expected
    assert _q_by_rows(n, k) == expected
    assert q_row(n, k) == expected


def test_q_row_closed_form_rejects_n4():
    with pytest.raises(ValueError):
        q_row_closed_form(4, 1)


def test_q_rows_match_products_small_sweep():
    for n in range(6, 41, 2):
        for k in range(1, n // 2):
            q = q_row_closed_form(n, k)
            assert q == q_row(n, k) == _q_by_rows(n, k), (n, k)
            assert has_tail_symmetry(q)


def test_f_vector_examples():
    assert f_vector(6) == (-1, Fraction(-3, 2), -4, -4, Fraction(-3, 2))
    assert f_vector(8) == (-1, Fraction(-5, 2), -6, -6, -6, -6, Fraction(-5, 2))
    assert f_vector_direct(6) == f_vector(6)
    assert f_vector_direct(8) == f_vector(8)
    with pytest.raises(ValueError):
        f_vector(7)


def test_f_vector_components():
    for n in range(8, 61, 2):
        f = f_vector_direct(n)
        assert f[0] == -1
        assert f[1] == Fraction(3 - n, 2)
        assert all(fj == 2 - n for fj in f[2 : n // 2])
        assert has_tail_symmetry(f)


def test_f_direct_at_n4():
    # the closed form is not claimed for n = 4; record what the sum gives
    assert f_vector_direct(4) == (-1, Fraction(-1, 2), Fraction(-1, 2))


def test_w_vector_examples():
    assert w_vector(6) == tuple(Fraction(x, 4) for x in (-1, 1, 1, 1, 1, 1))
    assert w_vector(4) == (Fraction(1, 4),) * 4
    for n in EVEN:
        assert sum(w_vector(n)) == 1


def test_cycle_control_distances():
    d = bfs_distances(cycle_adjacency(6))
    assert d.row_vector(0) == (0, 1, 2, 3, 2, 1)
