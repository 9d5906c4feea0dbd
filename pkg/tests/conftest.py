from fractions import Fraction

import pytest

from wheelinv.exact import Matrix

# Matrices printed for the six-vertex wheel.
W6_DISTANCE = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 2, 2, 1],
    [1, 1, 0, 1, 2, 2],
    [1, 2, 1, 0, 1, 2],
    [1, 2, 2, 1, 0, 1],
    [1, 1, 2, 2, 1, 0],
]
W6_TWICE_LAPLACIAN = [
    [5, -1, -1, -1, -1, -1],
    [-1, 5, -3, 1, 1, -3],
    [-1, -3, 5, -3, 1, 1],
    [-1, 1, -3, 5, -3, 1],
    [-1, 1, 1, -3, 5, -3],
    [-1, -3, 1, 1, -3, 5],
]
W6_FIVE_INVERSE = [
    [-6, 1, 1, 1, 1, 1],
    [1, -6, 4, -1, -1, 4],
    [1, 4, -6, 4, -1, -1],
    [1, -1, 4, -6, 4, -1],
    [1, -1, -1, 4, -6, 4],
    [1, 4, -1, -1, 4, -6],
]
W6_EDGES = [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6), (2, 6)]


def naive_matmul(a, b):
    """Triple-loop product on nested lists of Fractions."""
    return [
        [sum((Fraction(a[i][k]) * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def leibniz_det(rows):
    """Cofactor expansion along the first row; only for tiny matrices."""
    if len(rows) == 1:
        return Fraction(rows[0][0])
    return sum(
        (-1) ** j * Fraction(rows[0][j]) * leibniz_det([r[:j] + r[j + 1 :] for r in rows[1:]])
        for j in range(len(rows))
    )


@pytest.fixture
def w6_distance():
    return Matrix(W6_DISTANCE)


@pytest.fixture
def w6_laplacian():
    return Matrix(W6_TWICE_LAPLACIAN).scale(Fraction(1, 2))


@pytest.fixture
def w6_inverse():
    return Matrix(W6_FIVE_INVERSE).scale(Fraction(1, 5))
