"""Wheel graphs, their distance matrices and the special Laplacian.

Vertices carry 1-based labels in every public interface: the hub is vertex 1
and the rim vertices 2, ..., n are joined in order around a cycle.  Matrices
and vectors are stored 0-based as usual, so vertex ``v`` is row ``v - 1``.

Every closed form here has an independent computation next to it (BFS for
distances, exact vector-matrix products for the row vectors ``q^k``, direct
summation for ``f``); the tests tie each pair together.
"""

from __future__ import annotations

import json
from collections import deque
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import CirculantSpec, Matrix, circulant, vec_mat

__all__ = [
    "WheelModel",
    "build_wheel",
    "cycle_adjacency",
    "bfs_distances",
    "distance_generator",
    "distance_matrix",
    "c_vector",
    "laplacian_weight",
    "special_laplacian",
    "alternating_sum_identity",
    "q_row",
    "q_row_closed_form",
    "f_vector",
    "f_vector_direct",
    "w_vector",
]


def _require_even(n: int, minimum: int = 4) -> None:
    if n % 2 or n < minimum:
        raise ValueError(f"even n required (n >= {minimum}), got n={n}")


@dataclass(frozen=True)
class WheelModel:
    """The wheel ``W_n``: hub 1 joined to the rim cycle 2 - 3 - ... - n - 2."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Sorted 1-based edge list with ``i < j``."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.adjacency[i][j]
        ]

    def degree(self, vertex: int) -> int:
        return sum(self.adjacency[vertex - 1])

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text: str) -> "WheelModel":
        obj = json.loads(text)
        n = obj["n"]
        adj = [[0] * n for _ in range(n)]
        for i, j in obj["edges"]:
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ValueError(f"bad edge {(i, j)} for n={n}")
            adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1
        model = cls(n, tuple(tuple(r) for r in adj))
        if model != build_wheel(n):
            raise ValueError("edge list is not the labelled wheel W_n")
        return model


def build_wheel(n: int) -> WheelModel:
    if n < 4:
        raise ValueError(f"too small: a wheel needs n >= 4 vertices, got {n}")
    adj = [[0] * n for _ in range(n)]
    for v in range(1, n):
        adj[0][v] = adj[v][0] = 1
        nxt = v + 1 if v + 1 < n else 1
        adj[v][nxt] = adj[nxt][v] = 1
    return WheelModel(n, tuple(tuple(r) for r in adj))


def cycle_adjacency(m: int) -> tuple[tuple[int, ...], ...]:
    """Adjacency of the cycle ``C_m`` on vertices 1..m (for non-wheel controls)."""
    adj = [[0] * m for _ in range(m)]
    for i in range(m):
        j = (i + 1) % m
        adj[i][j] = adj[j][i] = 1
    return tuple(tuple(r) for r in adj)


def bfs_distances(graph: WheelModel | Sequence[Sequence[int]]) -> Matrix:
    """All-pairs shortest path lengths by breadth-first search from each vertex."""
    adj = graph.adjacency if isinstance(graph, WheelModel) else graph
    n = len(adj)
    nbrs = [[j for j in range(n) if adj[i][j]] for i in range(n)]
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if dist[s, v] < 0:
                    dist[s, v] = dist[s, u] + 1
                    queue.append(v)
        if (dist[s] < 0).any():
            raise ValueError("graph is disconnected")
    return Matrix.from_scaled(dist)


def distance_generator(n: int) -> tuple[int, ...]:
    """First row of the rim block: ``(0, 1, 2, ..., 2, 1)`` with ``n - 4`` twos."""
    if n < 4:
        raise ValueError(f"too small: n >= 4 required, got {n}")
    return (0, 1) + (2,) * (n - 4) + (1,)


@lru_cache(maxsize=64)
def distance_matrix(n: int) -> Matrix:
    """Distance matrix of ``W_n`` in block form ``[[0, 1'], [1, Circ(u')]]``.

    Valid for odd as well as even ``n``.
    """
    gen = distance_generator(n)
    m = n - 1
    idx = (np.arange(m)[None, :] - np.arange(m)[:, None]) % m
    d = np.ones((n, n), dtype=np.int64)
    d[0, 0] = 0
    d[1:, 1:] = np.asarray(gen, dtype=np.int64)[idx]
    return Matrix.from_scaled(d)


def c_vector(n: int, k: int) -> tuple[int, ...]:
    """Indicator of positions ``k + 1`` and ``n - k`` (1-based) in length ``n - 1``."""
    _require_even(n)
    if not 1 <= k <= n // 2 - 1:
        raise ValueError(f"k must lie in [1, {n // 2 - 1}], got {k}")
    return tuple(int(j in (k + 1, n - k)) for j in range(1, n))


def laplacian_weight(n: int, k: int) -> Fraction:
    """Signed weight ``(-1)^k (n - 1 - 2k) / 2`` of the k-th circulant block."""
    return Fraction((-1) ** k * (n - 1 - 2 * k), 2)


@lru_cache(maxsize=64)
def special_laplacian(n: int) -> Matrix:
    """The special Laplacian of ``W_n`` (even ``n``)."""
    _require_even(n)
    # work with 2 * L to stay in integers
    two_l = (n - 1) * np.eye(n, dtype=np.int64)
    two_l[0, 1:] -= 1
    two_l[1:, 0] -= 1
    for k in range(1, n // 2):
        ck = circulant(CirculantSpec(c_vector(n, k))).numerators().astype(np.int64)
        two_l[1:, 1:] += (-1) ** k * (n - 1 - 2 * k) * ck
    return Matrix.from_scaled(two_l, 2)


def alternating_sum_identity(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``sum_k (-1)^k (n - 1 - 2k) = (2 - n) / 2``."""
    _require_even(n)
    lhs = sum(Fraction((-1) ** k * (n - 1 - 2 * k)) for k in range(1, n // 2))
    return lhs, Fraction(2 - n, 2)


def q_row(n: int, k: int) -> tuple[Fraction, ...]:
    """``c^k' D~`` by exact vector-matrix multiplication."""
    return vec_mat(c_vector(n, k), _rim_block(n))


@lru_cache(maxsize=8)
def _rim_block(n: int) -> Matrix:
    return circulant(CirculantSpec(distance_generator(n)))


def q_row_closed_form(n: int, k: int) -> tuple[Fraction, ...]:
    """Closed form of ``c^k' D~`` from the case table (even ``n >= 6``).

    ``k = 1`` gives ``(2, 2, 3, 4, ..., 4, 3, 2)``, ``k = n/2 - 1`` gives
    ``(4, ..., 4, 3, 1, 1, 3, 4, ..., 4)``, and in between the entries are 2 at
    ``{k+1, n-k}``, 3 at ``{k, k+2, n-k-1, n-k+1}`` and 4 elsewhere.  For
    ``n = 4`` the two end cases collide and no closed form is offered.
    """
    _require_even(n, 6)
    half = n // 2
    if not 1 <= k <= half - 1:
        raise ValueError(f"k must lie in [1, {half - 1}], got {k}")
    if k == 1:
        row = (2, 2, 3) + (4,) * (n - 6) + (3, 2)
    elif k == half - 1:
        row = (4,) * (half - 2) + (3, 1, 1, 3) + (4,) * (half - 3)
    else:
        twos = {k + 1, n - k}
        threes = {k, k + 2, n - k - 1, n - k + 1}
        row = tuple(2 if j in twos else 3 if j in threes else 4 for j in range(1, n))
    return tuple(Fraction(x) for x in row)


def f_vector_direct(n: int) -> tuple[Fraction, ...]:
    """``sum_k (-1)^k ((n - 1 - 2k) / 2) q^k`` by direct summation."""
    _require_even(n)
    total = [Fraction(0)] * (n - 1)
    for k in range(1, n // 2):
        wk = laplacian_weight(n, k)
        total = [t + wk * q for t, q in zip(total, q_row(n, k))]
    return tuple(total)


def f_vector(n: int) -> tuple[Fraction, ...]:
    """Closed form ``(-1, (3-n)/2, 2-n, ..., 2-n, (3-n)/2)`` of length ``n - 1``."""
    _require_even(n, 6)
    edge = Fraction(3 - n, 2)
    return (Fraction(-1), edge) + (Fraction(2 - n),) * (n - 4) + (edge,)


def w_vector(n: int) -> tuple[Fraction, ...]:
    """``(1/4)(5 - n, 1, ..., 1)``; its components sum to 1."""
    _require_even(n)
    return (Fraction(5 - n, 4),) + (Fraction(1, 4),) * (n - 1)
