"""Lattice-point counts in dilates of the minimal wps polytope.

Lattice points of the ``m``-th dilate correspond to nonnegative integer
solutions of ``sum q'_j x_j = m * delta'`` over the reduced weights, and
the dimension of the smallest face containing a point is ``n`` minus the
number of vanishing coordinates.  Counting is dynamic programming over
that equation; the exponential geometric enumeration lives only in the
test suite as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .weights import WeightsVector, reduce_weights


@dataclass(frozen=True)
class LatticePoint:
    """A solution of the weighted composition equation with its face data.

    ``face_dim`` is the dimension of the smallest face of the dilated
    polytope containing the point: the ambient dimension minus the
    number of vanishing coordinates.
    """

    composition: tuple[int, ...]
    face_dim: int

    def __post_init__(self):
        n = len(self.composition) - 1
        if any(x < 0 for x in self.composition):
            raise ValueError("composition entries must be nonnegative")
        zeros = sum(1 for x in self.composition if x == 0)
        if self.face_dim != n - zeros:
            raise ValueError(f"face_dim {self.face_dim} does not match {zeros} zeros")

    @property
    def interior(self) -> bool:
        return all(x > 0 for x in self.composition)


def _target(q: WeightsVector, m: int) -> tuple[tuple[int, ...], int]:
    red = reduce_weights(q)
    return red.q, m * red.delta


def _solution_count(weights: tuple[int, ...], target: int) -> int:
    """Number of nonnegative solutions of ``sum w_j x_j = target``."""
    if target < 0:
        return 0
    table = [0] * (target + 1)
    table[0] = 1
    for w in weights:
        for t in range(w, target + 1):
            table[t] += table[t - w]
    return table[target]


def count_points(q: WeightsVector, m: int) -> int:
    """Lattice points of the ``m``-th dilate of the minimal polytope."""
    if m < 0:
        raise ValueError("dilation factor must be nonnegative")
    weights, target = _target(q, m)
    return _solution_count(weights, target)


def lattice_points(q: WeightsVector, m: int) -> Iterator[LatticePoint]:
    """Enumerate the points of the ``m``-th dilate (``m >= 1``).

    Intended for inspection and small cases; counting goes through the
    polynomial-time routines below instead.
    """
    if m < 1:
        raise ValueError("enumeration needs a positive dilation factor")
    weights, target = _target(q, m)
    n = len(weights) - 1

    def solve(j: int, remaining: int, acc: tuple[int, ...]):
        if j == n:
            if remaining % weights[n] == 0:
                yield acc + (remaining // weights[n],)
            return
        for x in range(remaining // weights[j] + 1):
            yield from solve(j + 1, remaining - x * weights[j], acc + (x,))

    for comp in solve(0, target, ()):
        zeros = sum(1 for x in comp if x == 0)
        yield LatticePoint(composition=comp, face_dim=n - zeros)


def count_interior(q: WeightsVector, m: int) -> int:
    """Lattice points with every coordinate positive (interior points)."""
    if m < 1:
        raise ValueError("dilation factor must be positive")
    weights, target = _target(q, m)
    return _solution_count(weights, target - sum(weights))


def face_histogram(q: WeightsVector, m: int) -> dict[int, int]:
    """Point counts of the ``m``-th dilate keyed by smallest-face dimension.

    A solution with ``z`` zero coordinates sits on a face of dimension
    ``n - z``; the zero dilate is the single vertex of a point.
    """
    if m < 0:
        raise ValueError("dilation factor must be nonnegative")
    n = q.n
    if m == 0:
        return {0: 1}
    weights, target = _target(q, m)
    # table[t][p] = ways to reach sum t using the weights seen so far
    # with exactly p of them positive
    table = [[0] * (n + 2) for _ in range(target + 1)]
    table[0][0] = 1
    for w in weights:
        positive = [[0] * (n + 2) for _ in range(target + 1)]
        for t in range(w, target + 1):
            prev, cur = table[t - w], positive[t - w]
            row = positive[t]
            for p in range(1, n + 2):
                row[p] = prev[p - 1] + cur[p]
        for t in range(target + 1):
            row, pos = table[t], positive[t]
            for p in range(n + 2):
                row[p] += pos[p]
    hist: dict[int, int] = {}
    for p, ways in enumerate(table[target]):
        if ways and p >= 1:
            hist[p - 1] = ways
    return hist
