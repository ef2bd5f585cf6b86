"""Weights vectors and their reduction data.

A weights vector is a tuple of coprime positive integers
``(q_0, ..., q_n)``.  Each entry ``q_j`` carries a complementary gcd
``d_j`` (gcd of all the other weights); dividing ``q_j`` by the lcm of
the other ``d``'s produces the reduced vector, which presents the same
weighted projective space on a coarser lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .linalg import DimensionError


@dataclass(frozen=True)
class WeightsVector:
    """Coprime positive weights ``(q_0, ..., q_n)``.

    The constructor silently divides out a common factor of the input
    (the spaces are canonically isomorphic), so the stored tuple always
    has gcd 1.  Order is significant and preserved.
    """

    q: tuple[int, ...]

    def __post_init__(self):
        if not self.q:
            raise ValueError("weights vector must be nonempty")
        qs = tuple(int(x) for x in self.q)
        if any(x < 1 for x in qs):
            raise ValueError(f"weights must be positive, got {qs}")
        g = gcd(*qs)
        if g > 1:
            qs = tuple(x // g for x in qs)
        object.__setattr__(self, "q", qs)

    @classmethod
    def parse(cls, text: str) -> "WeightsVector":
        """Parse a comma-separated decimal list like ``"2,3,4,15,25"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty weights list")
        return cls(tuple(int(p, 10) for p in parts))

    @classmethod
    def from_json(cls, items) -> "WeightsVector":
        return cls(tuple(int(str(x), 10) for x in items))

    def to_json(self) -> list[str]:
        return [str(x) for x in self.q]

    @property
    def n(self) -> int:
        """Dimension of the associated space (one less than the length)."""
        return len(self.q) - 1

    @property
    def total(self) -> int:
        return sum(self.q)

    @property
    def delta(self) -> int:
        return lcm(*self.q)

    def __iter__(self):
        return iter(self.q)

    def __len__(self):
        return len(self.q)

    def __getitem__(self, j):
        return self.q[j]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.q) + ")"


@dataclass(frozen=True)
class ReductionData:
    """Per-weight gcd/lcm bookkeeping and the reduced vector.

    ``d[j]`` is the gcd of all weights except ``q_j``; ``a_coeffs[j]``
    the lcm of the other ``d``'s; ``a`` their common lcm.  The reduced
    weights are ``q_j // a_coeffs[j]`` and ``delta == a * delta_reduced``.
    """

    d: tuple[int, ...]
    a_coeffs: tuple[int, ...]
    a: int
    delta: int
    delta_reduced: int
    reduced: WeightsVector


def _complementary(values: tuple[int, ...], combine, empty: int) -> tuple[int, ...]:
    out = []
    for j in range(len(values)):
        rest = values[:j] + values[j + 1:]
        out.append(combine(*rest) if rest else empty)
    return tuple(out)


def reduction_data(q: WeightsVector) -> ReductionData:
    """Compute the full reduction data of a weights vector."""
    d = _complementary(q.q, gcd, 1)
    a_coeffs = _complementary(d, lcm, 1)
    a = lcm(*a_coeffs)
    reduced = tuple(x // ax for x, ax in zip(q.q, a_coeffs))
    if any(x % ax for x, ax in zip(q.q, a_coeffs)):
        raise AssertionError("reduction coefficients do not divide the weights")
    red = WeightsVector(reduced)
    if red.q != reduced:
        raise AssertionError("reduced vector is not coprime")
    delta = q.delta
    delta_reduced = red.delta
    if delta != a * delta_reduced:
        raise AssertionError("lcm factorization failed")
    return ReductionData(d=d, a_coeffs=a_coeffs, a=a, delta=delta,
                         delta_reduced=delta_reduced, reduced=red)


def reduce_weights(q: WeightsVector) -> WeightsVector:
    return reduction_data(q).reduced


def is_reduced(q: WeightsVector) -> bool:
    """True when every complementary gcd ``d_j`` equals 1."""
    return all(x == 1 for x in _complementary(q.q, gcd, 1))


def isomorphic(q1: WeightsVector, q2: WeightsVector) -> bool:
    """Whether the two weights vectors present isomorphic spaces.

    Equivalent to equality of the sorted reduced weights; spaces of
    different dimension are a caller error.
    """
    if q1.n != q2.n:
        raise DimensionError(f"dimension mismatch: {q1.n} vs {q2.n}")
    return tuple(sorted(reduce_weights(q1).q)) == tuple(sorted(reduce_weights(q2).q))
