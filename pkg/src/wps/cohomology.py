"""Divisor classes, rational homology and sheaf cohomology dimensions.

Every quantity here depends only on the reduced weights, so all
operations reduce their input internally.  Line-bundle and twisted
``p``-form cohomology comes down to binomial sums over lattice points
of dilated polytopes graded by smallest-face dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .lattice import count_points, face_histogram
from .linalg import DimensionError
from .weights import WeightsVector, reduce_weights


@dataclass(frozen=True)
class DivisorClassInfo:
    """Generators and numerical invariants of the divisor class groups.

    ``chow_generator`` is an integer solution of
    ``sum q'_j b_j = 1`` over the reduced weights; the Picard group sits
    inside the class group with index ``picard_index`` (the lcm of the
    reduced weights).  A multiple ``k`` of the class generator is ample
    exactly when the index divides ``k``.
    """

    chow_generator: tuple[int, ...]
    picard_index: int
    canonical_degree: Fraction
    gorenstein: bool
    fano: bool

    def is_ample(self, k: int) -> bool:
        return k > 0 and k % self.picard_index == 0


def _extended_gcd_combination(values: tuple[int, ...]) -> tuple[int, ...]:
    """Coefficients ``b`` with ``sum values[j] * b[j] = gcd(values)``."""

    def ext(a: int, b: int) -> tuple[int, int, int]:
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            quo = old_r // r
            old_r, r = r, old_r - quo * r
            old_s, s = s, old_s - quo * s
            old_t, t = t, old_t - quo * t
        return old_r, old_s, old_t

    coeffs = [1]
    g = values[0]
    for v in values[1:]:
        g2, x, y = ext(g, v)
        coeffs = [c * x for c in coeffs] + [y]
        g = g2
    assert g == sum(c * v for c, v in zip(coeffs, values))
    return tuple(coeffs)


def divisor_info(q: WeightsVector) -> DivisorClassInfo:
    """Divisor-class data of the space presented by ``q``."""
    if q.n < 1:
        raise DimensionError("need at least two weights")
    red = reduce_weights(q)
    b = _extended_gcd_combination(red.q)
    delta = red.delta
    total = red.total
    gorenstein = total % delta == 0
    return DivisorClassInfo(
        chow_generator=b,
        picard_index=delta,
        canonical_degree=Fraction(-total, delta),
        gorenstein=gorenstein,
        fano=gorenstein,
    )


def rational_homology(q: WeightsVector) -> tuple[int, ...]:
    """Rational Betti numbers ``h_0, ..., h_{2n}``.

    Evaluated from the alternating cone-count sum for a complete
    simplicial fan with ``n+1`` rays; every even entry must come out 1
    and every odd entry 0.
    """
    n = q.n
    if n < 1:
        raise DimensionError("need at least two weights")
    out = []
    for k in range(n + 1):
        h2k = sum((-1) ** (i - k) * comb(i, k) * comb(n + 1, n - i)
                  for i in range(k, n + 1))
        if h2k != 1:
            raise AssertionError(f"even Betti number b_{2 * k} = {h2k} != 1")
        out.append(h2k)
        out.append(0)
    return tuple(out[:2 * n + 1])


def h0_line_bundle(q: WeightsVector, m: int) -> int:
    """Global sections of the ``m``-th power of the Picard generator."""
    if m < 0:
        return 0
    return count_points(q, m)


def hodge(q: WeightsVector, p: int, qq: int, m: int) -> int:
    """Dimension of the ``qq``-th cohomology of twisted ``p``-forms.

    Three regimes: degree 0 counts lattice points of the ``m``-th dilate
    weighted by ``C(s, p)`` over the smallest-face dimension ``s``;
    intermediate degrees vanish away from ``m = 0`` and are Kronecker
    delta at 0; top degree mirrors degree 0 under ``(p, m) ->
    (n - p, -m)``.
    """
    n = q.n
    if not (0 <= p <= n and 0 <= qq <= n):
        raise IndexError(f"form degree and cohomology degree must lie in [0, {n}]")
    if qq == 0:
        if m < 0:
            return 0
        return sum(ways * comb(s, p) for s, ways in face_histogram(q, m).items())
    if qq < n:
        if m != 0:
            return 0
        return 1 if p == qq else 0
    if m > 0:
        return 0
    return sum(ways * comb(s, n - p) for s, ways in face_histogram(q, -m).items())


@dataclass(frozen=True)
class HodgeTable:
    """Cohomology dimensions indexed by ``(p, q, m)``."""

    n: int
    entries: dict[tuple[int, int, int], int]

    def cell(self, p: int, qq: int, m: int) -> int:
        return self.entries[(p, qq, m)]

    def to_json(self) -> dict:
        cells = [{"p": p, "q": qq, "m": str(m), "h": str(h)}
                 for (p, qq, m), h in sorted(self.entries.items())]
        return {"n": self.n, "entries": cells}


def hodge_table(q: WeightsVector, m_range: tuple[int, int]) -> HodgeTable:
    """Full table of ``hodge`` values for ``m`` in the inclusive range."""
    lo, hi = m_range
    if lo > hi:
        raise ValueError("empty range")
    n = q.n
    entries = {}
    for m in range(lo, hi + 1):
        for p in range(n + 1):
            for qq in range(n + 1):
                entries[(p, qq, m)] = hodge(q, p, qq, m)
    return HodgeTable(n=n, entries=entries)
