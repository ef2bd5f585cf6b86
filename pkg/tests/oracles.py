"""Independent oracles used by the test suite.

Everything here deliberately re-derives results through a different
route than the production code: cofactor expansion instead of
elimination, direct diophantine solving instead of HNF normalization,
and geometric half-space enumeration instead of composition counting.
"""

from __future__ import annotations

from math import gcd

from wps.linalg import IntMatrix, adjoint


# ---------------------------------------------------------------------------
# adjugate by recursive cofactor expansion


def adjugate_cofactor(rows):
    n = len(rows)

    def det(rs):
        if not rs:
            return 1
        if len(rs) == 1:
            return rs[0][0]
        return sum((-1) ** j * rs[0][j] * det([r[:j] + r[j + 1:] for r in rs[1:]])
                   for j in range(len(rs)))

    def minor(i, j):
        return [list(r[:j]) + list(r[j + 1:]) for k, r in enumerate(rows) if k != i]

    return [[(-1) ** (i + j) * det(minor(j, i)) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# extended Euclid, for by-hand expectations


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# canonical fan by direct diophantine construction
#
# Builds the triangular block column by column from the gcd chain
# k_j = gcd(q_0, q_j, ..., q_n), solving each row equation by modular
# inversion, instead of normalizing an existing fan matrix.


def canonical_fan_diophantine(q: tuple[int, ...]) -> IntMatrix:
    n = len(q) - 1
    assert n >= 1 and gcd(*q) == 1
    k = [0] * (n + 2)           # k[j] for 1 <= j <= n, k[n+1] unused
    for j in range(1, n + 1):
        k[j] = gcd(q[0], *q[j:])
    assert k[1] == 1
    diag = [0] * (n + 1)        # diag[j] = v_jj, 1-based
    for j in range(1, n):
        assert k[j + 1] % k[j] == 0
        diag[j] = k[j + 1] // k[j]
    diag[n] = q[0] // k[n]

    v = [[0] * (n + 1) for _ in range(n + 1)]   # 1-based rows/cols, col 0 = v_0
    for j in range(1, n + 1):
        v[j][j] = diag[j]
        rhs = -q[j] * diag[j]
        if j == n:
            assert rhs % q[0] == 0
            v[n][0] = rhs // q[0]
            continue
        # walk the gcd chain: k_{j+1} z_{j+1} = rhs, then absorb columns
        # j+1 .. n one at a time, keeping each entry in [0, diagonal)
        assert rhs % k[j + 1] == 0
        z = rhs // k[j + 1]
        for col in range(j + 1, n):
            mod = diag[col]                     # = k[col+1] // k[col]
            coeff = q[col] // k[col]
            if mod == 1:
                entry = 0
            else:
                entry = (z * pow(coeff, -1, mod)) % mod
            v[j][col] = entry
            num = k[col] * z - q[col] * entry
            assert num % k[col + 1] == 0
            z = num // k[col + 1]
        mod = diag[n]                           # = q0 // k_n
        coeff = q[n] // k[n]
        entry = 0 if mod == 1 else (z * pow(coeff, -1, mod)) % mod
        v[j][n] = entry
        num = k[n] * z - q[n] * entry
        assert num % q[0] == 0
        v[j][0] = num // q[0]

    return IntMatrix.from_rows([row for row in v[1:]])


# ---------------------------------------------------------------------------
# geometric lattice-point census of m * conv(0, w_1, ..., w_n)
#
# The simplex is described by n+1 integer half spaces (the barycentric
# coordinates scaled by |det W| plus the opposite-facet cap).  Points
# are enumerated coordinate by coordinate with exact Fourier-Motzkin
# bounds.  Along the innermost axis every facet functional is affine
# with integer coefficients, so membership holds throughout a slab once
# both endpoints check out, and the points sitting on a facet are the
# integer roots of those affine functions; everything stays exact.


def _facet_data(w: IntMatrix, m: int):
    n = w.rows
    det = w.det()
    adj = adjoint(w)
    sign = 1 if det > 0 else -1
    big_d = abs(det)
    rows = [[sign * adj.entries[k][i] for i in range(n)] for k in range(n)]
    cap = [sum(r[i] for r in rows) for i in range(n)]
    # a . u >= b form
    ineqs = [(tuple(r), 0) for r in rows]
    ineqs.append((tuple(-x for x in cap), -m * big_d))
    return ineqs, rows, cap, big_d


def _fm_levels(ineqs, n):
    levels = [None] * n
    levels[n - 1] = list(ineqs)
    for t in range(n - 1, 0, -1):
        nxt = []
        pos = [iq for iq in levels[t] if iq[0][t] > 0]
        neg = [iq for iq in levels[t] if iq[0][t] < 0]
        for a, b in levels[t]:
            if a[t] == 0:
                nxt.append((a, b))
        for a, b in pos:
            for c, d in neg:
                coeff_a, coeff_c = -c[t], a[t]
                comb = tuple(coeff_a * a[i] + coeff_c * c[i] for i in range(n))
                nxt.append((comb, coeff_a * b + coeff_c * d))
        levels[t - 1] = nxt
    return levels


def _bounds(level, t, prefix):
    lo, hi = None, None
    feasible = True
    for a, b in level:
        rest = b - sum(a[i] * prefix[i] for i in range(t))
        at = a[t]
        if at > 0:
            cand = -((-rest) // at)
            lo = cand if lo is None else max(lo, cand)
        elif at < 0:
            cand = rest // at
            hi = cand if hi is None else min(hi, cand)
        elif rest > 0:
            feasible = False
    return feasible, lo, hi


def simplex_census(w: IntMatrix, m: int):
    """Count lattice points of ``m * conv(0, columns of w)`` per face dim.

    Returns ``(total, interior, histogram)`` with ``histogram`` keyed by
    the dimension of the smallest containing face.
    """
    n = w.rows
    if m == 0:
        return 1, 0, {0: 1}
    ineqs, rows, cap, big_d = _facet_data(w, m)
    levels = _fm_levels(ineqs, n)
    hist = [0] * (n + 1)
    target = m * big_d
    # innermost-axis view of every facet functional: f = base + coeff * u
    funcs = [(r, r[n - 1]) for r in rows]

    def classify_slab(prefix, lo, hi):
        baseline = 0
        specials: dict[int, int] = {}
        for r, c in funcs:
            base = sum(r[i] * prefix[i] for i in range(n - 1))
            assert base + c * lo >= 0 and base + c * hi >= 0, \
                "facet test violated inside bounds"
            if c == 0:
                baseline += base == 0
            elif base % c == 0:
                root = -base // c
                if lo <= root <= hi:
                    specials[root] = specials.get(root, 0) + 1
        base = target - sum(cap[i] * prefix[i] for i in range(n - 1))
        c = -cap[n - 1]
        assert base + c * lo >= 0 and base + c * hi >= 0, \
            "cap test violated inside bounds"
        if c == 0:
            baseline += base == 0
        elif base % c == 0:
            root = -base // c
            if lo <= root <= hi:
                specials[root] = specials.get(root, 0) + 1
        assert baseline <= n
        hist[n - baseline] += hi - lo + 1 - len(specials)
        for extra in specials.values():
            assert baseline + extra <= n, "too many active facets"
            hist[n - baseline - extra] += 1

    def recurse(t, prefix):
        feasible, lo, hi = _bounds(levels[t], t, prefix)
        if not feasible or lo is None or hi is None or lo > hi:
            return
        if t < n - 1:
            for val in range(lo, hi + 1):
                recurse(t + 1, prefix + (val,))
            return
        classify_slab(prefix, lo, hi)

    recurse(0, ())
    total = sum(hist)
    return total, hist[n], {s: c for s, c in enumerate(hist) if c}


def simplex_census_boxscan(w: IntMatrix, m: int):
    """Tiny reference census: scan the vertex bounding box with exact
    rational barycentric tests.  Only usable for small examples."""
    n = w.rows
    if m == 0:
        return 1, 0, {0: 1}
    inv = w.to_rational().inverse()
    verts = [tuple(0 for _ in range(n))] + [tuple(m * x for x in w.column(k))
                                            for k in range(n)]
    lo = [min(v[i] for v in verts) for i in range(n)]
    hi = [max(v[i] for v in verts) for i in range(n)]
    hist: dict[int, int] = {}

    def points(i, acc):
        if i == n:
            yield acc
            return
        for val in range(lo[i], hi[i] + 1):
            yield from points(i + 1, acc + (val,))

    for u in points(0, ()):
        lam = [sum(inv.entries[k][i] * u[i] for i in range(n)) for k in range(n)]
        if any(x < 0 for x in lam) or sum(lam) > m:
            continue
        active = sum(1 for x in lam if x == 0) + (1 if sum(lam) == m else 0)
        s = n - active
        hist[s] = hist.get(s, 0) + 1
    total = sum(hist.values())
    return total, hist.get(n, 0), hist


# ---------------------------------------------------------------------------
# shared random generators


def random_weights(rng, n_min=1, n_max=5, w_max=50):
    n = rng.randint(n_min, n_max)
    while True:
        q = tuple(rng.randint(1, w_max) for _ in range(n + 1))
        if gcd(*q) == 1:
            return q


def random_unimodular(rng, n, ops=None, c_max=3):
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops if ops is not None else 2 * n + 2):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.randint(-c_max, c_max)
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            rows[i] = [-a for a in rows[i]]
    return IntMatrix.from_rows(rows)


def random_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return tuple(perm)
