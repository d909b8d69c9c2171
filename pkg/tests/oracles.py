"""Independent oracles used by the tests.

These deliberately avoid the code paths they check: the lower-envelope
oracle enumerates affine supports by brute force instead of running the
double-description sweep, and the crossing oracle realizes chords as exact
rational segments and tests proper intersection, instead of applying the
combinatorial crossing rules.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from tropd4.geometry import PointConfiguration, _solve


def brute_force_lower_cells(points, heights):
    """Maximal lower-envelope cells by enumerating affine support sets.

    For every affinely independent (d+1)-subset, solve for the affine
    function through the lifted points; if it supports the lift from below,
    its tight set is a cell.
    """
    config = PointConfiguration(points)
    d = config.dim
    hs = [Fraction(h) for h in heights]
    reduced = config.reduced
    cells = set()
    for subset in itertools.combinations(range(len(reduced)), d + 1):
        columns = [tuple(reduced[i][j] for i in subset) for j in range(d)]
        columns.append(tuple(1 for _ in subset))
        sol = _solve(columns, tuple(hs[i] for i in subset))
        if sol is None:
            continue
        # affinely dependent subsets admit a solution only if consistent;
        # require the subset to determine the function uniquely
        if _affine_rank([reduced[i] for i in subset]) < d:
            continue
        a, c = sol[:d], sol[d]
        values = [sum(ai * ui for ai, ui in zip(a, u)) + c for u in reduced]
        if any(v > h for v, h in zip(values, hs)):
            continue
        cells.add(frozenset(i for i, (v, h) in enumerate(zip(values, hs))
                            if v == h))
    return sorted(cells, key=sorted)


def _affine_rank(pts):
    base = pts[0]
    diffs = [tuple(x - o for x, o in zip(p, base)) for p in pts[1:]]
    rank = 0
    rows = [list(map(Fraction, d)) for d in diffs]
    ncols = len(base)
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


# -- geometric chord realization ----------------------------------------------

# Rational points on the unit circle, ordered by angle in [0, 180), used to
# realize the polygon vertices exactly; vertex k + n is the antipode of k.
_HALF_TURN_DIRECTIONS = {
    3: [(1, 0), (Fraction(3, 5), Fraction(4, 5)),
        (Fraction(-3, 5), Fraction(4, 5))],
    4: [(1, 0), (Fraction(4, 5), Fraction(3, 5)), (0, 1),
        (Fraction(-4, 5), Fraction(3, 5))],
    5: [(1, 0), (Fraction(15, 17), Fraction(8, 17)),
        (Fraction(3, 5), Fraction(4, 5)), (Fraction(-3, 5), Fraction(4, 5)),
        (Fraction(-15, 17), Fraction(8, 17))],
}


def _vertex_position(v, n):
    d = _HALF_TURN_DIRECTIONS[n][v % n]
    sign = 1 if v < n else -1
    return (sign * d[0], sign * d[1])


def realize_chord(chord, n, eps):
    """Endpoints of a chord as exact rational points.

    Tangent chords run from their vertex to a point at distance ~eps from
    the center, offset to the correct side of the line of sight: side R is
    the counterclockwise side (endpoint eps^2 * P + eps * P_perp), side L
    the clockwise one.
    """
    if chord.is_tangent:
        p = _vertex_position(chord.p, n)
        perp = (-p[1], p[0])
        s = 1 if chord.side == "R" else -1
        end = (eps * eps * p[0] + s * eps * perp[0],
               eps * eps * p[1] + s * eps * perp[1])
        return _vertex_position(chord.p, n), end
    return _vertex_position(chord.p, n), _vertex_position(chord.q, n)


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segments_cross_properly(s1, s2):
    """Exact proper-intersection predicate; degeneracies raise."""
    a, b = s1
    c, d = s2
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    shared = len({a, b} & {c, d}) > 0
    if not shared and 0 in (o1, o2, o3, o4):
        raise AssertionError("degenerate chord realization; adjust eps")
    return (o1 > 0) != (o2 > 0) and (o3 > 0) != (o4 > 0) and not shared


def geometric_crossing(c1, c2, n, eps=Fraction(1, 10)):
    """Crossing of two chords decided from the exact segment realization."""
    if c1 == c2:
        return False
    if not c1.is_tangent and not c2.is_tangent \
            and len({c1.p, c1.q} & {c2.p, c2.q}) > 0:
        return False
    if c1.is_tangent and c2.is_tangent and c1.p == c2.p:
        return False
    if c1.is_tangent != c2.is_tangent:
        t = c1 if c1.is_tangent else c2
        d = c2 if c1.is_tangent else c1
        if t.p in (d.p, d.q):
            return False
    return segments_cross_properly(realize_chord(c1, n, eps),
                                   realize_chord(c2, n, eps))
