"""Chords of a 2n-gon with a central disk, and their symmetric pairs.

Vertices are labeled 0..2n-1 counterclockwise; the antipode of p is p+n
(written with a ``b`` suffix in text form, e.g. ``2b``).  Chords come in two
flavors: polygon diagonals that avoid the center (cyclic distance 2..2n-2
but not n) and tangent chords ``pL`` / ``pR`` running from a vertex to the
central disk.  The half-turn pairs every chord with its antipodal copy; a
pair is named by its lexicographically smallest member.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

L, R = "L", "R"


class SamePairError(ValueError):
    """Both arguments denote the same centrally symmetric pair."""


@dataclass(frozen=True, order=True)
class Chord:
    p: int
    q: int = -1        # second vertex for diagonals, -1 for tangents
    side: str = ""     # "L"/"R" for tangents, "" for diagonals

    @property
    def is_tangent(self):
        return self.q < 0


def arc(p, q, n):
    """Polygon diagonal between distinct vertices, canonically ordered."""
    m = 2 * n
    p, q = p % m, q % m
    if p > q:
        p, q = q, p
    d = q - p
    if d < 2 or d > m - 2 or d == n:
        raise ValueError(f"{{{p},{q}}} is not a chord of the 2*{n}-gon model")
    return Chord(p, q)


def tangent(p, side, n):
    if side not in (L, R):
        raise ValueError(f"tangent side must be L or R, got {side!r}")
    return Chord(p % (2 * n), -1, side)


def antipode(v, n):
    return (v + n) % (2 * n)


def partner(c: Chord, n) -> Chord:
    """The centrally symmetric copy of a chord (tangency side is preserved)."""
    if c.is_tangent:
        return tangent(antipode(c.p, n), c.side, n)
    return arc(antipode(c.p, n), antipode(c.q, n), n)


def pair_rep(c: Chord, n) -> Chord:
    """Canonical representative of the pair {c, partner(c)}."""
    return min(c, partner(c, n))


def all_chords(n):
    m = 2 * n
    chords = [Chord(p, q) for p in range(m) for q in range(p + 1, m)
              if 2 <= q - p <= m - 2 and q - p != n]
    chords += [Chord(p, -1, s) for p in range(m) for s in (L, R)]
    return sorted(chords)


def all_chord_pairs(n):
    """All centrally symmetric pairs, as sorted canonical representatives."""
    if n < 3:
        raise ValueError(f"the model needs n >= 3, got {n}")
    return sorted({pair_rep(c, n) for c in all_chords(n)})


def _strictly_between(v, a, b, m):
    """True if v lies strictly inside the ccw arc from a to b (mod m)."""
    return 0 < (v - a) % m < (b - a) % m


def _minor_arc_contains(v, c: Chord, n):
    """True if vertex v lies strictly on the side of diagonal c away from
    the center (well defined because long diagonals are excluded)."""
    m = 2 * n
    if (c.q - c.p) % m < n:
        return _strictly_between(v, c.p, c.q, m)
    return _strictly_between(v, c.q, c.p, m)


def crossing(c1: Chord, c2: Chord, n) -> bool:
    """Whether two chords cross in their interiors.

    Diagonals cross when their endpoints interleave; a tangent chord crosses
    a diagonal when its vertex sits on the arc cut off from the center.  Two
    tangent chords cross only with opposite tangency sides, and then exactly
    when the L-vertex lies in the open ccw half-turn after the R-vertex
    (tangents from equal or antipodal vertices never cross).
    """
    m = 2 * n
    if c1 == c2:
        return False
    if c1.is_tangent and c2.is_tangent:
        if c1.side == c2.side or c1.p == c2.p:
            return False
        pr, pl = (c1.p, c2.p) if c1.side == R else (c2.p, c1.p)
        return 0 < (pl - pr) % m < n
    if c1.is_tangent or c2.is_tangent:
        t, d = (c1, c2) if c1.is_tangent else (c2, c1)
        if t.p == d.p or t.p == d.q:
            return False
        return _minor_arc_contains(t.p, d, n)
    if len({c1.p, c1.q, c2.p, c2.q}) < 4:
        return False
    return _strictly_between(c2.p, c1.p, c1.q, m) != \
        _strictly_between(c2.q, c1.p, c1.q, m)


def pair_crossing_count(a: Chord, b: Chord, n) -> int:
    """Number of chords of pair b crossed by one representative of pair a.

    Well defined: the two representatives of a give equal counts by central
    symmetry.  Arguments are taken as pair representatives.
    """
    ra, rb = pair_rep(a, n), pair_rep(b, n)
    if ra == rb:
        raise SamePairError(f"{chord_text(ra, n)} compared with itself")
    return sum(crossing(ra, c, n) for c in {rb, partner(rb, n)})


def compatible(a: Chord, b: Chord, n) -> bool:
    return pair_crossing_count(a, b, n) == 0


# -- symmetries --------------------------------------------------------------

@dataclass(frozen=True)
class SymmetryOp:
    """Rigid or combinatorial symmetry of the configuration.

    kind "rho": one-step ccw vertex rotation; "reflect": vertex k -> axis-k
    with tangency sides swapped; "tau": rotation followed by a side swap;
    "sigma": global side swap.
    """

    kind: str
    axis: int = 0


RHO = SymmetryOp("rho")
TAU = SymmetryOp("tau")
SIGMA = SymmetryOp("sigma")


def reflect(axis):
    return SymmetryOp("reflect", axis)


def _swap(side):
    return R if side == L else L


def apply_to_chord(op: SymmetryOp, c: Chord, n) -> Chord:
    m = 2 * n
    if op.kind == "rho":
        if c.is_tangent:
            return tangent(c.p + 1, c.side, n)
        return arc(c.p + 1, c.q + 1, n)
    if op.kind == "tau":
        if c.is_tangent:
            return tangent(c.p + 1, _swap(c.side), n)
        return arc(c.p + 1, c.q + 1, n)
    if op.kind == "reflect":
        if c.is_tangent:
            return tangent(op.axis - c.p, _swap(c.side), n)
        return arc(op.axis - c.p, op.axis - c.q, n)
    if op.kind == "sigma":
        if c.is_tangent:
            return tangent(c.p, _swap(c.side), n)
        return c
    raise ValueError(f"unknown symmetry kind {op.kind!r}")


def apply_symmetry(op: SymmetryOp, pairs, n):
    """Image of a set of chord pairs, re-canonicalized."""
    return frozenset(pair_rep(apply_to_chord(op, c, n), n) for c in pairs)


# -- text form ---------------------------------------------------------------

_CHORD_RE = re.compile(r"^(\d)(b?)(?:(\d)(b?)|([LR]))$")


def vertex_text(v, n):
    return str(v) if v < n else f"{v - n}b"


def chord_text(c: Chord, n) -> str:
    if c.is_tangent:
        return f"{vertex_text(c.p, n)}{c.side}"
    return f"{vertex_text(c.p, n)}{vertex_text(c.q, n)}"


def parse_chord(text, n) -> Chord:
    m = _CHORD_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse chord {text!r}")
    p = int(m.group(1)) + (n if m.group(2) else 0)
    if m.group(5):
        return tangent(p, m.group(5), n)
    q = int(m.group(3)) + (n if m.group(4) else 0)
    return arc(p, q, n)


def pairs_text(pairs, n) -> str:
    return ",".join(chord_text(c, n) for c in sorted(pairs))


def parse_pairs(text, n):
    return frozenset(pair_rep(parse_chord(t, n), n)
                     for t in text.split(",") if t.strip())
