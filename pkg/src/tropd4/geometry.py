"""Exact rational polyhedral geometry in small dimension.

Cones are given by integer inequality normals (``<h, x> >= 0``), rays are
primitive integer vectors, and regular subdivisions are read off exact lower
envelopes.  All arithmetic is over the integers / rationals; no floats.

The workhorse is a double-description sweep (:func:`_double_description`)
that inserts halfspaces one at a time while maintaining a line basis and the
extreme rays of the pointed part.  Everything else (facet enumeration,
polytope face lattices, lower envelopes) is phrased as a ray enumeration of
a suitable cone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm


class ZeroRayError(ValueError):
    """A direction vector was identically zero."""


class NotPointedError(ValueError):
    """A cone expected to be pointed contains a line."""

    def __init__(self, direction):
        self.direction = tuple(direction)
        super().__init__(f"cone contains the line through {self.direction}")


def _as_integer_vector(v):
    """Scale a rational vector by a positive rational into coprime integers."""
    fracs = [Fraction(x) for x in v]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return tuple(int(f * scale) for f in fracs)


def canonicalize_ray(v):
    """Unique positive multiple of ``v`` with coprime integer entries."""
    w = _as_integer_vector(v)
    g = gcd(*(abs(x) for x in w)) if w else 0
    if g == 0:
        raise ZeroRayError(f"zero vector {tuple(v)} does not span a ray")
    return tuple(x // g for x in w)


def _reduce(v):
    g = gcd(*(abs(x) for x in v))
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _rank(vectors):
    """Rank of a list of integer vectors (fraction-free elimination)."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        head = rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f, g = head[c], rows[i][c]
                rows[i] = [f * x - g * y for x, y in zip(rows[i], head)]
                h = gcd(*(abs(x) for x in rows[i]))
                if h > 1:
                    rows[i] = [x // h for x in rows[i]]
        r += 1
        if r == len(rows):
            break
    return r


def _double_description(halfspaces, dim):
    """Lines and extreme rays of ``{x : <h, x> >= 0 for h in halfspaces}``.

    Returns ``(lines, rays)`` where ``lines`` is an integer basis of the
    lineality space and ``rays`` are the primitive extreme rays of the
    pointed part (taken modulo the lineality space).
    """
    constraints = []
    lines = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays = []  # list of (vector, tight-bitmask over `constraints`)

    for h in halfspaces:
        a = _as_integer_vector(h)
        if not any(a):
            continue
        idx = len(constraints)
        constraints.append(a)
        bit = 1 << idx
        line_vals = [_dot(a, l) for l in lines]
        if any(line_vals):
            k = next(i for i, v in enumerate(line_vals) if v)
            l0, v0 = lines[k], line_vals[k]
            if v0 < 0:
                l0, v0 = tuple(-x for x in l0), -v0
            new_lines = []
            for i, (l, v) in enumerate(zip(lines, line_vals)):
                if i == k:
                    continue
                new_lines.append(l if v == 0 else _reduce(tuple(
                    v0 * x - v * y for x, y in zip(l, l0))))
            new_rays = []
            for r, mask in rays:
                v = _dot(a, r)
                if v == 0:
                    new_rays.append((r, mask | bit))
                else:
                    new_rays.append((_reduce(tuple(
                        v0 * x - v * y for x, y in zip(r, l0))), mask | bit))
            # The consumed line survives as a ray, tight on all earlier cuts.
            new_rays.append((l0, bit - 1))
            lines, rays = new_lines, new_rays
            continue

        plus, zero, minus = [], [], []
        for r, mask in rays:
            v = _dot(a, r)
            if v > 0:
                plus.append((r, mask, v))
            elif v < 0:
                minus.append((r, mask, v))
            else:
                zero.append((r, mask | bit))
        if not minus:
            rays = zero + [(r, m) for r, m, _ in plus]
            continue
        all_masks = [m for _, m in rays]
        new_rays = zero + [(r, m) for r, m, _ in plus]
        for (p, pm, pv), (m, mm, mv) in itertools.product(plus, minus):
            common = pm & mm
            if any(o != pm and o != mm and common & ~o == 0 for o in all_masks):
                continue  # a third ray lies on every face through p and m
            w = _reduce(tuple(pv * y - mv * x for x, y in zip(p, m)))
            new_rays.append((w, (pm & mm) | bit))
        rays = new_rays

    return lines, [r for r, _ in rays]


def cone_rays(halfspaces, dim):
    """Extreme rays of a pointed cone, canonicalized and sorted."""
    lines, rays = _double_description(halfspaces, dim)
    if lines:
        raise NotPointedError(lines[0])
    return sorted(canonicalize_ray(r) for r in rays)


def facet_normals(generators, dim):
    """Irredundant inward facet normals of the cone spanned by ``generators``.

    ``generators`` may include line directions; encode a line l by listing
    both l and -l.  The result defines the cone as an intersection of
    halfspaces whenever the cone is full-dimensional.
    """
    lines, rays = _double_description(generators, dim)
    normals = sorted(canonicalize_ray(r) for r in rays)
    for l in lines:
        normals.append(canonicalize_ray(l))
        normals.append(canonicalize_ray([-x for x in l]))
    return normals


@dataclass
class Cone:
    """Polyhedral cone ``{x : <h, x> >= 0}`` with cached ray description."""

    ambient_dim: int
    halfspaces: tuple
    rays: tuple = field(init=False)
    lines: tuple = field(init=False)

    def __post_init__(self):
        self.halfspaces = tuple(_reduce(_as_integer_vector(h))
                                for h in self.halfspaces if any(h))
        lines, rays = _double_description(self.halfspaces, self.ambient_dim)
        self.rays = tuple(sorted(canonicalize_ray(r) for r in rays))
        self.lines = tuple(sorted(canonicalize_ray(l) for l in lines))

    @property
    def is_pointed(self):
        return not self.lines

    def dim(self):
        return _rank(self.rays + self.lines)

    def contains(self, x):
        return all(_dot(h, x) >= 0 for h in self.halfspaces)

    def contains_strictly(self, x):
        return all(_dot(h, x) > 0 for h in self.halfspaces)

    def interior_point(self):
        """Sum of the primitive rays; interior for full-dimensional cones."""
        if not self.rays:
            return tuple(0 for _ in range(self.ambient_dim))
        return tuple(sum(c) for c in zip(*self.rays))

    def with_minimal_halfspaces(self):
        gens = list(self.rays)
        for l in self.lines:
            gens.append(l)
            gens.append(tuple(-x for x in l))
        return Cone(self.ambient_dim, tuple(facet_normals(gens, self.ambient_dim)))

    def key(self):
        return self.rays


def intersect_cones(a: Cone, b: Cone) -> Cone:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"ambient dimensions differ: {a.ambient_dim} != {b.ambient_dim}")
    return Cone(a.ambient_dim, a.halfspaces + b.halfspaces)


def cone_dim(c: Cone) -> int:
    return c.dim()


def cone_from_rays(rays, dim):
    """Cone spanned by ``rays``, reconstructed through its facet normals."""
    return Cone(dim, tuple(facet_normals([tuple(r) for r in rays], dim)))


def cone_face_ray_sets(cone: Cone):
    """All nonzero faces of a pointed cone, each as a frozenset of its rays."""
    if not cone.is_pointed:
        raise NotPointedError(cone.lines[0])
    rays = cone.rays
    if len(rays) == _rank(rays):  # simplicial: faces are the ray subsets
        return {frozenset(s) for k in range(1, len(rays) + 1)
                for s in itertools.combinations(rays, k)}
    normals = facet_normals(list(rays), cone.ambient_dim)
    facets = [frozenset(r for r in rays if _dot(h, r) == 0) for h in normals]
    faces = set(facets)
    faces.add(frozenset(rays))
    frontier = set(facets)
    while frontier:
        new = set()
        for f, g in itertools.product(frontier, facets):
            h = f & g
            if h and h not in faces:
                new.add(h)
        faces |= new
        frontier = new
    return faces


@dataclass
class Fan:
    """A collection of full-dimensional cones with common-face intersections."""

    ambient_dim: int
    maximal_cones: tuple

    def __post_init__(self):
        self.maximal_cones = tuple(sorted(self.maximal_cones,
                                          key=lambda c: c.rays))

    @property
    def rays(self):
        return sorted({r for c in self.maximal_cones for r in c.rays})

    def face_ray_sets(self):
        faces = set()
        for c in self.maximal_cones:
            faces |= cone_face_ray_sets(c)
        return faces

    def f_vector(self):
        counts = {}
        for f in self.face_ray_sets():
            d = _rank(sorted(f))
            counts[d] = counts.get(d, 0) + 1
        return tuple(counts.get(d, 0) for d in range(1, self.ambient_dim + 1))

    def cones_containing(self, x):
        return [i for i, c in enumerate(self.maximal_cones) if c.contains(x)]


def _solve(columns, target):
    """Exact solution x of ``sum x_j * columns[j] = target`` or None."""
    m = len(target)
    n = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])]
           for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(row[n] for row in aug[r:]):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


class PointConfiguration:
    """A finite point set with exact affine coordinates on its span."""

    def __init__(self, points):
        pts = [tuple(Fraction(x) for x in p) for p in points]
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        self.points = pts
        self.origin = pts[0]
        basis = []
        for p in pts[1:]:
            d = tuple(x - o for x, o in zip(p, self.origin))
            if _frac_rank(basis + [d]) > len(basis):
                basis.append(d)
        self.basis = basis
        self.dim = len(basis)
        reduced = []
        for p in pts:
            coords = _solve(self.basis,
                            tuple(x - o for x, o in zip(p, self.origin)))
            reduced.append(tuple(coords))
        scale = lcm(*(c.denominator for row in reduced for c in row)) \
            if self.dim else 1
        self.reduced = [tuple(int(c * scale) for c in row) for row in reduced]
        self._scale = scale

    def reduce_point(self, y):
        """Affine coordinates of ``y`` (same scaling as ``reduced``), or None."""
        target = tuple(Fraction(v) - o for v, o in zip(y, self.origin))
        coords = _solve(self.basis, target)
        if coords is None:
            return None
        return tuple(Fraction(c) * self._scale for c in coords)


def _frac_rank(vectors):
    return _rank([_as_integer_vector(v) for v in vectors])


def regular_subdivision(points, heights):
    """Maximal cells of the lower-envelope subdivision (min convention).

    Each lifted point is ``(p_i, h_i)``; a cell is the frozenset of indices
    of the points lying on one lower facet of the lifted convex hull.  Cells
    are returned sorted, as frozensets of point indices.
    """
    config = points if isinstance(points, PointConfiguration) \
        else PointConfiguration(points)
    if len(config.points) != len(heights):
        raise ValueError("points and heights must have equal length")
    if config.dim < 1:
        raise ValueError("points must affinely span dimension >= 1")
    h_fracs = [Fraction(h) for h in heights]
    scale = lcm(*(h.denominator for h in h_fracs))
    h_ints = [int(h * scale) for h in h_fracs]

    d = config.dim
    # Affine supports (c, c0, t):  <u_i, c> + c0 <= t * h_i,  t >= 0.
    halfspaces = [tuple(-x for x in u) + (-1, h)
                  for u, h in zip(config.reduced, h_ints)]
    halfspaces.append(tuple(0 for _ in range(d + 1)) + (1,))
    lines, rays = _double_description(halfspaces, d + 2)
    if lines:  # cannot happen for a spanning configuration
        raise NotPointedError(lines[0])
    cells = set()
    for ray in rays:
        c, c0, t = ray[:d], ray[d], ray[d + 1]
        if t <= 0:
            continue
        cell = frozenset(i for i, (u, h) in enumerate(zip(config.reduced, h_ints))
                         if _dot(u, c) + c0 == t * h)
        cells.add(cell)
    return sorted(cells, key=sorted)


def intersection_dim(points, cell_a, cell_b):
    """Dimension of the common face spanned by shared cell vertices (-1 if none)."""
    shared = sorted(set(cell_a) & set(cell_b))
    if not shared:
        return -1
    base = points[shared[0]]
    diffs = [tuple(Fraction(x) - Fraction(o) for x, o in zip(points[i], base))
             for i in shared[1:]]
    return _frac_rank(diffs)


_FACE_CACHE = {}


def polytope_proper_faces(vertices):
    """Vertex sets of all nonempty proper faces of ``conv(vertices)``.

    Returns a dict mapping face dimension to the set of frozensets of vertex
    indices.  The polytope itself is not included.
    """
    key = tuple(tuple(Fraction(x) for x in v) for v in vertices)
    if key in _FACE_CACHE:
        return _FACE_CACHE[key]
    config = PointConfiguration(vertices)
    k = config.dim
    result = {}
    if k == 0:
        result = {0: {frozenset([0])}}
        _FACE_CACHE[key] = result
        return result
    # Facets = extreme rays of the cone of affine functionals nonnegative
    # on every vertex.
    constraints = [u + (1,) for u in config.reduced]
    lines, rays = _double_description(constraints, k + 1)
    facets = []
    for a in rays:
        tight = frozenset(i for i, u in enumerate(config.reduced)
                          if _dot(a[:k], u) + a[k] == 0)
        facets.append(tight)
    faces = set(facets)
    frontier = set(facets)
    while frontier:
        new = set()
        for f, g in itertools.product(frontier, facets):
            h = f & g
            if h and h not in faces:
                new.add(h)
        faces |= new
        frontier = new
    for f in faces:
        pts = [config.reduced[i] for i in sorted(f)]
        base = pts[0]
        d = _rank([tuple(x - o for x, o in zip(p, base)) for p in pts[1:]])
        result.setdefault(d, set()).add(f)
    _FACE_CACHE[key] = result
    return result


def polytope_f_vector(vertices):
    """Counts of proper faces by dimension: ``(f_0, ..., f_{dim-1})``."""
    faces = polytope_proper_faces(vertices)
    top = max(faces) if faces else 0
    return tuple(len(faces.get(d, ())) for d in range(top + 1))


def point_in_hull(y, vertices):
    """Exact membership test ``y in conv(vertices)`` via facet inequalities."""
    config = PointConfiguration(vertices)
    u = config.reduce_point(y)
    if u is None:
        return False
    if config.dim == 0:
        return True
    k = config.dim
    constraints = [v + (1,) for v in config.reduced]
    _, rays = _double_description(constraints, k + 1)
    scale = lcm(*(c.denominator for c in u)) if u else 1
    ui = tuple(int(c * scale) for c in u)
    return all(_dot(a[:k], ui) + a[k] * scale >= 0 for a in rays)
