"""The (3,6)-hypersimplex: matroid subdivisions and plane-type classification.

A weight vector on the 20 vertices induces a regular subdivision via the
exact lower envelope.  For weights coming from the tropical minors the cells
are matroid polytopes; their face counts together with the dimensions of
pairwise intersections form a signature that separates the six realized
combinatorial types of tropical planes.  The classifier is bootstrapped
from one labeled representative cone per type.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import reference
from .fan import trop_phi2
from .geometry import (
    Cone,
    PointConfiguration,
    intersection_dim,
    polytope_f_vector,
    regular_subdivision,
)
from .webmatrix import PLUECKER_TRIPLES


class NotMatroidalError(ValueError):
    """A subdivision cell fails the basis-exchange axiom."""


class UnknownTypeError(ValueError):
    """A subdivision signature matches no bootstrapped reference type."""


def hypersimplex_vertices():
    """The 20 zero-one vectors with coordinate sum 3, in lex triple order."""
    verts = []
    for (i, j, k) in PLUECKER_TRIPLES:
        verts.append(tuple(1 if m + 1 in (i, j, k) else 0 for m in range(6)))
    return tuple(verts)


@lru_cache(maxsize=1)
def _configuration():
    return PointConfiguration(hypersimplex_vertices())


def is_matroid_basis_set(bases) -> bool:
    """Basis-exchange axiom, checked by brute force over all pairs."""
    bset = {frozenset(b) for b in bases}
    if not bset:
        raise ValueError("empty basis set")
    for A, B in itertools.product(bset, repeat=2):
        for a in A - B:
            if not any(frozenset(A - {a} | {b}) in bset for b in B - A):
                return False
    return True


def induced_subdivision(w):
    """Maximal cells of the subdivision of the hypersimplex lifted by w.

    ``w`` is the 20-entry weight vector in lexicographic triple order; each
    cell is returned as a frozenset of index triples.
    """
    cells = regular_subdivision(_configuration(), list(w))
    return tuple(frozenset(PLUECKER_TRIPLES[i] for i in cell)
                 for cell in cells)


_TRIPLE_INDEX = {t: i for i, t in enumerate(PLUECKER_TRIPLES)}


def _cell_vertex_list(cell):
    verts = hypersimplex_vertices()
    return [verts[_TRIPLE_INDEX[t]] for t in sorted(cell)]


@lru_cache(maxsize=None)
def _cell_invariant(cell):
    f_vec = polytope_f_vector(_cell_vertex_list(cell))
    return (len(cell), f_vec)


def subdivision_signature(cells):
    """Order-insensitive signature of a subdivision.

    First component: sorted multiset of per-cell invariants (vertex count,
    f-vector).  Second: sorted multiset of pairwise intersection records,
    each the two cells' invariants together with the dimension of their
    common face (-1 when the cells do not meet).  Tagging the dimensions
    with the cell invariants is needed to tell all six plane types apart.
    """
    cells = [frozenset(c) for c in cells]
    per_cell = tuple(sorted(_cell_invariant(c) for c in cells))
    verts = hypersimplex_vertices()
    records = []
    for a, b in itertools.combinations(cells, 2):
        ia = [_TRIPLE_INDEX[t] for t in a]
        ib = [_TRIPLE_INDEX[t] for t in b]
        d = intersection_dim(verts, ia, ib)
        records.append((tuple(sorted((_cell_invariant(a), _cell_invariant(b)))), d))
    return (per_cell, tuple(sorted(records)))


def signature_intersection_dims(sig):
    """The bare multiset of pairwise intersection dimensions of a signature."""
    return tuple(sorted(d for _, d in sig[1]))


def _check_matroidal(cells, context=""):
    for cell in cells:
        if not is_matroid_basis_set(cell):
            raise NotMatroidalError(
                f"cell {sorted(cell)} fails basis exchange{context}")


def subdivision_of_point(x):
    """Matroid subdivision induced by the minor values at a point of R^4."""
    cells = induced_subdivision(trop_phi2(x))
    _check_matroidal(cells, f" at x={tuple(x)}")
    return cells


@lru_cache(maxsize=1)
def reference_signatures():
    """Signature of one labeled representative cone per plane type."""
    sigs = {}
    for plane_type, rays in reference.representative_cones().items():
        point = tuple(sum(c) for c in zip(*sorted(rays)))
        sigs[plane_type] = subdivision_signature(subdivision_of_point(point))
    values = list(sigs.values())
    if len(set(values)) != len(values):
        raise RuntimeError("reference signatures are not pairwise distinct")
    return sigs


def classify_signature(sig):
    for plane_type, ref in reference_signatures().items():
        if sig == ref:
            return plane_type
    raise UnknownTypeError(f"signature matches no reference type: {sig}")


def classify_plane_type(cone) -> str:
    """Plane type of a maximal cone, from its canonical interior point."""
    rays = cone.rays if isinstance(cone, Cone) else tuple(cone)
    point = tuple(sum(c) for c in zip(*sorted(rays)))
    return classify_signature(
        subdivision_signature(subdivision_of_point(point)))


def subdivision_to_json(cells):
    """JSON-ready subdivision: sorted cells and the nested signature."""
    sig = subdivision_signature(cells)
    per_cell, records = sig
    return {
        "cells": sorted([sorted(list(t) for t in sorted(c)) for c in cells]),
        "signature": {
            "cells": [[n, list(f)] for n, f in per_cell],
            "intersections": [[[ [a[0], list(a[1])], [b[0], list(b[1])] ], d]
                              for (a, b), d in records],
            "intersection_dims": list(signature_intersection_dims(sig)),
        },
    }
