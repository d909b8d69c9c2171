"""Bridge between fan rays, almost positive roots, and chord pairs.

The ray dictionary identifies each of the 16 rays with an almost positive
root and a chord pair.  Under that dictionary the maximal cones of the fan
carry the 50 pseudotriangulations (the two bipyramid cones carry two each),
the 2-dimensional cones are exactly the compatible root pairs, and the
plane type of a cone is constant on the pseudotriangulations it carries.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from . import reference
from .chords import SIGMA, parse_chord, chord_text, pair_rep, reflect
from .clusters import (
    N4,
    classify_modulo,
    cluster_of,
    compatibility_degree,
    enumerate_pseudotriangulations,
    full_symmetry_generators,
)
from .fan import bipyramid_cones, compute_fan_f36
from .geometry import cone_face_ray_sets
from .hypersimplex import classify_plane_type


def psi_table():
    """Rows (ray coords, root, chord pair) of the three-column dictionary."""
    rows = []
    for label, coords in reference.RAY_COORDS.items():
        root, chord = reference.PSI_TABLE[label]
        rows.append((coords, root, pair_rep(parse_chord(chord, N4), N4)))
    return rows


@lru_cache(maxsize=1)
def _psi_maps():
    to_root = {coords: root for coords, root, _ in psi_table()}
    to_ray = {root: coords for coords, root, _ in psi_table()}
    return to_root, to_ray


def psi(ray):
    """Root attached to a fan ray."""
    to_root, _ = _psi_maps()
    ray = tuple(ray)
    if ray not in to_root:
        raise KeyError(f"{ray} is not a ray of the fan")
    return to_root[ray]


def psi_inverse(root):
    _, to_ray = _psi_maps()
    root = tuple(root)
    if root not in to_ray:
        raise KeyError(f"{root} is not an almost positive root")
    return to_ray[root]


def rays_of_cluster(t):
    return frozenset(psi_inverse(r) for r in cluster_of(t))


def cone_of_cluster(t, fan=None):
    """The unique maximal cone whose rays contain the cluster's rays."""
    fan = fan or compute_fan_f36()
    rays = rays_of_cluster(t)
    hits = [c for c in fan.maximal_cones if rays <= set(c.rays)]
    if len(hits) != 1:
        raise RuntimeError(
            f"cluster maps into {len(hits)} maximal cones instead of one")
    return hits[0]


@lru_cache(maxsize=1)
def classify_all_cones():
    """Plane type of every maximal cone, keyed by its frozen ray set.

    The per-cone classifications are independent; TROPD4_THREADS caps the
    worker pool used to spread them out.
    """
    fan = compute_fan_f36()
    cones = list(fan.maximal_cones)
    workers = max(1, int(os.environ.get("TROPD4_THREADS", "1")))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            types = list(pool.map(classify_plane_type, cones))
    else:
        types = [classify_plane_type(c) for c in cones]
    return {frozenset(c.rays): t for c, t in zip(cones, types)}


def plane_type_of_cluster(t, fan=None):
    return classify_all_cones()[frozenset(cone_of_cluster(t, fan).rays)]


def split_bipyramid_facets(fan=None):
    """Maximal cells after cutting each bipyramid along its equator.

    Returns the 50 ray sets: the 46 simplicial cones unchanged, plus two
    4-ray sets per bipyramid (equator plus one apex).  Apexes are recovered
    structurally as the unique ray pair not spanning a 2-face.
    """
    fan = fan or compute_fan_f36()
    facets = []
    for c in fan.maximal_cones:
        rays = set(c.rays)
        if len(rays) == fan.ambient_dim:
            facets.append(frozenset(rays))
            continue
        faces = cone_face_ray_sets(c)
        non_edges = [frozenset(p) for p in itertools.combinations(sorted(rays), 2)
                     if frozenset(p) not in faces]
        if len(non_edges) != 1:
            raise RuntimeError(
                f"cone {sorted(rays)} has {len(non_edges)} missing diagonals")
        apexes = sorted(non_edges[0])
        equator = rays - set(apexes)
        for a in apexes:
            facets.append(frozenset(equator | {a}))
    return facets


def verify_cluster_fan_correspondence(fan=None):
    """Check that fan 2-cones match compatible root pairs and that splitting
    the bipyramids turns the fan into the cluster complex.

    Returns a report dict; ``report["violations"]`` is empty on success.
    """
    fan = fan or compute_fan_f36()
    violations = []

    faces = fan.face_ray_sets()
    fan_edges = {f for f in faces if len(f) == 2}
    # 2-faces of these pointed cones have exactly two extreme rays, so the
    # ray-pair sets of size 2 are exactly the 2-dimensional cones.
    roots = [psi(r) for r in fan.rays]
    compat_pairs = {
        frozenset((psi_inverse(a), psi_inverse(b)))
        for a, b in itertools.combinations(roots, 2)
        if compatibility_degree(a, b) == 0}
    if fan_edges != compat_pairs:
        missing = sorted(tuple(sorted(p)) for p in compat_pairs - fan_edges)
        extra = sorted(tuple(sorted(p)) for p in fan_edges - compat_pairs)
        violations.append({
            "check": "fan 2-cones equal compatible pairs",
            "missing_from_fan": missing, "not_compatible": extra})

    second_chart = {frozenset((reference.RAY_COORDS[a], reference.RAY_COORDS[b]))
                    for a, b in reference.SECOND_CHART_EDGES}
    if not second_chart <= compat_pairs:
        violations.append({"check": "listed second-chart pairs compatible",
                           "detail": "some listed pair is not compatible"})
    if not second_chart <= fan_edges:
        violations.append({"check": "listed second-chart pairs are 2-cones",
                           "detail": "some listed pair spans no 2-cone"})

    ts = enumerate_pseudotriangulations(N4)
    cluster_ray_sets = [rays_of_cluster(t) for t in ts]
    split = split_bipyramid_facets(fan)
    if sorted(map(sorted, split)) != sorted(map(sorted, cluster_ray_sets)):
        violations.append({
            "check": "split fan facets biject with the 50 clusters",
            "detail": {
                "split_only": sorted(map(sorted,
                                         set(split) - set(cluster_ray_sets))),
                "clusters_only": sorted(map(sorted,
                                            set(cluster_ray_sets) - set(split)))}})

    bip_rays = [frozenset(c.rays) for c in bipyramid_cones(fan)]
    expected_bips = {frozenset(reference.ray_set(b)) for b in reference.BIPYRAMIDS}
    if set(bip_rays) != expected_bips:
        violations.append({"check": "bipyramid ray sets", "detail": "mismatch"})
    into_bips = [t for t, rs in zip(ts, cluster_ray_sets)
                 if any(rs < b for b in bip_rays)]
    if len(into_bips) != 4:
        violations.append({"check": "exactly 4 clusters map into bipyramids",
                           "found": len(into_bips)})
    for b, apex_labels in zip(reference.BIPYRAMIDS, reference.BIPYRAMID_APEXES):
        brays = reference.ray_set(b)
        covering = [rs for rs in cluster_ray_sets if rs < brays]
        apexes = reference.ray_set(apex_labels)
        ok = (len(covering) == 2
              and len(covering[0] & covering[1]) == 3
              and all(len(rs & apexes) == 1 for rs in covering))
        if not ok:
            violations.append({"check": "bipyramid split structure",
                               "bipyramid": sorted(b)})

    return {
        "fan_edge_count": len(fan_edges),
        "compatible_pair_count": len(compat_pairs),
        "clusters_into_bipyramids": len(into_bips),
        "violations": violations,
    }


# -- class/type tables --------------------------------------------------------

@lru_cache(maxsize=1)
def cluster_classes():
    """The 7 symmetry classes, labeled T1..T7 via size and type split."""
    ts = enumerate_pseudotriangulations(N4)
    orbits = classify_modulo(ts, full_symmetry_generators(N4), N4)
    expected = {
        label: (sum(split.values()), tuple(sorted(split.items())))
        for label, split in reference.TABLE2.items()}
    labeled = {}
    for orbit in orbits:
        split = {}
        for t in orbit:
            pt = plane_type_of_cluster(t)
            split[pt] = split.get(pt, 0) + 1
        key = (len(orbit), tuple(sorted(split.items())))
        matches = [l for l, k in expected.items() if k == key]
        if len(matches) != 1:
            raise RuntimeError(
                f"orbit of size {len(orbit)} with split {split} matches "
                f"{len(matches)} reference classes")
        labeled[matches[0]] = orbit
    return labeled


def table1_report(fan=None):
    """Computed (cone ray labels, plane type) rows, in printed-table order."""
    types = classify_all_cones()
    rows = []
    for plane_type, cones in reference.TABLE1.items():
        for labels in cones:
            computed = types[frozenset(reference.ray_set(labels))]
            rows.append({"rays": list(labels), "type": computed,
                         "expected": plane_type})
    return rows


def table2_report():
    """Computed class-by-type incidence with expected counts."""
    rows = []
    for label in sorted(cluster_classes()):
        orbit = cluster_classes()[label]
        split = {}
        for t in orbit:
            pt = plane_type_of_cluster(t)
            split[pt] = split.get(pt, 0) + 1
        for pt in sorted(split):
            rows.append({"class": label, "type": pt, "count": split[pt],
                         "expected": reference.TABLE2[label].get(pt, 0)})
    return rows


# -- reflection theorem -------------------------------------------------------

def parity_preserving_reflections(n=N4):
    """Reflections of the 2n-gon fixing vertex parity: even axes."""
    return tuple(reflect(a) for a in range(0, 2 * n, 2))


def finer_equivalence_classes():
    """Orbits under parity-preserving reflections and the side swap."""
    ts = enumerate_pseudotriangulations(N4)
    gens = parity_preserving_reflections() + (SIGMA,)
    return classify_modulo(ts, gens, N4)


def verify_parity_reflection_theorem():
    """Sufficiency sweep plus necessity for the EEEG and FFFGG fibers."""
    ts = enumerate_pseudotriangulations(N4)
    violations = []
    ops = parity_preserving_reflections()
    for t in ts:
        base = plane_type_of_cluster(t)
        for op in ops:
            for with_sigma in (False, True):
                from .chords import apply_symmetry
                u = apply_symmetry(op, t, N4)
                if with_sigma:
                    u = apply_symmetry(SIGMA, u, N4)
                if plane_type_of_cluster(u) != base:
                    violations.append({
                        "check": "reflection preserves plane type",
                        "pseudotriangulation": sorted(
                            chord_text(c, N4) for c in t),
                        "op": (op.kind, op.axis, with_sigma),
                        "types": [base, plane_type_of_cluster(u)]})

    classes = finer_equivalence_classes()
    fibers = {}
    for t in ts:
        fibers.setdefault(plane_type_of_cluster(t), set()).add(t)
    necessity = {}
    for plane_type in ("EEEG", "FFFGG"):
        fiber = fibers[plane_type]
        matching = [c for c in classes if c & fiber]
        necessity[plane_type] = (len(matching) == 1
                                 and set(matching[0]) == fiber)
        if not necessity[plane_type]:
            violations.append({
                "check": "necessity for type fiber",
                "type": plane_type,
                "classes_meeting_fiber": len(matching)})
    # every finer class sits inside one type fiber (restatement of
    # sufficiency; the type fibers are unions of finer classes)
    union_ok = all(
        len({plane_type_of_cluster(t) for t in c}) == 1 for c in classes)
    if not union_ok:
        violations.append({"check": "finer classes have constant type"})
    return {
        "finer_class_count": len(classes),
        "necessity": necessity,
        "violations": violations,
    }
