"""Consolidated verification: every pipeline claim checked in one report.

Each check returns a list of violation dicts (empty when the check passes);
:func:`full_report` aggregates them into the machine-readable report used
by ``tropd4 verify-all``.  Randomized sweeps draw from a seeded generator,
so reports are byte-stable for a fixed seed, and the table sections do not
depend on the seed at all.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import reference
from .chords import parse_chord, pair_rep
from .clusters import (
    N4,
    classify_modulo,
    cluster_complex,
    compatibility_degree,
    enumerate_pseudotriangulations,
    flip_graph,
    full_symmetry_generators,
    graph_is_connected,
    root_of_pair,
    tau_on_root,
)
from .correspondence import (
    table1_report,
    table2_report,
    verify_cluster_fan_correspondence,
    verify_parity_reflection_theorem,
)
from .fan import bipyramid_cones, compute_fan_f36, trop_phi2
from .hypersimplex import (
    classify_signature,
    is_matroid_basis_set,
    induced_subdivision,
    subdivision_signature,
)
from .webmatrix import all_tropical_minors


def check_enumeration():
    violations = []
    counts = {3: 14, 4: 50}
    for n, expected in counts.items():
        got = len(enumerate_pseudotriangulations(n))
        if got != expected:
            violations.append({"check": "pseudotriangulation count",
                               "n": n, "got": got, "expected": expected})
    adj = flip_graph(4)
    edges = sum(len(v) for v in adj.values()) // 2
    if edges != 100 or not all(len(v) == 4 for v in adj.values()) \
            or not graph_is_connected(adj):
        violations.append({"check": "flip graph shape",
                           "edges": edges})
    return violations


def check_cluster_complex():
    f_vector, _, facets = cluster_complex()
    if f_vector != reference.CLUSTER_COMPLEX_F_VECTOR:
        return [{"check": "cluster complex f-vector", "got": list(f_vector),
                 "expected": list(reference.CLUSTER_COMPLEX_F_VECTOR)}]
    return []


def check_symmetry_classes():
    ts = enumerate_pseudotriangulations(N4)
    orbits = classify_modulo(ts, full_symmetry_generators(N4), N4)
    sizes = sorted((len(o) for o in orbits), reverse=True)
    if len(orbits) != 7 or sizes != [16, 8, 8, 8, 4, 4, 2]:
        return [{"check": "symmetry classes", "orbits": len(orbits),
                 "sizes": sizes}]
    return []


def check_psi_rows():
    """The three-column dictionary, one violation per mismatching row."""
    violations = []
    for label, coords in reference.RAY_COORDS.items():
        root, chord = reference.PSI_TABLE[label]
        pair = pair_rep(parse_chord(chord, N4), N4)
        computed = root_of_pair(pair)
        if computed != root:
            violations.append({"check": "ray dictionary row", "ray": label,
                               "chord": chord, "computed_root": computed,
                               "expected_root": root})
    return violations


def check_compatibility_relations():
    violations = []
    roots = sorted({reference.PSI_TABLE[l][0] for l in reference.RAY_COORDS})
    for i in range(4):
        neg = tuple(-1 if j == i else 0 for j in range(4))
        for beta in roots:
            expected = beta[i] if beta != neg else -1
            if compatibility_degree(neg, beta) != expected:
                violations.append({"check": "degree against negative simple",
                                   "i": i + 1, "beta": beta})
    for a, b in itertools.product(roots, repeat=2):
        if compatibility_degree(a, b) != \
                compatibility_degree(tau_on_root(a), tau_on_root(b)):
            violations.append({"check": "degree rotation invariance",
                               "pair": [a, b]})
    return violations


def check_minors():
    violations = []
    minors = all_tropical_minors()  # raises PositivityError on bad signs
    if len(minors) != 20:
        violations.append({"check": "minor count", "got": len(minors)})
    return violations


def check_fan():
    violations = []
    fan = compute_fan_f36()
    if set(fan.rays) != set(reference.RAY_COORDS.values()):
        violations.append({"check": "fan ray set",
                           "got": sorted(map(list, fan.rays))})
    fv = fan.f_vector()
    if fv != reference.FAN_F_VECTOR:
        violations.append({"check": "fan f-vector", "got": list(fv),
                           "expected": list(reference.FAN_F_VECTOR)})
    bips = {frozenset(c.rays) for c in bipyramid_cones(fan)}
    expected = {frozenset(reference.ray_set(b)) for b in reference.BIPYRAMIDS}
    if bips != expected:
        violations.append({"check": "bipyramid cones"})
    sizes = sorted(len(c.rays) for c in fan.maximal_cones)
    if sizes != [4] * 46 + [5, 5]:
        violations.append({"check": "maximal cone ray counts", "sizes": sizes})
    return violations


def check_table1():
    return [{"check": "cone type", "rays": row["rays"], "got": row["type"],
             "expected": row["expected"]}
            for row in table1_report() if row["type"] != row["expected"]]


def check_table2():
    return [{"check": "class-type incidence", "class": row["class"],
             "type": row["type"], "got": row["count"],
             "expected": row["expected"]}
            for row in table2_report() if row["count"] != row["expected"]]


def check_interior_point_stability(seed, samples_per_cone=20):
    """Random interior points of every cone: matroidal cells, one signature."""
    rng = random.Random(seed)
    violations = []
    fan = compute_fan_f36()
    for c in fan.maximal_cones:
        rays = sorted(c.rays)
        canonical = tuple(sum(col) for col in zip(*rays))
        base_sig = subdivision_signature(induced_subdivision(
            trop_phi2(canonical)))
        base_type = classify_signature(base_sig)
        for _ in range(samples_per_cone):
            coeffs = [Fraction(rng.randint(1, 50), rng.randint(1, 8))
                      for _ in rays]
            point = tuple(sum(f * r[i] for f, r in zip(coeffs, rays))
                          for i in range(4))
            cells = induced_subdivision(trop_phi2(point))
            if not all(is_matroid_basis_set(cell) for cell in cells):
                violations.append({"check": "matroidal cells",
                                   "cone": [list(r) for r in rays],
                                   "point": [str(x) for x in point]})
                continue
            if subdivision_signature(cells) != base_sig:
                violations.append({"check": "signature constant on cone",
                                   "cone": [list(r) for r in rays],
                                   "type": base_type})
    return violations


def check_fan_covering(seed, n_samples=10000):
    """Random integer points: each lies in a cone; overlaps share a face."""
    rng = random.Random(seed)
    violations = []
    fan = compute_fan_f36()
    for _ in range(n_samples):
        x = tuple(rng.randint(-40, 40) for _ in range(4))
        hits = fan.cones_containing(x)
        if not hits:
            violations.append({"check": "fan covers point", "point": list(x)})
            continue
        if len(hits) > 1:
            shared = frozenset.intersection(
                *(frozenset(fan.maximal_cones[i].rays) for i in hits))
            # the point must lie in the cone spanned by the shared rays
            from .geometry import cone_from_rays
            if shared:
                common = cone_from_rays(sorted(shared), 4)
                if not common.contains(x):
                    violations.append({"check": "overlap is a common face",
                                       "point": list(x)})
            elif any(x):
                violations.append({"check": "overlap is a common face",
                                   "point": list(x)})
    return violations


def check_reflection_theorem():
    return verify_parity_reflection_theorem()["violations"]


def check_correspondence():
    return verify_cluster_fan_correspondence()["violations"]


def full_report(seed=0, samples_per_cone=20, cover_samples=10000):
    """The consolidated report; passing means ``violations == []``."""
    violations = []
    for check in (check_enumeration, check_cluster_complex,
                  check_symmetry_classes, check_psi_rows,
                  check_compatibility_relations, check_minors, check_fan,
                  check_correspondence, check_table1, check_table2,
                  check_reflection_theorem):
        violations.extend(check())
    violations.extend(check_interior_point_stability(seed, samples_per_cone))
    violations.extend(check_fan_covering(seed, cover_samples))
    fan = compute_fan_f36()
    return {
        "tables": {
            "table1": [{"rays": r["rays"], "type": r["type"]}
                       for r in table1_report()],
            "table2": [{"class": r["class"], "type": r["type"],
                        "count": r["count"]} for r in table2_report()],
        },
        "fvectors": {
            "fan": list(fan.f_vector()),
            "cluster_complex": list(cluster_complex()[0]),
        },
        "violations": violations,
    }
