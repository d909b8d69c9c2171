"""The complete rank-4 fan of linearity domains of the tropical minors.

Each tropicalized minor is a minimum of linear forms; its linearity regions
cut out a complete fan in R^4.  The common refinement of the 20 such fans
is computed by sweeping the minors and splitting every surviving region by
the argmin choice, keeping only full-dimensional pieces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .geometry import (
    Cone,
    Fan,
    _double_description,
    _rank,
    canonicalize_ray,
    facet_normals,
)
from .webmatrix import PLUECKER_TRIPLES, all_tropical_minors


def _argmin_halfspaces(forms, i):
    """Halfspaces selecting form i as the minimum: f_j - f_i >= 0 for all j."""
    fi = forms[i]
    return tuple(tuple(a - b for a, b in zip(fj, fi))
                 for j, fj in enumerate(forms) if j != i)


def linearity_fan(forms, dim=4) -> Fan:
    """Fan of closed regions on which one fixed form attains the minimum.

    Regions that are not full-dimensional are dropped; the remaining closed
    regions cover R^dim.
    """
    cones = []
    for i in range(len(forms)):
        c = Cone(dim, _argmin_halfspaces(tuple(forms), i))
        if c.dim() == dim:
            cones.append(c)
    return Fan(dim, tuple(cones))


def trop_phi2(x):
    """Values of all 20 tropical minors at x, in lexicographic triple order."""
    xs = tuple(Fraction(v) for v in x)
    minors = all_tropical_minors()
    return tuple(min(sum(c * v for c, v in zip(form, xs))
                     for form in minors[idx])
                 for idx in PLUECKER_TRIPLES)


@lru_cache(maxsize=1)
def compute_fan_f36() -> Fan:
    """Common refinement of the 20 linearity fans, as full-dimensional cones.

    Regions are carried as irredundant halfspace lists; a region survives a
    refinement step when the cone it cuts out still has dimension 4.
    """
    dim = 4
    minors = all_tropical_minors()
    regions = [()]  # halfspace tuples; () is all of R^4
    for idx in PLUECKER_TRIPLES:
        forms = minors[idx]
        if len(forms) == 1:
            continue
        refined = []
        for hs in regions:
            for i in range(len(forms)):
                cand = hs + _argmin_halfspaces(forms, i)
                lines, rays = _double_description(cand, dim)
                if _rank(list(lines) + list(rays)) < dim:
                    continue
                gens = [tuple(r) for r in rays]
                for l in lines:
                    gens.append(tuple(l))
                    gens.append(tuple(-x for x in l))
                refined.append(tuple(facet_normals(gens, dim)))
        regions = refined
    cones = [Cone(dim, hs) for hs in regions]
    keys = [c.rays for c in cones]
    if len(set(keys)) != len(keys):
        raise RuntimeError("refinement produced duplicate cones")
    return Fan(dim, tuple(cones))


def fan_rays():
    return [canonicalize_ray(r) for r in compute_fan_f36().rays]


def bipyramid_cones(fan=None):
    """The non-simplicial maximal cones (more rays than the dimension)."""
    fan = fan or compute_fan_f36()
    return [c for c in fan.maximal_cones if len(c.rays) > fan.ambient_dim]


def fan_to_json(fan=None, ray_labels=None):
    """JSON-ready fan description: rays, cones as ray indices, f-vector.

    When every ray has a conventional label (r1..r16), rays are listed in
    label order; otherwise lexicographically.
    """
    fan = fan or compute_fan_f36()
    rays = fan.rays
    if ray_labels and all(r in ray_labels for r in rays):
        rays = sorted(rays, key=lambda r: int(ray_labels[r][1:]))
    index = {r: i for i, r in enumerate(rays)}
    data = {
        "ambient_dim": fan.ambient_dim,
        "rays": [list(r) for r in rays],
        "maximal_cones": [sorted(index[r] for r in c.rays)
                          for c in fan.maximal_cones],
        "f_vector": list(fan.f_vector()),
        "bipyramids": [sorted(index[r] for r in c.rays)
                       for c in bipyramid_cones(fan)],
    }
    if ray_labels:
        data["ray_labels"] = [ray_labels.get(r, "") for r in rays]
    return data
