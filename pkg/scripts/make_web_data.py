"""Write the named example webs, a foam skeleton, block complexes and foam parameter files to data/."""

from __future__ import annotations

import argparse
from pathlib import Path

from webfloer import floerblocks, webs
from webfloer.gf2 import GF2Matrix
from webfloer.webmodel import FoamSkeleton, Seam, TetraPoint, canonical_json, serialize_foam, serialize_web

WEBS = {
    "unknot": webs.unknot,
    "unlink3": lambda: webs.unlink(3),
    "theta": webs.theta,
    "theta_plus_unknot": webs.theta_plus_unknot,
    "tetrahedron": webs.tetrahedron,
    "l1": lambda: webs.prism(1),
    "l2": lambda: webs.prism(2),
    "l3": lambda: webs.prism(3),
    "l4": lambda: webs.prism(4),
    "l5": lambda: webs.prism(5),
    "petersen": webs.petersen,
    "twisted_handcuff": webs.twisted_handcuff,
    "hopf_handcuff": webs.hopf_handcuff,
}

PARAMS = {
    "cp2-deg2": {"c1_sq": 4, "sigma": 1, "c1_dot_c": 4, "c_self_int": 4},
    "cp2-deg4": {"c1_sq": 1, "sigma": 1, "c1_dot_c": 4, "c_self_int": 16},
    "genus3-surface": {"b1_r": 6, "self_int_r": 0},
    "vortex": {"deg_L": 1, "deg_K": 4, "e": 1},
    "picard": {"c": "1/2", "betas": [1]},
}


def theta_foam() -> FoamSkeleton:
    # product foam on the theta web: three facets meeting along two seams
    return FoamSkeleton(("f1", "f2", "f3"), (Seam("s1", ("f1", "f2", "f3")), Seam("s2", ("f1", "f2", "f3"))), ())


def cone_foam() -> FoamSkeleton:
    # cone on the tetrahedral web: six facets, four seams, one singular point
    pairs = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    facets = tuple(f"f{a}{b}" for a, b in pairs)
    seams = tuple(
        Seam(f"s{v}", tuple(f"f{a}{b}" for a, b in pairs if v in (a, b))) for v in range(4)
    )
    return FoamSkeleton(facets, seams, (TetraPoint("t", tuple(s.id for s in seams), facets),))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data")
    out = Path(ap.parse_args().out)
    (out / "webs").mkdir(parents=True, exist_ok=True)
    (out / "foams").mkdir(exist_ok=True)
    (out / "complexes").mkdir(exist_ok=True)
    (out / "params").mkdir(exist_ok=True)
    for name, build in WEBS.items():
        (out / "webs" / f"{name}.json").write_text(serialize_web(build()) + "\n")
    (out / "foams" / "theta_product.json").write_text(serialize_foam(theta_foam()) + "\n")
    (out / "foams" / "tetra_cone.json").write_text(serialize_foam(cone_foam()) + "\n")
    bc = floerblocks.unknot_pattern(10)
    (out / "complexes" / "unknot10.json").write_text(canonical_json(floerblocks.complex_to_doc(bc)) + "\n")
    # bar_ss squares to a nonzero map, so the identities fail
    bad = bc.with_blocks(bar_ss=GF2Matrix.from_entries(10, 10, [(0, 1), (1, 2)]))
    (out / "complexes" / "broken.json").write_text(canonical_json(floerblocks.complex_to_doc(bad)) + "\n")
    (out / "complexes" / "tower_up.json").write_text(canonical_json({"module": [{"shape": "TowerUp", "offset": 0}]}) + "\n")
    for name, doc in PARAMS.items():
        (out / "params" / f"{name}.json").write_text(canonical_json(doc) + "\n")
    print(f"wrote example data under {out}/")


if __name__ == "__main__":
    main()
