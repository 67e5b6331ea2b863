"""Write the JSON fixtures under fixtures/ (run once; the files are committed)."""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent / "fixtures"

circle3 = {"vertices": 3, "facets": [[0, 1], [1, 2], [0, 2]]}
circle4 = {"vertices": 4, "facets": [[0, 1], [1, 2], [2, 3], [0, 3]]}
circle6 = {"vertices": 6, "facets": [[i, (i + 1) % 6] for i in range(6)]}
antipodal = [[0, 1, 2, 3], [2, 3, 0, 1]]


def torus(p=3, q=3):
    v = lambda i, j: (i % p) * q + (j % q)
    facets = []
    for i in range(p):
        for j in range(q):
            facets += [[v(i, j), v(i + 1, j), v(i + 1, j + 1)], [v(i, j), v(i, j + 1), v(i + 1, j + 1)]]
    return {"vertices": p * q, "facets": facets}


def torus_theta(p=3, q=3):
    # pulled back from the first circle factor: 1 on each step i -> i+1
    out = {}
    t = torus(p, q)
    for f in t["facets"]:
        for a in f:
            for b in f:
                if a < b:
                    da = (b // q - a // q) % p
                    out[(a, b)] = 1 if da == 1 else (-1 if da == p - 1 else 0)
    return [{"edge": list(e), "value": str(v)} for e, v in sorted(out.items()) if v]


V = 1
fixtures = {
    "circle_loop3": {
        "schema_version": V, "description": "triangle circle, cocycle with loop sum 3",
        "complex": circle3,
        "cocycle": [{"edge": [0, 1], "value": "1"}, {"edge": [1, 2], "value": "1"}, {"edge": [0, 2], "value": "-1"}],
    },
    "circle_theta0": {
        "schema_version": V, "description": "triangle circle, zero cocycle", "complex": circle3,
    },
    "circle_half": {
        "schema_version": V, "description": "4-gon with rational cocycle, loop sum 1/2",
        "complex": circle4,
        "cocycle": [{"edge": [0, 1], "value": "1/2"}],
    },
    "moebius_twist": {
        "schema_version": V, "description": "sign local system on the triangle circle with twist",
        "complex": circle3,
        "local_system": {"rank": 1, "transports": [{"edge": [0, 2], "matrix": [["-1"]]}]},
        "cocycle": [{"edge": [0, 1], "value": "1"}],
    },
    "torus_twisted": {
        "schema_version": V, "description": "3x3 torus, cocycle pulled back from one factor",
        "complex": torus(), "cocycle": torus_theta(),
    },
    "disk": {
        "schema_version": V, "description": "full 2-simplex with a closed cocycle",
        "complex": {"vertices": 3, "facets": [[0, 1, 2]]},
        "cocycle": [{"edge": [0, 1], "value": "1"}, {"edge": [1, 2], "value": "1"}, {"edge": [0, 2], "value": "2"}],
    },
    "not_closed": {
        "schema_version": V, "description": "full 2-simplex with a non-closed cochain",
        "complex": {"vertices": 3, "facets": [[0, 1, 2]]},
        "cocycle": [{"edge": [0, 1], "value": "1"}, {"edge": [1, 2], "value": "1"}, {"edge": [0, 2], "value": "3"}],
    },
    "z2_point": {
        "schema_version": V, "description": "Z2 acting trivially on a point", "complex": {"vertices": 1},
        "group": {"cyclic": 2}, "degree": 2,
    },
    "z2_point_sign": {
        "schema_version": V, "description": "Z2 on a point, fiber action by -1", "complex": {"vertices": 1},
        "group": {"cyclic": 2}, "character": ["1", "-1"], "degree": 2,
    },
    "free_circle": {
        "schema_version": V, "description": "antipodal Z2 on the 4-gon", "complex": circle4,
        "group": {"cyclic": 2}, "action": antipodal, "degree": 1,
    },
    "free_circle_twisted": {
        "schema_version": V, "description": "antipodal Z2 on the 4-gon, invariant cocycle with loop sum 2",
        "complex": circle4, "group": {"cyclic": 2}, "action": antipodal,
        "cocycle": [{"edge": [0, 1], "value": "1"}, {"edge": [2, 3], "value": "1"}], "degree": 1,
    },
    "free_circle_moebius": {
        "schema_version": V, "description": "antipodal Z2 on the 4-gon, fiber action by -1",
        "complex": circle4, "group": {"cyclic": 2}, "action": antipodal, "character": ["1", "-1"], "degree": 1,
    },
    "s0_swap": {
        "schema_version": V, "description": "Z2 swapping two points", "complex": {"vertices": 2},
        "group": {"cyclic": 2}, "action": [[0, 1], [1, 0]], "degree": 2,
    },
    "z3_hexagon": {
        "schema_version": V, "description": "Z3 rotating the 6-gon, cocycle 1 along the loop",
        "complex": circle6, "group": {"cyclic": 3},
        "action": [[(v + 2 * g) % 6 for v in range(6)] for g in range(3)],
        "cocycle": [{"edge": [i, i + 1], "value": "1"} for i in range(5)] + [{"edge": [5, 0], "value": "1"}],
        "degree": 1,
    },
    "nonadmissible": {
        "schema_version": V, "description": "Z2 flipping the edge [1,2]",
        "complex": {"vertices": 3, "facets": [[0, 1], [0, 2], [1, 2]]},
        "group": {"cyclic": 2}, "action": [[0, 1, 2], [0, 2, 1]], "degree": 1,
    },
    "resource_limit": {
        "schema_version": V, "description": "Z3 on the 6-gon with a tiny size cap",
        "complex": circle6, "group": {"cyclic": 3},
        "action": [[(v + 2 * g) % 6 for v in range(6)] for g in range(3)], "degree": 2, "limit": 50,
    },
    "missing_version": {"complex": {"vertices": 1}},
    "circle_height": {
        "schema_version": V, "description": "height function on the circle: minimum and maximum",
        "complex": circle3, "pmax": 4,
        "critical_components": [
            {"label": "min", "index": 0, "complex": {"vertices": 1}},
            {"label": "max", "index": 1, "complex": {"vertices": 1}},
        ],
    },
    "circle_no_zeros": {
        "schema_version": V, "description": "nowhere-vanishing form on the circle: no critical points",
        "complex": circle3, "pmax": 4, "critical_components": [],
        "cocycle": [{"edge": [0, 1], "value": "1"}, {"edge": [1, 2], "value": "1"}, {"edge": [0, 2], "value": "-1"}],
    },
    "inconsistent": {
        "schema_version": V, "description": "Morse data inconsistent with the Novikov series",
        "morse_series": ["1", "2", "1"], "novikov_series": ["1", "0", "1"], "pmax": 2,
    },
    "empty_critical": {
        "schema_version": V, "description": "no critical components and zero Novikov series",
        "critical_components": [], "novikov_series": ["0", "0", "0", "0", "0"], "pmax": 4,
    },
    "z2_orbit_points": {
        "schema_version": V, "description": "Z2 swapping two critical points of index 0 and two of index 1",
        "group": {"cyclic": 2}, "pmax": 3, "novikov_series": ["1", "1", "0", "0"],
        "critical_components": [
            {"label": "a", "index": 0, "stabilizer": [0], "series": ["1"]},
            {"label": "a'", "index": 0, "stabilizer": [0], "series": ["1"]},
            {"label": "b", "index": 1, "stabilizer": [0], "series": ["1"]},
            {"label": "b'", "index": 1, "stabilizer": [0], "series": ["1"]},
        ],
    },
    "z2_fixed_sign": {
        "schema_version": V, "description": "Z2-fixed critical point where the stabilizer acts by -1",
        "group": {"cyclic": 2}, "pmax": 2, "novikov_series": ["0", "0", "0"],
        "critical_components": [
            {"label": "p", "index": 0, "stabilizer": [0, 1], "complex": {"vertices": 1},
             "stabilizer_action": {"character": ["1", "-1"]}},
        ],
    },
    "s2_rotation": {
        "schema_version": V, "description": "rotation of S^2: two fixed points of index 0 and 2",
        "fixed_points": {"n": 2, "d": 1, "torus_rank": 1, "euler": 2,
                         "components": [{"series": ["1"], "index": 0}, {"series": ["1"], "index": 2}]},
        "novikov_series": ["1", "0", "2", "0", "2"], "pmax": 4,
    },
    "s2_wrong_series": {
        "schema_version": V, "description": "S^2 fixed points against a wrong Novikov series",
        "fixed_points": {"n": 2, "d": 1, "torus_rank": 1, "euler": 2,
                         "components": [{"series": ["1"], "index": 0}, {"series": ["1"], "index": 2}]},
        "novikov_series": ["1", "0", "1", "0", "1"], "pmax": 4,
    },
    "empty_fixed": {
        "schema_version": V, "description": "circle action without fixed points",
        "fixed_points": {"n": 2, "d": 1, "components": []},
        "novikov_series": ["0", "0", "0", "0", "0"], "pmax": 4,
    },
    "symmetry_violation": {
        "schema_version": V, "description": "series whose fixed-point counts break the index symmetry",
        "fixed_points": {"n": 4, "d": 1, "components": [
            {"series": ["1"], "index": 0}, {"series": ["2"], "index": 4}]},
        "novikov_series": ["1", "0", "1", "0", "3"], "pmax": 4,
    },
    "kahler_s2": {
        "schema_version": V, "description": "untwisted equivariant dims of the rotated S^2",
        "fixed_points": {"n": 2, "euler": 2, "components": []},
        "equivariant_dims": [1, 0, 2, 0, 2], "pmax": 4,
    },
}

# golden cases: (name, fixture, extra args, command)
cases = [
    ("circle_loop3.novikov", "circle_loop3", ["novikov", "--jumps"]),
    ("circle_loop3.novikov.json", "circle_loop3", ["novikov", "--jumps", "--json"]),
    ("circle_theta0.novikov", "circle_theta0", ["novikov", "--jumps"]),
    ("circle_half.novikov", "circle_half", ["novikov", "--jumps"]),
    ("moebius_twist.novikov", "moebius_twist", ["novikov", "--jumps"]),
    ("torus_twisted.novikov", "torus_twisted", ["novikov", "--jumps"]),
    ("disk.novikov", "disk", ["novikov", "--jumps"]),
    ("not_closed.novikov", "not_closed", ["novikov"]),
    ("malformed.novikov", "malformed", ["novikov"]),
    ("missing_version.novikov", "missing_version", ["novikov"]),
    ("z2_point.equivariant", "z2_point", ["equivariant", "--stability-check"]),
    ("z2_point_sign.equivariant", "z2_point_sign", ["equivariant"]),
    ("free_circle.equivariant", "free_circle", ["equivariant", "--stability-check"]),
    ("free_circle_moebius.equivariant", "free_circle_moebius", ["equivariant", "--stability-check"]),
    ("free_circle_twisted.novikov", "free_circle_twisted", ["novikov", "--jumps"]),
    ("s0_swap.equivariant", "s0_swap", ["equivariant"]),
    ("z3_hexagon.novikov", "z3_hexagon", ["novikov", "--jumps"]),
    ("nonadmissible.equivariant", "nonadmissible", ["equivariant"]),
    ("resource_limit.equivariant", "resource_limit", ["equivariant"]),
    ("circle_height.verify", "circle_height", ["verify"]),
    ("circle_no_zeros.verify", "circle_no_zeros", ["verify"]),
    ("inconsistent.verify", "inconsistent", ["verify"]),
    ("inconsistent.verify.json", "inconsistent", ["verify", "--json"]),
    ("empty_critical.verify", "empty_critical", ["verify"]),
    ("z2_orbit_points.verify", "z2_orbit_points", ["verify"]),
    ("z2_fixed_sign.verify", "z2_fixed_sign", ["verify"]),
    ("s2_rotation.symplectic", "s2_rotation", ["symplectic"]),
    ("s2_rotation.symplectic.json", "s2_rotation", ["symplectic", "--json"]),
    ("s2_wrong_series.symplectic", "s2_wrong_series", ["symplectic"]),
    ("empty_fixed.symplectic", "empty_fixed", ["symplectic"]),
    ("symmetry_violation.symplectic", "symmetry_violation", ["symplectic"]),
    ("kahler_s2.symplectic", "kahler_s2", ["symplectic"]),
]

if __name__ == "__main__":
    ROOT.mkdir(exist_ok=True)
    for name, doc in fixtures.items():
        (ROOT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
    (ROOT / "malformed.json").write_text('{"schema_version": 1,\n "complex": {"vertices": 3,, }\n}\n')
    (ROOT / "golden").mkdir(exist_ok=True)
    manifest = [{"name": n, "fixture": f"{f}.json", "args": a} for n, f, a in cases]
    (ROOT / "golden" / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")
