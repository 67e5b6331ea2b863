"""JSON problem descriptors.

A descriptor is one JSON object with ``"schema_version": 1``.  Rationals
are written as strings ``"p/q"`` (integers are accepted too); matrices are
arrays of rows.  See ``docs/schema.md`` for the full layout.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import LocalSystem, OneCocycle, SimplicialComplex
from .equivariant import EquivariantLocalSystem, FiniteGroup, SimplicialAction
from .errors import SchemaError
from .exactalg import CountingSeries
from .morse import CriticalComponent
from .symplectic import FixedPointData

__all__ = ["SCHEMA_VERSION", "Problem", "load_problem", "parse_problem"]

SCHEMA_VERSION = 1


@dataclass
class Problem:
    complex: SimplicialComplex = None
    cocycle: OneCocycle = None
    local_system: LocalSystem = None
    group: FiniteGroup = None
    action: SimplicialAction = None
    equivariant_system: EquivariantLocalSystem = None
    degree: int = None
    pmax: int = None
    components: list = None
    novikov_series: CountingSeries = None
    morse_series: CountingSeries = None
    fixed_points: FixedPointData = None
    equivariant_dims: list = None
    limit: int = None
    raw: dict = field(default_factory=dict, repr=False)


def _rat(x, path):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError(f"{path}: expected a rational string like \"p/q\" or an integer")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"{path}: {x!r} is not a rational number") from None


def _int(x, path, minimum=None):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{path}: expected an integer")
    if minimum is not None and x < minimum:
        raise SchemaError(f"{path}: must be at least {minimum}")
    return x


def _list(x, path):
    if not isinstance(x, list):
        raise SchemaError(f"{path}: expected an array")
    return x


def _obj(x, path):
    if not isinstance(x, dict):
        raise SchemaError(f"{path}: expected an object")
    return x


def _matrix(x, path, d=None):
    rows = _list(x, path)
    out = [[_rat(v, f"{path}[{i}][{j}]") for j, v in enumerate(_list(r, f"{path}[{i}]"))]
           for i, r in enumerate(rows)]
    n = len(out)
    if any(len(r) != n for r in out) or (d is not None and n != d):
        raise SchemaError(f"{path}: expected a square {d or n}x{d or n} matrix")
    return out


def _edge(x, path, n_vertices):
    e = _list(x, path)
    if len(e) != 2:
        raise SchemaError(f"{path}: an edge has two vertices")
    a, b = (_int(v, f"{path}[{i}]", 0) for i, v in enumerate(e))
    if a >= n_vertices or b >= n_vertices:
        raise SchemaError(f"{path}: vertex out of range")
    return (a, b)


def _orient(edge, value, invert):
    """Store values on increasing edges; reversed input edges are flipped."""
    a, b = edge
    if a < b:
        return (a, b), value
    return (b, a), invert(value)


def _complex(x, path):
    x = _obj(x, path)
    n = _int(x.get("vertices"), f"{path}.vertices", 0)
    if "facets" in x and "simplices" in x:
        raise SchemaError(f"{path}: give either facets or simplices, not both")
    key = "facets" if "facets" in x else "simplices"
    simplices = []
    for i, s in enumerate(_list(x.get(key, []), f"{path}.{key}")):
        s = [_int(v, f"{path}.{key}[{i}]", 0) for v in _list(s, f"{path}.{key}[{i}]")]
        if any(v >= n for v in s):
            raise SchemaError(f"{path}.{key}[{i}]: vertex out of range")
        if len(set(s)) != len(s) or not s:
            raise SchemaError(f"{path}.{key}[{i}]: vertices must be distinct")
        simplices.append(tuple(sorted(s)))
    if key == "facets":
        return SimplicialComplex.from_facets(n, simplices)
    return SimplicialComplex(n, simplices)


def _cocycle(x, K, path):
    values = {}
    for i, item in enumerate(_list(x, path)):
        item = _obj(item, f"{path}[{i}]")
        e = _edge(item.get("edge"), f"{path}[{i}].edge", K.n_vertices)
        e, v = _orient(e, _rat(item.get("value"), f"{path}[{i}].value"), lambda v: -v)
        values[e] = v
    return OneCocycle(K, values)


def _local_system(x, K, path):
    if x is None:
        return LocalSystem.trivial(K)
    x = _obj(x, path)
    d = _int(x.get("rank", 1), f"{path}.rank", 1)
    transports = {}
    for i, item in enumerate(_list(x.get("transports", []), f"{path}.transports")):
        item = _obj(item, f"{path}.transports[{i}]")
        e = _edge(item.get("edge"), f"{path}.transports[{i}].edge", K.n_vertices)
        m = _matrix(item.get("matrix"), f"{path}.transports[{i}].matrix", d)
        if e[0] > e[1]:
            from .exactalg import qmat

            try:
                m = qmat.inverse(qmat.qmatrix(m))
            except ZeroDivisionError:
                raise SchemaError(f"{path}.transports[{i}]: singular transport") from None
            e = (e[1], e[0])
        transports[e] = m
    return LocalSystem(K, d, transports)


def _group(x, path):
    x = _obj(x, path)
    if "cyclic" in x:
        return FiniteGroup.cyclic(_int(x["cyclic"], f"{path}.cyclic", 1))
    table = _list(x.get("table"), f"{path}.table")
    rows = [[_int(v, f"{path}.table[{i}]", 0) for v in _list(r, f"{path}.table[{i}]")]
            for i, r in enumerate(table)]
    ident = x.get("identity")
    if ident is not None:
        ident = _int(ident, f"{path}.identity", 0)
    from .errors import ValidationError

    try:
        return FiniteGroup(rows, ident)
    except ValidationError as exc:
        raise SchemaError(f"{path}: {exc}") from None


def _action(x, G, K, path):
    perms = _list(x, path)
    if len(perms) != G.order:
        raise SchemaError(f"{path}: need {G.order} permutations, one per group element")
    out = []
    for g, p in enumerate(perms):
        p = [_int(v, f"{path}[{g}]", 0) for v in _list(p, f"{path}[{g}]")]
        if len(p) != K.n_vertices or any(v >= K.n_vertices for v in p):
            raise SchemaError(f"{path}[{g}]: expected images of all {K.n_vertices} vertices")
        out.append(p)
    return SimplicialAction(G, K, out)


def _fiber_maps(doc, F, action, path):
    G = action.group
    if "character" in doc:
        chi = [_rat(v, f"{path}.character[{g}]")
               for g, v in enumerate(_list(doc["character"], f"{path}.character"))]
        if len(chi) != G.order:
            raise SchemaError(f"{path}.character: need one value per group element")
        return EquivariantLocalSystem.character(action, chi, F)
    maps = {}
    for i, item in enumerate(_list(doc.get("fiber_maps", []), f"{path}.fiber_maps")):
        item = _obj(item, f"{path}.fiber_maps[{i}]")
        g = _int(item.get("element"), f"{path}.fiber_maps[{i}].element", 0)
        v = _int(item.get("vertex"), f"{path}.fiber_maps[{i}].vertex", 0)
        if g >= G.order or v >= action.complex.n_vertices:
            raise SchemaError(f"{path}.fiber_maps[{i}]: element or vertex out of range")
        maps[(g, v)] = _matrix(item.get("matrix"), f"{path}.fiber_maps[{i}].matrix", F.rank)
    return EquivariantLocalSystem(F, action, maps)


def _series(x, path):
    coeffs = [_rat(v, f"{path}[{i}]") for i, v in enumerate(_list(x, path))]
    if not coeffs:
        raise SchemaError(f"{path}: a series needs at least one coefficient")
    return CountingSeries(coeffs)


def _components(x, G, path):
    out = []
    for i, item in enumerate(_list(x, path)):
        p = f"{path}[{i}]"
        item = _obj(item, p)
        label = str(item.get("label", f"Z{i}"))
        index = _int(item.get("index"), f"{p}.index", 0)
        stab = [_int(g, f"{p}.stabilizer", 0) for g in _list(item.get("stabilizer", [0]), f"{p}.stabilizer")]
        if "series" in item:
            out.append(CriticalComponent(label, index, stab, series=_series(item["series"], f"{p}.series")))
            continue
        if "complex" not in item:
            raise SchemaError(f"{p}: give either series or complex")
        K = _complex(item["complex"], f"{p}.complex")
        F = _local_system(item.get("local_system"), K, f"{p}.local_system")
        o = _local_system(item.get("orientation"), K, f"{p}.orientation")
        if "stabilizer_action" in item:
            sub = _obj(item["stabilizer_action"], f"{p}.stabilizer_action")
            H = G.subgroup(stab)[0] if G is not None else FiniteGroup.trivial()
            act = _action(sub.get("permutations", [list(range(K.n_vertices))] * H.order), H, K,
                          f"{p}.stabilizer_action.permutations")
            F = _fiber_maps(sub, F, act, f"{p}.stabilizer_action")
        out.append(CriticalComponent(label, index, stab, complex=K, local_system=F, orientation=o))
    return out


def _fixed_points(x, path):
    x = _obj(x, path)
    comps = []
    for i, item in enumerate(_list(x.get("components", []), f"{path}.components")):
        item = _obj(item, f"{path}.components[{i}]")
        comps.append((_series(item.get("series", ["1"]), f"{path}.components[{i}].series"),
                      _int(item.get("index"), f"{path}.components[{i}].index", 0)))
    euler = x.get("euler")
    return FixedPointData(
        n=_int(x.get("n"), f"{path}.n", 0),
        d=_int(x.get("d", 1), f"{path}.d", 1),
        components=comps,
        torus_rank=_int(x.get("torus_rank", 1), f"{path}.torus_rank", 0),
        euler=None if euler is None else _int(euler, f"{path}.euler"),
    )


def parse_problem(doc):
    """Turn a decoded JSON document into a :class:`Problem`."""
    doc = _obj(doc, "$")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"$.schema_version: expected {SCHEMA_VERSION}, got {version!r}")
    known = {
        "schema_version", "description", "complex", "cocycle", "local_system", "group",
        "action", "character", "fiber_maps", "degree", "pmax", "critical_components",
        "novikov_series", "morse_series", "fixed_points", "equivariant_dims", "limit",
    }
    extra = sorted(set(doc) - known)
    if extra:
        raise SchemaError(f"$: unknown field {extra[0]!r}")
    P = Problem(raw=doc)
    if "complex" in doc:
        K = P.complex = _complex(doc["complex"], "$.complex")
        P.cocycle = _cocycle(doc.get("cocycle", []), K, "$.cocycle")
        P.local_system = _local_system(doc.get("local_system"), K, "$.local_system")
    elif any(k in doc for k in ("cocycle", "local_system", "action")):
        raise SchemaError("$: cocycle, local_system and action need a complex")
    if "group" in doc:
        P.group = _group(doc["group"], "$.group")
        if P.complex is not None:
            perms = doc.get("action", [list(range(P.complex.n_vertices))] * P.group.order)
            P.action = _action(perms, P.group, P.complex, "$.action")
            P.equivariant_system = _fiber_maps(doc, P.local_system, P.action, "$")
    elif "action" in doc:
        raise SchemaError("$.action: an action needs a group")
    for key in ("degree", "pmax", "limit"):
        if key in doc:
            setattr(P, key, _int(doc[key], f"$.{key}", 0))
    if "critical_components" in doc:
        P.components = _components(doc["critical_components"], P.group, "$.critical_components")
    for key in ("novikov_series", "morse_series"):
        if key in doc:
            setattr(P, key, _series(doc[key], f"$.{key}"))
    if "fixed_points" in doc:
        P.fixed_points = _fixed_points(doc["fixed_points"], "$.fixed_points")
    if "equivariant_dims" in doc:
        P.equivariant_dims = [
            _int(v, f"$.equivariant_dims[{i}]", 0)
            for i, v in enumerate(_list(doc["equivariant_dims"], "$.equivariant_dims"))
        ]
    return P


def load_problem(text):
    """Parse JSON text; syntax errors become SchemaError with the position."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_problem(doc)
