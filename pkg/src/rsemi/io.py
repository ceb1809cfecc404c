"""JSON-shaped file formats for algebras, semilattices, actions and double actions.

Serialization is canonical: element names are sorted, indices refer to the
sorted order and keys are emitted in sorted order, so ``serialize(parse(f))``
is byte-stable.
"""
from __future__ import annotations

import json
from pathlib import Path

from ._util import fmt
from .actions import PartialAction
from .algebra import FiniteRestrictionAlgebra
from .constructions import DoubleAction
from .errors import MalformedInputError, ParseError
from .monoids import FiniteMonoid, FreeMonoid
from .order import build_semilattice


def _load(source):
    """Parse JSON from a path, a JSON string, or pass a dict through."""
    if isinstance(source, dict):
        return source
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
        where = str(path)
    else:
        text, where = source, "<string>"
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{where}: top level must be an object")
    return data


def _field(data, key, kind, where):
    if key not in data:
        raise ParseError(f"{where}: missing field {key!r}")
    if not isinstance(data[key], kind):
        raise ParseError(f"{where}: field {key!r} has the wrong type")
    return data[key]


def _names(data, where):
    names = _field(data, "elements", list, where)
    if not all(isinstance(n, str) for n in names):
        raise ParseError(f"{where}: element names must be strings")
    if len(set(names)) != len(names):
        raise ParseError(f"{where}: repeated element name")
    return names


# -- algebras ----------------------------------------------------------------------

def parse_algebra(source):
    data = _load(source)
    where = "algebra"
    names = _names(data, where)
    mul = _field(data, "mul", list, where)
    n = len(names)
    if len(mul) != n:
        raise ParseError(f"{where}: mul has {len(mul)} rows, expected {n}")
    for i, row in enumerate(mul):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{where}: mul row {i} has length {len(row) if isinstance(row, list) else '?'}, "
                             f"expected {n}")
    star = _field(data, "star", list, where)
    plus = _field(data, "plus", list, where)
    identity = data.get("identity")
    alg = FiniteRestrictionAlgebra.from_indices(names, mul, star, plus, identity)
    alg.provenance = data.get("provenance")
    return alg


def algebra_to_dict(alg):
    names = {a: fmt(a) for a in alg.elements}
    if len(set(names.values())) != len(names):
        raise MalformedInputError("element names collide after rendering")
    order = sorted(alg.elements, key=lambda a: names[a])
    idx = {a: i for i, a in enumerate(order)}
    d = {
        "elements": [names[a] for a in order],
        "mul": [[idx[alg.mul(a, b)] for b in order] for a in order],
        "star": [idx[alg.star(a)] for a in order],
        "plus": [idx[alg.plus(a)] for a in order],
        "identity": None if alg.identity is None else idx[alg.identity],
    }
    if alg.provenance:
        d["provenance"] = {k: _jsonable(v) for k, v in alg.provenance.items()}
    return d


def _jsonable(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return fmt(v)


def _flat(v):
    return not isinstance(v, (dict, list)) or (isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v))


def _dump(v, depth):
    if _flat(v):
        return json.dumps(v, ensure_ascii=False)
    pad, inner = " " * depth, " " * (depth + 1)
    if isinstance(v, dict):
        body = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_dump(v[k], depth + 1)}" for k in sorted(v)]
        return "{\n" + ",\n".join(body) + "\n" + pad + "}"
    body = [inner + _dump(x, depth + 1) for x in v]
    return "[\n" + ",\n".join(body) + "\n" + pad + "]"


def dumps(d):
    """Canonical JSON: sorted keys, one innermost list per line."""
    return _dump(d, 0) + "\n"


def serialize_algebra(alg):
    return dumps(algebra_to_dict(alg))


# -- semilattices -------------------------------------------------------------------

def parse_semilattice(source):
    data = _load(source)
    where = "semilattice"
    names = _names(data, where)
    if "meet" in data:
        rows = _field(data, "meet", list, where)
        n = len(names)
        if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            bad = next((i for i, r in enumerate(rows) if not isinstance(r, list) or len(r) != n), len(rows))
            raise ParseError(f"{where}: meet row {bad} is malformed")
        try:
            meet = {(names[i], names[j]): names[k] for i, r in enumerate(rows) for j, k in enumerate(r)}
        except (IndexError, TypeError) as exc:
            raise MalformedInputError(f"{where}: meet index out of range") from exc
        return build_semilattice(names, meet=meet, name=data.get("name", "Y"))
    pairs = _field(data, "leq", list, where)
    rel = []
    for p in pairs:
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError(f"{where}: leq entries must be pairs")
        rel.append(tuple(names[x] if isinstance(x, int) else x for x in p))
    return build_semilattice(names, leq=rel, name=data.get("name", "Y"))


def semilattice_to_dict(Y):
    order = sorted(Y.elements, key=fmt)
    return {"elements": [fmt(y) for y in order],
            "leq": sorted([fmt(x), fmt(y)] for x in order for y in order if x != y and Y.leq(x, y))}


# -- monoids and actions ------------------------------------------------------------

def parse_monoid(data, where="monoid"):
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object")
    if "free" in data:
        free = data["free"]
        return FreeMonoid(_field(free, "alphabet", list, where), _field(free, "bound", int, where))
    tab = _field(data, "table", dict, where)
    names = _names(tab, where)
    rows = _field(tab, "mul", list, where)
    return FiniteMonoid.from_rows(names, rows, tab.get("identity", 0), tab.get("name", "T")).verify()


def monoid_to_dict(T):
    if isinstance(T, FreeMonoid):
        return {"free": {"alphabet": list(T.alphabet), "bound": T.bound}}
    names = list(T.elements)
    idx = {t: i for i, t in enumerate(names)}
    return {"table": {"elements": [fmt(t) for t in names],
                      "mul": [[idx[T.mul(s, t)] for t in names] for s in names],
                      "identity": None if T.identity is None else idx[T.identity]}}


def _lattice(data, base):
    if isinstance(data, str):
        return parse_semilattice(base / data if base else data)
    return parse_semilattice(data)


def parse_action(source):
    """Partial action file; ``act`` lists [t, y, t·y] triples by element name."""
    data = _load(source)
    base = Path(source).parent if isinstance(source, (str, Path)) and not str(source).lstrip().startswith("{") else None
    where = "action"
    T = parse_monoid(_field(data, "monoid", dict, where))
    Y = _lattice(_field(data, "lattice", (dict, str), where), base)
    entries = _field(data, "act", list, where)
    table = {}
    for e in entries:
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError(f"{where}: act entries must be [t, y, value]")
        t, y, v = e
        table[t, y] = v
    side = data.get("side", "left")
    if data.get("generators_only"):
        for (t, _y) in table:
            if len(t) != 1:
                raise MalformedInputError(f"generator table entry for non-letter {t!r}")
        inv = {(t, v): y for (t, y), v in table.items()}
        return PartialAction.from_generators(T, Y, lambda a, y: table.get((a, y)),
                                             lambda a, y: inv.get((a, y)), side)
    if not T.closed:
        raise MalformedInputError("an explicit word table needs generators_only for free monoids")
    return PartialAction.from_table(T, Y, table, side)


def action_to_dict(pa, generators_only=False):
    T = pa.monoid
    ts = T.alphabet if generators_only else T.elements
    act = sorted([fmt(t), fmt(y), fmt(v)] for t in ts for y in pa.lattice.elements
                 if (v := pa.act(t, y)) is not None)
    d = {"monoid": monoid_to_dict(T), "lattice": semilattice_to_dict(pa.lattice), "act": act, "side": pa.side}
    if generators_only:
        d["generators_only"] = True
    return d


def parse_double_action(source):
    data = _load(source)
    base = Path(source).parent if isinstance(source, (str, Path)) and not str(source).lstrip().startswith("{") else None
    where = "double action"
    T = parse_monoid(_field(data, "monoid", dict, where))
    Y = _lattice(_field(data, "lattice", (dict, str), where), base)
    maps = {}
    for key in ("star", "bullet"):
        m = {}
        for e in _field(data, key, list, where):
            if not isinstance(e, list) or len(e) != 3:
                raise ParseError(f"{where}: {key} entries must be [t, y, value]")
            m[e[0], e[1]] = e[2]
        missing = [(t, y) for t in T.elements for y in Y.elements if (t, y) not in m]
        if missing:
            raise MalformedInputError(f"{where}: {key} is not total, missing {missing[0]}")
        maps[key] = m
    return DoubleAction(T, Y, maps["star"], maps["bullet"])


def double_action_to_dict(da):
    return {"monoid": monoid_to_dict(da.monoid), "lattice": semilattice_to_dict(da.lattice),
            "star": sorted([t, y, v] for (t, y), v in da.star.items()),
            "bullet": sorted([t, y, v] for (t, y), v in da.bullet.items())}


def kind_of(source):
    """Guess the file kind from its fields."""
    data = _load(source)
    if "star" in data and "bullet" in data:
        return "double"
    if "act" in data:
        return "action"
    if "mul" in data:
        return "algebra"
    if "leq" in data or "meet" in data:
        return "semilattice"
    raise ParseError("unrecognised file: expected an algebra, semilattice, action or double action")
