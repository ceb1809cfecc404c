"""Named small algebras, monoids and partial actions used by tests and the CLI."""
from __future__ import annotations

from .actions import PartialAction
from .algebra import FiniteRestrictionAlgebra
from .constructions import w_product
from .monoids import FiniteMonoid
from .order import build_semilattice, chain


def semilattice_algebra(Y, provenance=None):
    """A semilattice as a restriction monoid (or semigroup) with x* = x+ = x."""
    return FiniteRestrictionAlgebra.from_operations(
        Y.elements, Y.meet, lambda x: x, lambda x: x, Y.top, provenance)


def c2_lattice():
    return build_semilattice(["b", "1"], leq=[("b", "1")], name="C2")


def c2():
    """The two-element chain b < 1."""
    return semilattice_algebra(c2_lattice(), {"fixture": "C2"})


def chain3():
    return semilattice_algebra(chain(3), {"fixture": "3-chain"})


def b2():
    """The five-element Brandt semigroup on matrix units; e = e11, f = e22, a = e12."""
    units = {"e": (1, 1), "f": (2, 2), "a": (1, 2), "a^-1": (2, 1)}
    name = {v: k for k, v in units.items()}
    els = ["0", "e", "f", "a", "a^-1"]

    def mul(x, y):
        if x == "0" or y == "0":
            return "0"
        (i, j), (k, m) = units[x], units[y]
        return name[i, m] if j == k else "0"

    inv = {"0": "0", "e": "e", "f": "f", "a": "a^-1", "a^-1": "a"}
    return FiniteRestrictionAlgebra.from_operations(
        els, mul, lambda x: mul(inv[x], x), lambda x: mul(x, inv[x]), None, {"fixture": "B2"})


def b2_1():
    from .covers import adjoin_identity

    S = adjoin_identity(b2())
    S.provenance = {"fixture": "B2 with identity"}
    return S


def reduced_monoid():
    """{1, t, tt} with t³ = t² and x* = x+ = 1."""
    T = cyclic_monoid(3, 2)
    one = T.identity
    return FiniteRestrictionAlgebra.from_operations(
        T.elements, T.mul, lambda x: one, lambda x: one, one, {"fixture": "reduced monoid"})


def trivial_monoid():
    return FiniteMonoid(["1"], {("1", "1"): "1"}, "1", "1")


def idempotent_monoid():
    """{1, t} with t² = t."""
    return FiniteMonoid.from_rows(["1", "t"], [[0, 1], [1, 1]], 0, "{1,t}")


def cyclic_group(n):
    names = ["1"] + ["g" * i for i in range(1, n)]
    return FiniteMonoid.from_rows(names, [[(i + j) % n for j in range(n)] for i in range(n)], 0, f"Z{n}")


def cyclic_monoid(size, index):
    """{1, t, ..., t^(size-1)} with t^size = t^index."""
    names = ["1"] + ["t" * i for i in range(1, size)]

    def red(k):
        while k >= size:
            k -= size - index
        return k

    return FiniteMonoid.from_rows(names, [[red(i + j) for j in range(size)] for i in range(size)], 0,
                                  f"C({size},{index})")


def identity_action(T, Y):
    return PartialAction.from_table(T, Y, {(t, y): y for t in T.elements for y in Y.elements}, "left")


def w_c2_identity():
    """W-product of C2 by {1, t}, t² = t, with t acting as the identity (four elements)."""
    S = w_product(identity_action(idempotent_monoid(), c2_lattice()))
    S.provenance = {"fixture": "W(C2, {1,t})"}
    return S


def c2_times_z3():
    """C2 x Z3 with (x, g)* = (x, 1): a six-element proper ample monoid."""
    S = w_product(identity_action(cyclic_group(3), c2_lattice()))
    S.provenance = {"fixture": "C2 x Z3"}
    return S


def strong_not_pda():
    """Z2 on C2: the non-identity fixes b and is undefined on 1."""
    T = cyclic_group(2)
    Y = c2_lattice()
    table = {("1", "b"): "b", ("1", "1"): "1", ("g", "b"): "b"}
    return PartialAction.from_table(T, Y, table, "left")


def not_strong():
    """Z2 on {0 < x, y}: the non-identity maps 0 -> 0, x -> y."""
    T = cyclic_group(2)
    Y = build_semilattice(["0", "x", "y"], leq=[("0", "x"), ("0", "y")], name="V")
    table = {("1", y): y for y in Y.elements}
    table.update({("g", "0"): "0", ("g", "x"): "y"})
    return PartialAction.from_table(T, Y, table, "left")


NAMED = {
    "c2": c2,
    "chain3": chain3,
    "b2": b2,
    "b2-1": b2_1,
    "reduced": reduced_monoid,
    "w-c2": w_c2_identity,
    "c2xz3": c2_times_z3,
}


def free_letter_action():
    """Free monoid on {a} acting on {0 < x, y} with a: 0 -> 0, x -> y (generator table only)."""
    from .monoids import FreeMonoid

    Y = build_semilattice(["0", "x", "y"], leq=[("0", "x"), ("0", "y")], name="V")
    table = {("a", "0"): "0", ("a", "x"): "y"}
    inv = {("a", v): y for (_a, y), v in table.items()}
    return PartialAction.from_generators(FreeMonoid("a", 3), Y, lambda a, y: table.get((a, y)),
                                         lambda a, y: inv.get((a, y)), "left")


def double_action_z2_chain():
    """Z2 on the 2-chain with both actions trivial."""
    from .constructions import DoubleAction

    T, Y = cyclic_group(2), chain(2)
    ident = {(t, y): y for t in T.elements for y in Y.elements}
    return DoubleAction(T, Y, dict(ident), dict(ident))


def separating_witnesses():
    """First enumerated actions whose M(T,Y) separates the properness classes.

    Returns {"extra-not-ultra": pa, "proper-not-extra": pa}; the search runs over
    the deterministic enumeration order.
    """
    from .algebra import classify
    from .constructions import m_product
    from .enumeration import all_instances

    found = {}
    for pa in all_instances():
        f = classify(m_product(pa))
        if f.isExtraProper and not f.isUltraProper:
            found.setdefault("extra-not-ultra", pa)
        if f.isProper and not f.isExtraProper:
            found.setdefault("proper-not-extra", pa)
        if len(found) == 2:
            break
    return found


def corpus():
    """File name -> canonical text for every file of the fixtures directory."""
    from . import io

    files = {}
    for name, make in NAMED.items():
        files[f"{name}.alg"] = io.serialize_algebra(make())
    files["strong-not-pda.act"] = io.dumps(io.action_to_dict(strong_not_pda()))
    files["not-strong.act"] = io.dumps(io.action_to_dict(not_strong()))
    files["free-a.act"] = io.dumps(io.action_to_dict(free_letter_action(), generators_only=True))
    files["z2-chain.dact"] = io.dumps(io.double_action_to_dict(double_action_z2_chain()))
    files["witnesses.json"] = io.dumps({k: io.action_to_dict(pa) for k, pa in separating_witnesses().items()})
    return files


def write_corpus(directory):
    from pathlib import Path

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name, text in corpus().items():
        (d / name).write_text(text)
