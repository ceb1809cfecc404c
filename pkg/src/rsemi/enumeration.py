"""Exhaustive enumeration of small monoids, semilattices, partial and double actions."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from .actions import PartialAction
from .constructions import DoubleAction
from .monoids import FiniteMonoid
from .order import build_semilattice, chain, check_order_iso, order_ideals
from .errors import NotASemilatticeError

_MONOID_NAMES = ["1", "t", "u", "v"]


@lru_cache(maxsize=None)
def small_monoids(max_size=3):
    """Monoids of order <= max_size up to isomorphism, identity named '1'."""
    out = []
    for n in range(1, max_size + 1):
        names = _MONOID_NAMES[:n]
        rest = list(range(1, n))
        seen = set()
        for values in product(range(n), repeat=len(rest) ** 2):
            tab = [[0] * n for _ in range(n)]
            for i in range(n):
                tab[0][i] = tab[i][0] = i
            for (i, j), v in zip(product(rest, repeat=2), values):
                tab[i][j] = v
            if any(tab[tab[a][b]][c] != tab[a][tab[b][c]] for a, b, c in product(range(n), repeat=3)):
                continue
            key = min(_relabel(tab, (0,) + p) for p in permutations(rest))
            if key in seen:
                continue
            seen.add(key)
            out.append(FiniteMonoid.from_rows(names, tab, 0, name=f"M{n}.{len(seen)}"))
    return tuple(out)


def _relabel(tab, perm):
    n = len(tab)
    inv = {v: i for i, v in enumerate(perm)}
    return tuple(tuple(inv[tab[perm[i]][perm[j]]] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def small_semilattices(max_size=3):
    """Meet semilattices of order <= max_size up to isomorphism."""
    out = []
    for n in range(1, max_size + 1):
        els = [str(i) for i in range(n)]
        pairs = [(a, b) for a in els for b in els if a != b]
        seen = set()
        for k in range(len(pairs) + 1):
            for rel in combinations(pairs, k):
                try:
                    Y = build_semilattice(els, leq=rel)
                except (NotASemilatticeError, ValueError):
                    continue
                order = frozenset(p for p in Y._leq if p[0] != p[1])
                if order != frozenset(rel):
                    continue  # only take transitively closed generating sets once
                key = min(tuple(sorted((p[a], p[b]) for a, b in ((int(x), int(y)) for x, y in order)))
                          for p in permutations(range(n)))
                if key in seen:
                    continue
                seen.add(key)
                Y.name = f"Y{n}.{len(seen)}"
                out.append(Y)
    return tuple(out)


def _partial_isos(Y):
    """All order-isomorphisms between nonempty order ideals of Y, as dicts."""
    ideals = [I.elements for I in order_ideals(Y)]
    out = []
    for D in ideals:
        dl = sorted(D)
        for R in ideals:
            if len(R) != len(D):
                continue
            for perm in permutations(sorted(R)):
                m = dict(zip(dl, perm))
                if check_order_iso(m, D, R, Y):
                    out.append(m)
    return out


def partial_actions(T, Y, dedupe=True):
    """All left partial actions of T on Y satisfying LP1, LP2 and (A)(B)(C).

    With ``dedupe`` one representative per orbit of Aut(T) x Aut(Y) is kept.
    """
    one = T.identity
    rest = [t for t in T.elements if t != one]
    isos = _partial_isos(Y)
    autT, autY = T.automorphisms(), Y.automorphisms()
    seen = set()
    out = []
    for choice in product(isos, repeat=len(rest)):
        maps = {one: {y: y for y in Y.elements}, **dict(zip(rest, choice))}
        if not _lp2(T, maps):
            continue
        if dedupe:
            key = min(_action_key(T, Y, maps, f, g) for f in autT for g in autY)
            if key in seen:
                continue
            seen.add(key)
        table = {(t, y): v for t, m in maps.items() for y, v in m.items()}
        pa = PartialAction.from_table(T, Y, table, "left")
        out.append(pa)
    return out


def _lp2(T, maps):
    for t, mt in maps.items():
        for s, ms in maps.items():
            mst = maps[T.mul(s, t)]
            for y, x in mt.items():
                if x in ms and mst.get(y) != ms[x]:
                    return False
    return True


def _action_key(T, Y, maps, f, g):
    return tuple(sorted((T.elements.index(f[t]), Y.elements.index(g[y]), Y.elements.index(g[v]))
                        for t, m in maps.items() for y, v in m.items()))


def all_instances(max_monoid=3, max_lattice=3):
    """(T, Y, pa) for every deduplicated partial action of the small monoids on small semilattices."""
    out = []
    for T in small_monoids(max_monoid):
        for Y in small_semilattices(max_lattice):
            for pa in partial_actions(T, Y):
                out.append(pa)
    return out


# -- double actions on chains ------------------------------------------------------

def _monotone_maps(n):
    return [m for m in product(range(n), repeat=n) if all(m[i] <= m[i + 1] for i in range(n - 1))]


def _actions(T, maps, left):
    """Assignments t -> monotone map forming a left (or right) action of T."""
    one = T.identity
    rest = [t for t in T.elements if t != one]
    n = len(maps[0])
    ident = tuple(range(n))
    out = []
    for choice in product(maps, repeat=len(rest)):
        f = {one: ident, **dict(zip(rest, choice))}
        ok = True
        for s, t in product(T.elements, repeat=2):
            st = f[T.mul(s, t)]
            # left: s*(t*y) = (st)*y ; right: (y•s)•t = y•(st)
            comp = tuple(f[s][f[t][y]] for y in range(n)) if left else tuple(f[t][f[s][y]] for y in range(n))
            if comp != st:
                ok = False
                break
        if ok:
            out.append(f)
    return out


def double_actions(T, n):
    """All double actions of T on the n-chain satisfying the compatibility identities."""
    Y = chain(n)
    maps = _monotone_maps(n)
    stars = _actions(T, maps, left=True)
    bullets = _actions(T, maps, left=False)
    top = n - 1
    out = []
    for st in stars:
        for bu in bullets:
            if all(bu[t][st[t][x]] == min(bu[t][top], x) and st[t][bu[t][x]] == min(x, st[t][top])
                   for t in T.elements for x in range(n)):
                star = {(t, Y.elements[y]): Y.elements[st[t][y]] for t in T.elements for y in range(n)}
                bullet = {(t, Y.elements[y]): Y.elements[bu[t][y]] for t in T.elements for y in range(n)}
                da = DoubleAction(T, Y, star, bullet)
                out.append(da)
    return out


def all_double_actions(max_monoid=3, max_chain=4):
    return [da for T in small_monoids(max_monoid) for n in range(1, max_chain + 1)
            for da in double_actions(T, n)]
