from itertools import product
from typing import NamedTuple


class GlobalPair(NamedTuple):
    """A pair (y, w) of Y x T; displayed as ``[y,w]``."""

    y: object
    word: object


def word_name(w):
    return w if w else "ε"


def fmt(x):
    """Human-readable rendering used for element names and witnesses."""
    if isinstance(x, GlobalPair):
        return f"[{fmt(x.y)},{word_name(x.word)}]"
    if isinstance(x, str):
        return x or "ε"
    if isinstance(x, frozenset):
        items = sorted(x, key=_sort_key)
        return "{" + ",".join(_free_group_name(i) if isinstance(i, str) else fmt(i) for i in items) + "}"
    if isinstance(x, tuple):
        return "(" + ",".join(fmt(i) for i in x) + ")"
    return str(x)


def _free_group_name(w):
    return w if w else "1"


def _sort_key(x):
    if isinstance(x, str):
        return (0, len(x), x)
    return (1, 0, fmt(x))


def counterexample(predicate, *domains):
    """First tuple (in product order) on which ``predicate`` is false."""
    for tup in product(*domains):
        if not predicate(*tup):
            return tup
    return None
