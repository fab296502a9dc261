"""Equivalence and speciality of intersection points through double cosets.

An intersection point of two based curves ``w1`` and ``w2`` is recorded by
the class of its connecting loop (first curve up to the point, then back
along the second).  Two points are in the same Nielsen class when their
connecting loops differ by ``w1^p . . . w2^q``, so every question here is a
search for exponents in a double coset of cyclic subgroups.

Curves are read from their base point, so words are used as written and not
rotated into canonical form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .surfaces import SurfaceSpec
from .words import (
    CyclicWord,
    WordError,
    check_word,
    cyclic_reduce,
    free_reduce,
    invert,
    multiply,
    orientation_character,
    power,
)

CASES = ("forward", "backward", "other")
# shift of q-hat relative to q + (eta1 - eta2)/2 for each cyclic arrangement
CASE_SHIFT = {"forward": -1, "backward": 1, "other": 0}


class CosetError(ValueError):
    pass


@dataclass(frozen=True)
class PointOrdering:
    """Relative position data needed by the strict criteria.

    ``eta`` is the sign of ``v2 - v1`` for the point itself.  ``eta1``,
    ``eta2`` and ``cyclic_case`` compare this point with the other point
    of a strict-equivalence query, and are read from the second point.
    """

    eta: int = 1
    eta1: int = 1
    eta2: int = 1
    cyclic_case: str = "other"

    def __post_init__(self):
        for name in ("eta", "eta1", "eta2"):
            if getattr(self, name) not in (1, -1):
                raise CosetError(f"{name} must be +1 or -1")
        if self.cyclic_case not in CASES:
            raise CosetError(f"cyclic_case must be one of {', '.join(CASES)}")


@dataclass(frozen=True)
class PointDatum:
    connecting_word: str = ""
    ordering: Optional[PointOrdering] = None


@dataclass(frozen=True)
class CosetSolution:
    p: int
    q: int


@dataclass(frozen=True)
class StrictPredicates:
    equivalent: bool
    special: bool
    geom_special: bool
    self_cancelling: bool
    geom_self_cancelling: bool


Word = Union[str, CyclicWord]


def _letters(w: Word) -> str:
    return check_word(w.letters if isinstance(w, CyclicWord) else w)


def normal_form(s: Optional[SurfaceSpec]) -> Callable[[str], str]:
    """Normal form of words in the fundamental group of ``s``."""
    if s is None or s.is_fatgraph:
        return free_reduce
    if s.kind == "rp2":
        return lambda w: "a" * (len(w) % 2)
    return lambda w: ""


def _check_surface_words(s: Optional[SurfaceSpec], *words: str) -> None:
    if s is None:
        return
    gens = set(s.generators)
    for w in words:
        for ch in w:
            if ch.lower() not in gens:
                raise WordError(f"unknown generator {ch.lower()!r} in word {w!r}")


def _cyclen(w: str) -> int:
    return len(cyclic_reduce(w)[0])


def search_bound(a_full: str, target: str, g: str, slack: int = 0) -> int:
    """Exponent bound for ``a`` in ``a^p g b^q = target``."""
    n = _cyclen(a_full)
    return math.ceil((len(target) + len(g) + 2 * len(a_full)) / n) + 2 + slack


def _solutions(nf, a: str, target: str, g: str, b: str, bound_a: int, bound_b: int):
    """All ``(p, q)`` within bounds with ``a^p g b^q == target``."""
    right = {}
    for q in range(-bound_b, bound_b + 1):
        right.setdefault(nf(multiply(g, power(b, q))), []).append(q)
    t = nf(target)
    out = []
    for p in range(-bound_a, bound_a + 1):
        for q in right.get(nf(multiply(power(a, -p), t)), ()):
            out.append(CosetSolution(p, q))
    return out


def _pick(sols):
    if not sols:
        return None
    return min(sols, key=lambda s: (abs(s.p) + abs(s.q), abs(s.p), s.p, s.q))


def _full(w: Word, conj: str = "") -> str:
    return multiply(conj, _letters(w), invert(conj))


def _bounds(nf, a, target, g, b, slack):
    # a trivial generator contributes nothing, so its exponent is pinned to 0
    ba = 0 if not nf(a) else search_bound(a, target, g, slack)
    bb = 0 if not nf(b) else search_bound(b, target, g, slack)
    return ba, bb


def solve_double_coset(
    a: Word,
    target: str,
    g: str,
    b: Word,
    a_conj: str = "",
    b_conj: str = "",
    bound_slack: int = 0,
    surface: Optional[SurfaceSpec] = None,
) -> Optional[CosetSolution]:
    """Find ``(p, q)`` with ``a^p g b^q == target``, or ``None``.

    ``a`` and ``b`` are the elements ``a_conj . a . a_conj^-1`` and likewise
    for ``b``.  Among several solutions the one with the least ``|p| + |q|``
    is returned.
    """
    a_full, b_full = _full(a, a_conj), _full(b, b_conj)
    target, g = _letters(target), _letters(g)
    nf = normal_form(surface)
    if not nf(a_full) or not nf(b_full):
        raise CosetError("subgroup generators must be nontrivial")
    ba = search_bound(a_full, target, g, bound_slack)
    bb = search_bound(b_full, target, g, bound_slack)
    return _pick(_solutions(nf, a_full, target, g, b_full, ba, bb))


def _pair_solutions(s, w1: Word, w2: Word, target: str, g: str, slack: int):
    w1, w2 = _letters(w1), _letters(w2)
    target, g = _letters(target), _letters(g)
    _check_surface_words(s, w1, w2, target, g)
    nf = normal_form(s)
    ba, bb = _bounds(nf, w1, target, g, w2, slack)
    return _solutions(nf, w1, target, g, w2, ba, bb)


def nielsen_equivalent(
    s: Optional[SurfaceSpec], w1: Word, w2: Word, d1: PointDatum, d2: PointDatum, bound_slack: int = 0
) -> bool:
    """Whether two intersection points of ``w1`` and ``w2`` lie in one Nielsen class."""
    return bool(_pair_solutions(s, w1, w2, d1.connecting_word, d2.connecting_word, bound_slack))


def is_trivial_point(s: Optional[SurfaceSpec], w: Word, d: PointDatum, bound_slack: int = 0) -> bool:
    w, c = _letters(w), _letters(d.connecting_word)
    _check_surface_words(s, w, c)
    nf = normal_form(s)
    if not nf(w):
        return not nf(c)
    bound = search_bound(w, c, "", bound_slack)
    return any(nf(power(w, p)) == nf(c) for p in range(-bound, bound + 1))


def _special_witnesses(s, w1, w2, d, slack):
    c = d.connecting_word
    return [x for x in _pair_solutions(s, w1, w2, c, c, slack) if (x.p, x.q) != (0, 0)]


def is_special_point(s, w1: Word, w2: Word, d: PointDatum, bound_slack: int = 0) -> bool:
    return bool(_special_witnesses(s, w1, w2, d, bound_slack))


def is_self_cancelling(s, w1: Word, w2: Word, d: PointDatum, bound_slack: int = 0) -> bool:
    """Special, with a witness whose power of ``w1`` reverses orientation."""
    w1 = _letters(w1)
    tw = s.twisted if s is not None else ()
    return any(
        orientation_character(tw, power(w1, x.p)) == -1
        for x in _special_witnesses(s, w1, w2, d, bound_slack)
    )


def _geom_witnesses(s, w, d, slack):
    c = _letters(d.connecting_word)
    return _pair_solutions(s, w, w, c, invert(c), slack)


def is_geometrically_special(s, w: Word, d: PointDatum, bound_slack: int = 0) -> bool:
    return bool(_geom_witnesses(s, w, d, bound_slack))


def is_geometrically_self_cancelling(s, w: Word, d: PointDatum, bound_slack: int = 0) -> bool:
    """Geometrically special, with ``w^-q d`` orientation preserving for a witness."""
    w = _letters(w)
    c = _letters(d.connecting_word)
    tw = s.twisted if s is not None else ()
    return any(
        orientation_character(tw, multiply(power(w, -x.q), c)) == 1
        for x in _geom_witnesses(s, w, d, bound_slack)
    )


def _one_parameter(nf, target: str, make, bound: int):
    """Values of ``q`` in ``[-bound, bound]`` with ``make(q) == target``."""
    t = nf(target)
    return [q for q in range(-bound, bound + 1) if nf(make(q)) == t]


def strict_predicates(
    s: Optional[SurfaceSpec], w: Word, d1: PointDatum, d2: PointDatum, bound_slack: int = 0
) -> StrictPredicates:
    """The strict criteria for self-intersection points of ``w``.

    ``equivalent`` compares ``d1`` with ``d2`` using the relative position
    stored on ``d2``; the one-point criteria are evaluated on ``d1`` with its
    own ``eta``.  The cyclic case of the two points is taken as given: when
    coordinates coincide the caller must decide which arrangement applies.
    """
    if d1.ordering is None or d2.ordering is None:
        raise CosetError("strict criteria need ordering data on both points")
    w = _letters(w)
    c1, c2 = _letters(d1.connecting_word), _letters(d2.connecting_word)
    _check_surface_words(s, w, c1, c2)
    nf = normal_form(s)
    tw = s.twisted if s is not None else ()
    rel = d2.ordering
    shift = (rel.eta1 - rel.eta2) // 2 + CASE_SHIFT[rel.cyclic_case]
    eta = d1.ordering.eta
    if nf(w):
        bound = search_bound(w, c1, c2, bound_slack) + abs(shift) + abs(eta)
    else:
        bound = 0
    c1_inv = invert(c1)

    def wp(n):
        return power(w, n)

    equiv = _one_parameter(nf, c1, lambda q: multiply(wp(-(q + shift)), c2, wp(q)), bound)
    special = [q for q in _one_parameter(nf, c1, lambda q: multiply(wp(-q), c1, wp(q)), bound) if q]
    geom = _one_parameter(nf, c1, lambda q: multiply(wp(eta - q), c1_inv, wp(q)), bound)
    return StrictPredicates(
        equivalent=bool(equiv),
        special=bool(special),
        geom_special=bool(geom),
        self_cancelling=any(orientation_character(tw, wp(q)) == -1 for q in special),
        geom_self_cancelling=any(
            orientation_character(tw, multiply(wp(-q), c1)) == 1 for q in geom
        ),
    )
