"""Minimal intersection numbers, Nielsen numbers and their companions.

Self-intersection of a curve ``c = c0^k`` reduces to the double points of
its primitive root: with ``n`` the number of geometric double points of
``c0``, the ordered Nielsen number of ``c0`` is ``2n`` and the remaining
terms depend only on ``k``, the orientation behaviour of ``c0`` and
whether ``c`` is special.  Pairs reduce the same way through a common root
when there is one, and otherwise equal the geometric intersection count.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional, Union

from . import geodesics
from .cosets import solve_double_coset
from .surfaces import SurfaceSpec
from .words import (
    CyclicWord,
    conjugate_eq,
    cyclic,
    free_reduce,
    invert,
    multiply,
    orientation_character,
    primitive_root,
    reduced_words,
)

INFINITE = math.inf

BRANCHES = (
    "contractible",
    "finite-pi1",
    "rp2-pair",
    "rank1-closed-form",
    "thm5a",
    "thm5b",
    "thm6a-no-common-root",
    "thm6a-common-root",
    "thm6b",
)


class ReportError(AssertionError):
    """Two routes to the same invariant disagree."""


def delta(k: int) -> int:
    """1 for even ``k``, 0 for odd ``k``."""
    return 1 if k % 2 == 0 else 0


@dataclass(frozen=True)
class CurveClass:
    surface: SurfaceSpec
    word: CyclicWord
    root: CyclicWord
    k: int  # 0 for a contractible class
    orientation: int
    special: bool

    @property
    def root_orientation(self) -> int:
        if not self.root:
            return 1
        return _orientation(self.surface, self.root)

    @property
    def k_prime(self) -> Optional[int]:
        if not self.special:
            return None
        return self.k if self.root_orientation == 1 else self.k // 2


@dataclass(frozen=True)
class PairClass:
    special_pair: bool
    common_root: Optional[CyclicWord]
    k: int
    l: int  # negative when the roots match only after inversion


@dataclass(frozen=True)
class ClassInventory:
    essential_nonspecial: int = 0
    essential_special: int = 0
    nonessential_special_lower_bound: int = 0
    geometrically_special: int = 0
    trivial_class_present: bool = False
    defective_special: bool = False
    min_points_per_special_class: int = 1


@dataclass(frozen=True)
class SelfReport:
    MI: int
    NI: int
    NIstar: int
    MI_geom: int
    NI_geom: int
    NIstar_geom: int
    RI: Union[int, float]
    RI_geom: Union[int, float]
    wecken: bool
    wecken_geom: bool
    inventory: ClassInventory
    k_prime: Optional[int]
    branch: str

    def as_dict(self) -> dict:
        return _export(self)


@dataclass(frozen=True)
class PairReport:
    MI: int
    NI: int
    NIstar: int
    RI: Union[int, float]
    wecken: bool
    special_pair: bool
    inventory: ClassInventory
    branch: str

    def as_dict(self) -> dict:
        return _export(self)


def _export(report) -> dict:
    out = asdict(report)
    for key, val in out.items():
        if val == INFINITE:
            out[key] = "infinite"
    return out


def _orientation(s: SurfaceSpec, w) -> int:
    if s.kind in ("plane", "sphere"):
        return 1
    return orientation_character(s, w)


def _reduce_on(s: SurfaceSpec, c) -> CyclicWord:
    """Conjugacy class of ``c`` in the fundamental group of ``s``."""
    c = cyclic(c)
    if s.kind in ("plane", "sphere"):
        return CyclicWord("")
    orientation_character(s, c)  # rejects letters outside the surface
    if s.kind == "rp2":
        return CyclicWord("a" * (len(c) % 2))
    return c


def classify_curve(s: SurfaceSpec, c) -> CurveClass:
    c = _reduce_on(s, c)
    if not c:
        return CurveClass(s, c, c, 0, 1, False)
    dec = primitive_root(c)
    orient = _orientation(s, c)
    special = s.is_fatgraph and orient == 1 and dec.exponent > 1
    return CurveClass(s, c, dec.root, dec.exponent, orient, special)


def classify_pair(s: SurfaceSpec, c1, c2) -> PairClass:
    a, b = classify_curve(s, c1), classify_curve(s, c2)
    if not a.word or not b.word:
        return PairClass(False, None, a.k, b.k)
    if conjugate_eq(a.root, b.root):
        l = b.k
    elif conjugate_eq(a.root, b.root.inverse()):
        l = -b.k
    else:
        return PairClass(False, None, a.k, b.k)
    if s.kind == "rp2":
        special = True
    else:
        special = a.orientation == -1 and b.orientation == -1
    return PairClass(special, a.root, a.k, l)


def _finite_double_cosets(s: SurfaceSpec, h1: str, h2: str, geometric: bool = False) -> int:
    """Double cosets in the finite (abelian) group of the plane, sphere or rp2.

    Elements are residues mod the group order; with ``geometric`` each coset
    is also identified with the coset of the inverse element.
    """
    order = 2 if s.kind == "rp2" else 1
    step = math.gcd(order, len(h1), len(h2))
    classes = {min(g % step, -g % step) if geometric else g % step for g in range(order)}
    return len(classes)


def _n_geom(s: SurfaceSpec, root: CyclicWord) -> int:
    return geodesics.self_intersection_geom(s, root)


def _rank1_self(cls: CurveClass) -> dict:
    """Closed forms on the annulus and the Moebius band."""
    k = cls.k
    twisted = bool(cls.surface.twisted)
    if not twisted:
        mi, ni, mi_g, ni_g = 2 * k - 2, 0, k - 1, delta(k)
    elif k % 2 == 0:
        mi, ni, mi_g, ni_g = k - 2, 0, (k - 1) // 2, delta(k // 2)
    else:
        mi, ni, mi_g, ni_g = k - 1, k - 1, (k - 1) // 2, (k - 1) // 2
    return dict(MI=mi, NI=ni, MI_geom=mi_g, NI_geom=ni_g, RI=k, RI_geom=k // 2 + 1)


def _check_chain(r: SelfReport) -> None:
    if r.MI != 2 * r.MI_geom or not (r.MI >= r.NIstar >= r.NI) or 2 * r.NI_geom < r.NI:
        raise ReportError(f"chain inequalities fail: {r}")
    if r.NIstar != r.NI:
        raise ReportError("a nonzero semi-index other than 1")


def self_report(s: SurfaceSpec, c) -> SelfReport:
    cls = classify_curve(s, c)
    if not s.is_fatgraph:
        h = cls.word.letters
        ri = _finite_double_cosets(s, h, h)
        rig = _finite_double_cosets(s, h, h, geometric=True)
        return _finish(0, 0, 0, 0, ri, rig, ClassInventory(), None, "finite-pi1")
    if not cls.word:
        return _finish(0, 0, 0, 0, INFINITE, INFINITE, ClassInventory(), None, "contractible")
    k = cls.k
    n = _n_geom(s, cls.root)
    base = k * k * 2 * n
    if not cls.special:
        mi = ni = base + k - 1
        mi_g = ni_g = k * k * n + (k - 1) // 2
        inv = ClassInventory(
            essential_nonspecial=base,
            essential_special=k - 1,
            trivial_class_present=True,
            defective_special=k > 1,
        )
        branch = "thm5a"
    else:
        kp = cls.k_prime
        mi, ni = base + 2 * (kp - 1), base
        mi_g, ni_g = k * k * n + kp - 1, k * k * n + delta(kp)
        inv = ClassInventory(
            essential_nonspecial=base,
            nonessential_special_lower_bound=kp - 1,
            geometrically_special=delta(kp),
            trivial_class_present=True,
            min_points_per_special_class=2,
        )
        branch = "thm5b"
    ri = rig = INFINITE
    if s.rank == 1:
        closed = _rank1_self(cls)
        got = dict(MI=mi, NI=ni, MI_geom=mi_g, NI_geom=ni_g)
        if any(closed[key] != got[key] for key in got):
            raise ReportError(f"closed form {closed} disagrees with theorem {got}")
        ri, rig = closed["RI"], closed["RI_geom"]
        branch = "rank1-closed-form"
    return _finish(mi, ni, mi_g, ni_g, ri, rig, inv, cls.k_prime, branch)


def _finish(mi, ni, mi_g, ni_g, ri, rig, inv, kp, branch) -> SelfReport:
    r = SelfReport(
        MI=mi, NI=ni, NIstar=ni, MI_geom=mi_g, NI_geom=ni_g, NIstar_geom=ni_g,
        RI=ri, RI_geom=rig, wecken=mi == ni, wecken_geom=mi_g == ni_g,
        inventory=inv, k_prime=kp, branch=branch,
    )
    _check_chain(r)
    return r


def _pair_ri(s: SurfaceSpec, a: CurveClass, b: CurveClass):
    if not s.is_fatgraph:
        return _finite_double_cosets(s, a.word.letters, b.word.letters)
    if s.rank == 1:
        # cosets of Z by kZ + lZ
        g = math.gcd(a.k, b.k)
        return g if g else INFINITE
    return INFINITE


def pair_report(s: SurfaceSpec, c1, c2) -> PairReport:
    a, b = classify_curve(s, c1), classify_curve(s, c2)
    pc = classify_pair(s, c1, c2)
    ri = _pair_ri(s, a, b)
    if not a.word or not b.word:
        branch = "finite-pi1" if not s.is_fatgraph else "contractible"
        return _pair(0, 0, ri, False, ClassInventory(), branch)
    if s.kind == "rp2":
        inv = ClassInventory(essential_special=1, defective_special=True)
        return _pair(1, 1, ri, True, inv, "rp2-pair")
    if pc.common_root is None:
        m = geodesics.pair_intersection_geom(s, a.word, b.word)
        return _pair(m, m, ri, False, ClassInventory(essential_nonspecial=m), "thm6a-no-common-root")
    k, l = abs(pc.k), abs(pc.l)
    base = k * l * 2 * _n_geom(s, pc.common_root)
    if not pc.special_pair:
        return _pair(base, base, ri, False, ClassInventory(essential_nonspecial=base), "thm6a-common-root")
    g = math.gcd(k, l)
    inv = ClassInventory(
        essential_nonspecial=base,
        essential_special=g,
        defective_special=True,
        min_points_per_special_class=min(k, l) // g,
    )
    return _pair(base + min(k, l), base + g, ri, True, inv, "thm6b")


def _pair(mi, ni, ri, special, inv, branch) -> PairReport:
    if mi < ni or inv.essential_nonspecial + inv.essential_special != ni:
        raise ReportError(f"inconsistent pair report in branch {branch}")
    return PairReport(
        MI=mi, NI=ni, NIstar=ni, RI=ri, wecken=mi == ni,
        special_pair=special, inventory=inv, branch=branch,
    )


def reidemeister_enumerate(s: SurfaceSpec, c, max_len: int) -> list[str]:
    """Representatives of distinct double cosets among words up to ``max_len``.

    ``c`` is one class (self-intersection) or a pair of classes.  The first
    word met in each double coset, in order of length, is its
    representative.  On free groups of rank two or more the list keeps
    growing with ``max_len``.
    """
    if not s.is_fatgraph:
        raise ValueError("double coset enumeration needs a ribbon graph surface")
    if isinstance(c, (tuple, list)):
        c1, c2 = (cyclic(x).letters for x in c)
    else:
        c1 = c2 = cyclic(c).letters
    for w in (c1, c2):
        orientation_character(s, w)
    reps: list[str] = []
    for g in reduced_words(s.generators, max_len):
        if any(_same_coset(c1, g, r, c2) for r in reps):
            continue
        reps.append(g)
    return reps


def _same_coset(a: str, g: str, rep: str, b: str) -> bool:
    if not a and not b:
        return free_reduce(g) == free_reduce(rep)
    if not a:
        # g = rep b^q
        return solve_double_coset(b, multiply(invert(rep), g), "", b) is not None
    if not b:
        # g = a^p rep
        return solve_double_coset(a, multiply(g, invert(rep)), "", a) is not None
    return solve_double_coset(a, g, rep, b) is not None
