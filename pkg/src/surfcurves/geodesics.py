"""Geometric intersection counts of closed geodesics on ribbon-graph surfaces.

The universal cover of a one-vertex ribbon graph is a tree drawn in the
plane, and the lifts of a closed curve are bi-infinite paths in it.  Two
lifts cross exactly when their four ends alternate around the circle at
infinity.  Ends are compared as infinite words read from the base vertex,
using the cyclic dart order there and at each later vertex; the order is
read backwards while an odd number of twisted letters has been crossed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from . import _kernels
from .surfaces import SurfaceSpec
from .words import CyclicWord, WordError, conjugate_eq, cyclic, generators_of, primitive_root


class GeodesicError(ValueError):
    pass


@dataclass(frozen=True)
class BoundaryRay:
    """The end of a lift through the base vertex.

    ``base`` picks the rotation of ``word`` read from the base vertex and
    ``direction`` says whether the ray follows the word (+1) or its inverse
    (-1).
    """

    word: CyclicWord
    base: int
    direction: int = 1
    orientation_state: int = 1


def _encode_surface(s: SurfaceSpec):
    if not s.is_fatgraph:
        raise GeodesicError(f"surface {s} is not a ribbon graph")
    gen_index = {g: i for i, g in enumerate(s.generators)}
    pos = np.empty(2 * len(gen_index), dtype=np.int64)
    for p, d in enumerate(s.order):
        pos[2 * gen_index[d[0]] + (0 if d[1] == "+" else 1)] = p
    twist = np.array([1 if g in s.twisted else 0 for g in s.generators], dtype=np.int64)
    return gen_index, pos, twist


def _encode(s: SurfaceSpec, c: CyclicWord, gen_index) -> np.ndarray:
    unknown = generators_of(c.letters) - set(gen_index)
    if unknown:
        raise WordError(f"unknown generator {sorted(unknown)[0]!r} for surface {s}")
    return _kernels.encode_word(c.letters, gen_index)


def comparison_depth(n1: int, n2: int) -> int:
    # two periodic sequences that agree this long agree forever
    return 2 * lcm(n1, n2) + max(n1, n2)


def compare_rays(s: SurfaceSpec, r1: BoundaryRay, r2: BoundaryRay) -> int:
    """-1, 0 or +1 according to the order of the two ends seen from the base."""
    if r1.orientation_state != r2.orientation_state:
        raise GeodesicError("rays must start with the same orientation state")
    gen_index, pos, twist = _encode_surface(s)
    w1 = _encode(s, cyclic(r1.word), gen_index)
    w2 = _encode(s, cyclic(r2.word), gen_index)
    if not len(w1) or not len(w2):
        raise GeodesicError("a ray needs a nonempty word")
    depth = comparison_depth(len(w1), len(w2))
    return int(
        _kernels.compare_rays(
            pos, twist, w1, r1.base % len(w1), r1.direction,
            w2, r2.base % len(w2), r2.direction, r1.orientation_state, depth,
        )
    )


def self_intersection_geom(s: SurfaceSpec, c) -> int:
    """Double points of the geodesic in the class of a primitive word."""
    c = cyclic(c)
    if not c:
        raise GeodesicError("contractible class has no geodesic")
    gen_index, pos, twist = _encode_surface(s)
    w = _encode(s, c, gen_index)
    if primitive_root(c).exponent != 1:
        raise GeodesicError(f"{c} is a proper power")
    ordered = int(_kernels.linked_count(pos, twist, w, w, True, comparison_depth(len(w), len(w))))
    if ordered < 0:
        raise GeodesicError(f"coincident lift ends for {c}")
    # every double point shows up once from each branch
    assert ordered % 2 == 0, (str(c), ordered)
    return ordered // 2


def common_root(c1, c2) -> bool:
    r1 = primitive_root(c1).root
    r2 = primitive_root(c2).root
    return conjugate_eq(r1, r2) or conjugate_eq(r1, r2.inverse())


def pair_intersection_geom(s: SurfaceSpec, c1, c2) -> int:
    """Crossings of the geodesics in two classes without a common root.

    Powers are handled by counting the roots and multiplying by both
    exponents, since a k-fold geodesic meets each crossing k times.
    """
    c1, c2 = cyclic(c1), cyclic(c2)
    if not c1 or not c2:
        raise GeodesicError("contractible class has no geodesic")
    gen_index, pos, twist = _encode_surface(s)
    _encode(s, c1, gen_index)
    _encode(s, c2, gen_index)
    if common_root(c1, c2):
        raise GeodesicError(f"{c1} and {c2} are powers of a common class")
    p1, p2 = primitive_root(c1), primitive_root(c2)
    w1 = _encode(s, p1.root, gen_index)
    w2 = _encode(s, p2.root, gen_index)
    count = int(_kernels.linked_count(pos, twist, w1, w2, False, comparison_depth(len(w1), len(w2))))
    if count < 0:
        raise GeodesicError(f"coincident lift ends for {c1}, {c2}")
    return count * p1.exponent * p2.exponent
