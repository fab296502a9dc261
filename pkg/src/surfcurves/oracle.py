"""Numeric check of geodesic intersection counts with a Schottky group.

Each dart of the ribbon graph gets a half-disk in the upper half-plane,
placed along the real axis in the cyclic dart order, and generator ``x``
maps the outside of the ``x-`` disk onto the inside of the ``x+`` disk.  The
quotient is the ribbon surface with a hyperbolic metric.  Intersections of
the closed geodesic of ``c`` are counted as orbits of conjugate axes that
cross the axis of ``c``, after moving that axis to the imaginary axis where
``c`` acts as a dilation.

Points on the boundary circle are kept as homogeneous vectors so the
point at infinity needs no special case.
"""

from __future__ import annotations

import math

import numpy as np

from .surfaces import SurfaceSpec
from .words import cyclic, conjugate_eq, primitive_root

ENDPOINT_TOL = 1e-9


class OracleError(ValueError):
    pass


class IsometryRep:
    """SL(2,R) matrices for the generators of a ribbon surface."""

    def __init__(self, surface: SurfaceSpec, lam: float, matrices: dict, disks: dict):
        self.surface = surface
        self.lam = lam
        self.matrices = matrices
        self.disks = disks

    def word_matrix(self, w: str) -> np.ndarray:
        m = np.eye(2)
        for ch in w:
            g = self.matrices[ch.lower()]
            m = m @ (g if ch.islower() else _inv(g))
        return m


def _inv(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])


def _disk_map(c_from: float, r_from: float, c_to: float, r_to: float) -> np.ndarray:
    # z -> c_to - r_from r_to / (z - c_from), scaled to determinant 1
    rr = r_from * r_to
    return np.array([[c_to, -c_from * c_to - rr], [1.0, -c_from]]) / math.sqrt(rr)


def disk_layout(s: SurfaceSpec, lam: float) -> dict:
    """Centres and radii of the dart disks along the real axis.

    The darts get nearly tangent arcs spread evenly around the unit circle,
    carried to the real line by the Cayley map.  Each arc fills between 66%
    and 76% of its slot, growing with ``lam``; in that range no two axes of a
    word of length 8 have endpoint angles closer than a few 1e-9.  Arcs are
    slightly uneven so no symmetry of the layout puts a crossing on a wall.
    """
    n = len(s.order)
    slot = math.pi / n
    half = slot * (0.76 - 0.1 / lam)
    out = {}
    for i, d in enumerate(s.order):
        mid = 2 * slot * (i + 0.5) + 0.01 * slot * math.sin(1.7 * i + 0.3)
        width = half * (1 + 0.01 * math.cos(2.3 * i + 0.1))
        x1 = -1 / math.tan((mid - width) / 2)
        x2 = -1 / math.tan((mid + width) / 2)
        out[d] = ((x1 + x2) / 2, (x2 - x1) / 2)
    return out


def check_disjoint(disks: dict, margin: float = 1e-6) -> float:
    items = sorted(disks.values())
    gap = min(
        (c2 - r2) - (c1 + r1) for (c1, r1), (c2, r2) in zip(items, items[1:])
    )
    if gap < margin:
        raise OracleError("ping-pong disks overlap")
    return gap


def realize(s: SurfaceSpec, lam: float = 2.0) -> IsometryRep:
    if not s.is_fatgraph:
        raise OracleError(f"oracle needs a ribbon-graph surface, got {s}")
    if not s.orientable:
        raise OracleError("oracle requires orientable surface")
    if s.rank < 1:
        raise OracleError("oracle needs at least one generator")
    if lam <= 1:
        raise OracleError("separation parameter must exceed 1")
    if s.rank == 1:
        g = s.generators[0]
        if lam - 1.0 / lam < 1e-6:
            raise OracleError("ping-pong disks overlap")
        # z -> lam^2 z sends |z| > 1/lam onto |z| > lam
        disks = {g + "-": (0.0, 1.0 / lam), g + "+": (math.inf, lam)}
        return IsometryRep(s, lam, {g: np.diag([lam, 1.0 / lam])}, disks)
    disks = disk_layout(s, lam)
    check_disjoint(disks)
    mats = {}
    for g in s.generators:
        (c1, r1), (c2, r2) = disks[g + "-"], disks[g + "+"]
        m = _disk_map(c1, r1, c2, r2)
        assert abs(np.linalg.det(m) - 1.0) < 1e-9
        for z in (c1 + r1, c1 - r1, c1 + 1j * r1):
            w = (m[0, 0] * z + m[0, 1]) / (m[1, 0] * z + m[1, 1])
            assert abs(abs(w - c2) - r2) < 1e-9
        mats[g] = m
    return IsometryRep(s, lam, mats, disks)


def commutator_trace(rep: IsometryRep, a: str, b: str) -> float:
    m = rep.word_matrix(a + b + a.upper() + b.upper())
    return float(np.trace(m))


def _fixed_points(m: np.ndarray):
    """Attracting and repelling fixed points on the real line."""
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    tr = a + d
    disc = tr * tr - 4 * (a * d - b * c)
    if disc <= 1e-12:
        raise OracleError("matrix is not hyperbolic")
    if abs(c) < 1e-300:
        raise OracleError("fixed point at infinity")
    root = math.sqrt(disc)
    z1 = (a - d + root) / (2 * c)
    z2 = (a - d - root) / (2 * c)
    # the derivative 1/(cz+d)^2 is below 1 at the attracting point
    if abs(c * z1 + d) > abs(c * z2 + d):
        return z1, z2
    return z2, z1


def _apply(mats: np.ndarray, x: float) -> np.ndarray:
    return (mats[:, 0, 0] * x + mats[:, 0, 1]) / (mats[:, 1, 0] * x + mats[:, 1, 1])


def _disk_index(rep: IsometryRep, x: np.ndarray) -> np.ndarray:
    idx = np.full(x.shape, -1)
    for k, d in enumerate(rep.surface.order):
        c, r = rep.disks[d]
        idx[np.abs(x - c) < r] = k
    return idx


def axes_through_domain(rep: IsometryRep, c: str) -> np.ndarray:
    """Axes of conjugates of a cyclically reduced ``c`` meeting the domain.

    The axis of ``c`` runs through the tiles ``F, c[0]F, c[0]c[1]F, ...``
    (each disk is a half-plane, so the axis crosses exactly the walls that
    separate its ends), hence the lifts meeting ``F`` are its translates by
    inverse prefixes.  Rows are (repelling end, attracting end).
    """
    plus, minus = _fixed_points(rep.word_matrix(c))
    rows = []
    for k in range(len(c)):
        m = _inv(rep.word_matrix(c[:k]))[None, :, :]
        rows.append((_apply(m, minus)[0], _apply(m, plus)[0]))
    out = np.array(rows)
    idx = _disk_index(rep, out)
    if np.any(idx < 0) or np.any(idx[:, 0] == idx[:, 1]):
        raise OracleError(f"an axis of {c} misses the fundamental domain")
    _check_separated(out)
    return out


def boundary_angle(x):
    """Angle on the unit circle of a real boundary point, inverse to the Cayley map."""
    return 2 * np.arctan2(1.0, -np.asarray(x))


def _check_separated(axes: np.ndarray) -> None:
    theta = boundary_angle(axes)
    for i in range(len(theta)):
        for j in range(i + 1, len(theta)):
            close = np.abs(theta[i][:, None] - theta[j][None, :]) <= ENDPOINT_TOL
            if close.any():
                raise OracleError("axis endpoints within tolerance; change the separation")


def search_axes_through_domain(rep: IsometryRep, c: str, radius: int, dps: int = 60):
    """Brute-force variant: all reduced conjugators up to ``radius`` letters.

    Runs in extended precision because long conjugators ending in powers of
    ``c`` magnify rounding errors at the repelling end.  Returns sorted
    endpoint pairs as floats.
    """
    import mpmath

    with mpmath.workdps(dps):
        gens = {}
        for g, m in rep.matrices.items():
            mm = mpmath.matrix([[mpmath.mpf(float(x)) for x in row] for row in m])
            gens[g] = mm
            gens[g.upper()] = mpmath.inverse(mm)
        word = mpmath.eye(2)
        for ch in c:
            word = word * gens[ch]
        a, b, cc, d = word[0, 0], word[0, 1], word[1, 0], word[1, 1]
        root = mpmath.sqrt((a + d) ** 2 - 4 * (a * d - b * cc))
        z1, z2 = (a - d + root) / (2 * cc), (a - d - root) / (2 * cc)
        plus, minus = (z1, z2) if abs(cc * z1 + d) > abs(cc * z2 + d) else (z2, z1)

        def act(m, x):
            return (m[0, 0] * x + m[0, 1]) / (m[1, 0] * x + m[1, 1])

        def disk(x):
            for k, dd in enumerate(rep.surface.order):
                cen, r = rep.disks[dd]
                if abs(x - cen) < r:
                    return k
            return -1

        found = []
        stack = [("", mpmath.eye(2))]
        while stack:
            u, m = stack.pop()
            e_m, e_p = act(m, minus), act(m, plus)
            i, j = disk(e_m), disk(e_p)
            if i >= 0 and j >= 0 and i != j:
                key = (float(e_m), float(e_p))
                if not any(abs(key[0] - f[0]) < 1e-12 and abs(key[1] - f[1]) < 1e-12 for f in found):
                    found.append(key)
            if len(u) < radius:
                for ch in gens:
                    if u and ch == u[-1].swapcase():
                        continue
                    stack.append((u + ch, m * gens[ch]))
    return np.array(sorted(found))


def _crossing(e1: np.ndarray, e2: np.ndarray):
    """Crossing point of two geodesics given by real endpoints, or None."""
    lo1, hi1 = sorted(e1)
    lo2, hi2 = sorted(e2)
    inside = (lo1 < lo2 < hi1) != (lo1 < hi2 < hi1)
    if not inside:
        return None
    m1, r1 = (lo1 + hi1) / 2, (hi1 - lo1) / 2
    m2, r2 = (lo2 + hi2) / 2, (hi2 - lo2) / 2
    x = (r1 * r1 - r2 * r2 + m2 * m2 - m1 * m1) / (2 * (m2 - m1))
    y2 = r1 * r1 - (x - m1) ** 2
    return complex(x, math.sqrt(max(y2, 0.0)))


def _in_domain(rep: IsometryRep, z: complex) -> bool:
    gaps = [abs(z - c) - r for c, r in rep.disks.values()]
    if min(abs(g) for g in gaps) < ENDPOINT_TOL:
        raise OracleError("crossing lies on a wall; change the separation")
    return min(gaps) > 0


def _count_crossings(rep: IsometryRep, axes1: np.ndarray, axes2, same: bool) -> int:
    total = 0
    for i in range(len(axes1)):
        others = range(i + 1, len(axes1)) if same else range(len(axes2))
        for j in others:
            z = _crossing(axes1[i], (axes1 if same else axes2)[j])
            if z is not None and _in_domain(rep, z):
                total += 1
    return total


def default_radius(*words: str) -> int:
    return max(len(w) for w in words) + 4


def count_self_numeric(rep: IsometryRep, c) -> int:
    """Double points of the geodesic of a primitive class.

    Each double point has exactly one lift in the fundamental domain, where
    two distinct lifts of the geodesic cross.
    """
    c = cyclic(c)
    if not c:
        raise OracleError("contractible class has no geodesic")
    if primitive_root(c).exponent != 1:
        raise OracleError(f"{c} is a proper power")
    if rep.surface.rank == 1:
        # every conjugate shares the single axis
        return 0
    axes = axes_through_domain(rep, c.letters)
    return _count_crossings(rep, axes, None, True)


def count_pair_numeric(rep: IsometryRep, c1, c2) -> int:
    c1, c2 = cyclic(c1), cyclic(c2)
    if not c1 or not c2:
        raise OracleError("contractible class has no geodesic")
    p1, p2 = primitive_root(c1), primitive_root(c2)
    if conjugate_eq(p1.root, p2.root) or conjugate_eq(p1.root, p2.root.inverse()):
        raise OracleError(f"{c1} and {c2} have a common root")
    r1, r2 = p1.root.letters, p2.root.letters
    axes1 = axes_through_domain(rep, r1)
    axes2 = axes_through_domain(rep, r2)
    return _count_crossings(rep, axes1, axes2, False) * p1.exponent * p2.exponent


def stable_self(s: SurfaceSpec, c, lams=(2.0, 3.0)) -> int:
    """Self count checked to agree across separation parameters."""
    counts = {lam: count_self_numeric(realize(s, lam), c) for lam in lams}
    if len(set(counts.values())) != 1:
        raise OracleError(f"count depends on the metric: {counts}")
    return next(iter(counts.values()))


def stable_pair(s: SurfaceSpec, c1, c2, lams=(2.0, 3.0)) -> int:
    counts = {lam: count_pair_numeric(realize(s, lam), c1, c2) for lam in lams}
    if len(set(counts.values())) != 1:
        raise OracleError(f"count depends on the metric: {counts}")
    return next(iter(counts.values()))
