"""Surfaces with free, cyclic or finite fundamental group.

Besides the plane, the sphere and the projective plane, a surface is given
as a one-vertex ribbon graph: ``g`` loops whose ``2g`` ends (darts ``x+``
and ``x-``) sit in a cyclic order around the vertex, with an optional twist
on each loop.  Reading the letter ``x`` leaves the vertex through ``x+`` and
comes back through ``x-``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PRESETS = {
    "annulus": "fatgraph:order=a+,a-;twists=",
    "moebius": "fatgraph:order=a+,a-;twists=a",
    "pants": "fatgraph:order=a+,a-,b+,b-;twists=",
    "torus1": "fatgraph:order=a+,b+,a-,b-;twists=",
}

# closed surfaces whose fundamental group is neither free nor finite
CLOSED_NONFREE = {"torus", "klein", "kleinbottle", "genus2", "closed"}


class SurfaceError(ValueError):
    """Malformed surface description."""


class AdmissibilityError(ValueError):
    """A well-formed request the library does not handle."""


@dataclass(frozen=True)
class SurfaceSpec:
    kind: str  # plane | sphere | rp2 | fatgraph
    generators: tuple[str, ...] = ()
    twisted: frozenset = field(default_factory=frozenset)
    order: tuple[str, ...] = ()
    name: str = ""

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def is_fatgraph(self) -> bool:
        return self.kind == "fatgraph"

    @property
    def orientable(self) -> bool:
        return not self.twisted

    def dart_positions(self) -> dict[str, int]:
        return {d: i for i, d in enumerate(self.order)}

    def __str__(self) -> str:
        return self.name or self.kind


@dataclass(frozen=True)
class SurfaceProfile:
    euler_characteristic: int
    orientable: bool
    boundary_components: int
    pi1: str


def _parse_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _parse_fatgraph(body: str, name: str) -> SurfaceSpec:
    fields = {}
    for part in body.split(";"):
        if not part.strip():
            continue
        if "=" not in part:
            raise SurfaceError(f"expected key=value, got {part!r}")
        key, val = part.split("=", 1)
        key = key.strip()
        if key not in ("order", "twists"):
            raise SurfaceError(f"unknown fatgraph field {key!r}")
        if key in fields:
            raise SurfaceError(f"repeated fatgraph field {key!r}")
        fields[key] = val
    if "order" not in fields:
        raise SurfaceError("fatgraph needs an order= field")
    darts = _parse_list(fields["order"])
    gens: list[str] = []
    seen: set[str] = set()
    for d in darts:
        if len(d) != 2 or not ("a" <= d[0] <= "z") or d[1] not in "+-":
            raise SurfaceError(f"bad dart {d!r}")
        if d in seen:
            raise SurfaceError(f"duplicate dart {d!r}")
        seen.add(d)
        if d[0] not in gens:
            gens.append(d[0])
    for g in gens:
        for sign in "+-":
            if g + sign not in seen:
                raise SurfaceError(f"missing dart {g + sign!r}")
    twists = _parse_list(fields.get("twists", ""))
    for t in twists:
        if t not in gens:
            raise SurfaceError(f"twist on unknown generator {t!r}")
    if len(set(twists)) != len(twists):
        raise SurfaceError("duplicate twist flag")
    return SurfaceSpec(
        "fatgraph", tuple(sorted(gens)), frozenset(twists), tuple(darts), name
    )


def build_surface(text: str) -> SurfaceSpec:
    """Parse a surface description or a preset name."""
    raw = text.strip()
    head = raw.split(":", 1)[0].strip().lower()
    if raw in PRESETS:
        return _parse_fatgraph(PRESETS[raw].split(":", 1)[1], raw)
    if head in ("plane", "sphere"):
        if ":" in raw:
            raise SurfaceError(f"{head} takes no parameters")
        return SurfaceSpec(head, name=head)
    if head == "rp2":
        if ":" in raw:
            raise SurfaceError("twist flags are only allowed on fatgraph surfaces")
        return SurfaceSpec("rp2", ("a",), frozenset("a"), (), "rp2")
    if head == "fatgraph":
        if ":" not in raw:
            raise SurfaceError("fatgraph needs parameters")
        return _parse_fatgraph(raw.split(":", 1)[1], raw)
    if head in CLOSED_NONFREE:
        raise AdmissibilityError(
            f"closed surface {head!r} has a non-free fundamental group"
        )
    raise SurfaceError(f"unknown surface kind {head!r}")


def _rotate(s: SurfaceSpec, dart: str, step: int) -> str:
    pos = s.dart_positions()
    return s.order[(pos[dart] + step) % len(s.order)]


def _other_end(dart: str) -> str:
    return dart[0] + ("-" if dart[1] == "+" else "+")


def boundary_walks(s: SurfaceSpec) -> list[str]:
    """Boundary curves as words, one per component, by face tracing.

    A walk state is (dart, side).  Crossing an edge moves to its other end
    and flips the side on twisted edges; then the walk turns to the next
    dart in the rotation read in the direction given by the side.  Every
    component is met twice, once per direction.
    """
    if not s.is_fatgraph:
        return []
    orbit_of: dict[tuple[str, int], int] = {}
    orbits: list[list[tuple[str, int]]] = []
    for start in [(d, 1) for d in s.order] + [(d, -1) for d in s.order]:
        if start in orbit_of:
            continue
        state = start
        orbit = []
        while state not in orbit_of:
            orbit_of[state] = len(orbits)
            orbit.append(state)
            d, side = state
            if d[0] in s.twisted:
                side = -side
            state = (_rotate(s, _other_end(d), side), side)
        orbits.append(orbit)
    walks = []
    for i, orbit in enumerate(orbits):
        d, side = orbit[0]
        twist = -1 if d[0] in s.twisted else 1
        rev = orbit_of[(_other_end(d), -side * twist)]
        assert rev != i, "boundary walk equal to its own reverse"
        if i < rev:
            walks.append("".join(x[0] if x[1] == "+" else x[0].upper() for x, _ in orbit))
    return walks


def profile(s: SurfaceSpec) -> SurfaceProfile:
    if s.kind == "plane":
        return SurfaceProfile(1, True, 0, "trivial")
    if s.kind == "sphere":
        return SurfaceProfile(2, True, 0, "trivial")
    if s.kind == "rp2":
        return SurfaceProfile(1, False, 0, "order-two")
    g = s.rank
    if g == 0:
        pi1 = "trivial"
    elif g == 1:
        pi1 = "infinite-cyclic"
    else:
        pi1 = f"free-rank-{g}"
    return SurfaceProfile(1 - g, s.orientable, len(boundary_walks(s)), pi1)


def has_special_curve(s: SurfaceSpec) -> bool:
    """True when the fundamental group is infinite."""
    return s.is_fatgraph and s.rank >= 1
