"""Intersection invariants of closed curves on surfaces with free or finite fundamental group."""

from .cosets import (
    CosetSolution,
    PointDatum,
    PointOrdering,
    is_geometrically_self_cancelling,
    is_geometrically_special,
    is_self_cancelling,
    is_special_point,
    is_trivial_point,
    nielsen_equivalent,
    solve_double_coset,
    strict_predicates,
)
from .geodesics import BoundaryRay, compare_rays, pair_intersection_geom, self_intersection_geom
from .nielsen import (
    ClassInventory,
    CurveClass,
    PairReport,
    SelfReport,
    classify_curve,
    classify_pair,
    pair_report,
    reidemeister_enumerate,
    self_report,
)
from .surfaces import SurfaceProfile, SurfaceSpec, boundary_walks, build_surface, profile
from .words import (
    CyclicWord,
    PrimitiveDecomposition,
    conjugate_eq,
    cyclic,
    cyclic_reduce,
    free_reduce,
    orientation_character,
    primitive_root,
)

__version__ = "0.1.0"
