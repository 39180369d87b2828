"""
Exact polyhedral geometry over the rationals
"""

from .double_description import enumerate_vertices, hull_constraints
from .fmin import face_difference, fmin_finite, fmin_region, gamma_closure
from .fourier_motzkin import eliminate
from .linear import LinearConstraint, Polyhedron, Region, Relation
from .lp import Direction, LpResult, LpStatus, optimize

__all__ = [
    "Direction",
    "LinearConstraint",
    "LpResult",
    "LpStatus",
    "Polyhedron",
    "Region",
    "Relation",
    "eliminate",
    "enumerate_vertices",
    "face_difference",
    "fmin_finite",
    "fmin_region",
    "gamma_closure",
    "hull_constraints",
    "optimize",
]
