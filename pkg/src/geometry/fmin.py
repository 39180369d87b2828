"""
Closure of point sets under coordinatewise minimum

Three constructions of F_min(conv(S)) for a finite S: the intersection of the
face differences conv(S) - L_j (constraint form), the finite closure over
subsets of size at most d, and the explicit gamma construction used as a
cross-check for d <= 3.
"""

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from ..models.rational import Vector, pointwise_min
from ..utils.exceptions import GeometryException
from ..utils.logging import get_logger
from .double_description import enumerate_vertices, hull_constraints, minimize
from .linear import Polyhedron, eq, le, unit
from .lp import is_feasible

logger = get_logger(__name__)

GAMMA_MAX_DIMENSION = 3


def _points(points: Iterable[Sequence]) -> list[Vector]:
    result = list(dict.fromkeys(tuple(Fraction(v) for v in p) for p in points))
    if not result:
        raise GeometryException("empty point set")
    dimension = len(result[0])
    if any(len(p) != dimension for p in result):
        raise GeometryException("points of different dimensions")
    return result


def face_difference(points: Iterable[Sequence], j: int) -> Polyhedron:
    """conv(points) - L_j where L_j is the nonnegative orthant face with x_j = 0"""
    points = _points(points)
    dimension = len(points[0])
    if not 0 <= j < dimension:
        raise GeometryException(f"coordinate {j + 1} out of range for dimension {dimension}")
    rays = [unit(dimension, i, -1) for i in range(dimension) if i != j]
    return hull_constraints(points, rays)


def fmin_region(points: Iterable[Sequence]) -> Polyhedron:
    """F_min(conv(points)) as the intersection of the face differences"""
    points = _points(points)
    dimension = len(points[0])
    result = Polyhedron.universe(dimension)
    for j in range(dimension):
        result = result.intersect(face_difference(points, j))
    result = minimize(result)
    logger.debug(f"F_min of {len(points)} points in dimension {dimension}: {len(result.constraints)} constraints")
    return result


def fmin_finite(points: Iterable[Sequence]) -> list[Vector]:
    """Coordinatewise minima of all subsets of size at most d, sorted"""
    points = _points(points)
    dimension = len(points[0])
    closure: dict[Vector, None] = dict.fromkeys(points)
    for size in range(2, min(dimension, len(points)) + 1):
        for subset in combinations(points, size):
            closure.setdefault(pointwise_min(subset), None)
    return sorted(closure)


def pairwise_closure(points: Iterable[Sequence], rounds: int) -> list[Vector]:
    """Apply the pairwise-minimum closure ``rounds`` times"""
    current = _points(points)
    for _ in range(rounds):
        grown = dict.fromkeys(current)
        for p, q in combinations(current, 2):
            grown.setdefault(pointwise_min((p, q)), None)
        current = list(grown)
    return sorted(current)


def in_fmin_finite(points: Iterable[Sequence], target: Sequence) -> bool:
    """Whether target is the coordinatewise minimum of some subset of points"""
    points = _points(points)
    target = tuple(Fraction(v) for v in target)
    for j, value in enumerate(target):
        if not any(p[j] == value and all(pi >= ti for pi, ti in zip(p, target)) for p in points):
            return False
    return True


def orthant_member(points: Iterable[Sequence], target: Sequence) -> bool:
    """Membership in F_min(conv(points)) decided face by face.

    For every j the system x in conv(points), x_j = y_j, x_i >= y_i (i != j)
    must be feasible; the system is solved over convex weights of the points.
    """
    points = _points(points)
    target = tuple(Fraction(v) for v in target)
    count = len(points)
    for j in range(len(target)):
        constraints = [eq([1] * count, 1)]
        constraints += [le(unit(count, k, -1), 0) for k in range(count)]
        for i, value in enumerate(target):
            column = [p[i] for p in points]
            if i == j:
                constraints.append(eq(column, value))
            else:
                constraints.append(le([-c for c in column], -value))
        if not is_feasible(Polyhedron.from_constraints(count, constraints)):
            return False
    return True


def gamma_closure(points: Iterable[Sequence]) -> list[Vector]:
    """gamma^(d-1)(points): add the vertices of every coordinate-plane slice of the hull.

    The slices are taken through each point of the current set, fixing between
    one and d-1 coordinates. Every added point lies in conv(points), so the
    hull is computed once.
    """
    current = _points(points)
    dimension = len(current[0])
    if dimension > GAMMA_MAX_DIMENSION:
        raise GeometryException(f"gamma construction is limited to dimension {GAMMA_MAX_DIMENSION}, got {dimension}")

    hull = hull_constraints(current)
    subsets = [fixed for size in range(1, dimension) for fixed in combinations(range(dimension), size)]
    for _ in range(dimension - 1):
        grown = dict.fromkeys(current)
        planes = {(fixed, tuple(p[k] for k in fixed)) for p in current for fixed in subsets}
        for fixed, values in sorted(planes):
            plane = hull.with_constraints(eq(unit(dimension, k), v) for k, v in zip(fixed, values))
            for vertex in enumerate_vertices(plane):
                grown.setdefault(vertex, None)
        current = list(grown)
    logger.debug(f"gamma closure in dimension {dimension}: {len(current)} points")
    return sorted(current)
