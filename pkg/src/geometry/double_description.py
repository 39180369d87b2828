"""
Conversion between half-space and generator forms, backed by the Parma Polyhedra Library

PPL works over integers: every rational row is scaled by the common
denominator of its entries, and points carry that denominator as divisor.
Polyhedra with strict constraints are built as NNC polyhedra, all others as
closed ones.
"""

from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

import ppl

from ..models.rational import Vector
from ..utils.exceptions import GeometryException
from ..utils.logging import get_logger
from .linear import LinearConstraint, Polyhedron, Relation

logger = get_logger(__name__)


def integral(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Numerators over the least common denominator, and that denominator"""
    values = [Fraction(v) for v in values]
    denominator = lcm(*(v.denominator for v in values))
    return [int(v * denominator) for v in values], denominator


def _padded(coefficients, dimension: int, divisor: int = 1) -> Vector:
    values = [Fraction(int(c), divisor) for c in coefficients]
    return tuple(values + [Fraction(0)] * (dimension - len(values)))


def _ppl_constraint(constraint: LinearConstraint):
    # a . x rel b  becomes  b - a . x rel' 0
    ints, _ = integral(constraint.coefficients + (constraint.bound,))
    expression = ppl.Linear_Expression([-a for a in ints[:-1]], ints[-1])
    if constraint.relation is Relation.EQ:
        return expression == 0
    if constraint.relation is Relation.LT:
        return expression > 0
    return expression >= 0


def to_ppl(polyhedron: Polyhedron):
    """PPL polyhedron of the same set; NNC when a constraint is strict"""
    kind = ppl.NNC_Polyhedron if polyhedron.has_strict else ppl.C_Polyhedron
    result = kind(polyhedron.dimension, "universe")
    for constraint in polyhedron.constraints:
        result.add_constraint(_ppl_constraint(constraint))
    return result


def from_ppl(source, dimension: int) -> Polyhedron:
    """Minimized constraint form of a PPL polyhedron"""
    if source.is_empty():
        return Polyhedron.empty(dimension)
    constraints = []
    for constraint in source.minimized_constraints():
        if constraint.is_equality():
            relation = Relation.EQ
        elif constraint.is_strict_inequality():
            relation = Relation.LT
        else:
            relation = Relation.LE
        coefficients = tuple(-a for a in _padded(constraint.coefficients(), dimension))
        constraints.append(LinearConstraint(coefficients, relation, Fraction(int(constraint.inhomogeneous_term()))))
    return Polyhedron.from_constraints(dimension, constraints)


def minimize(polyhedron: Polyhedron) -> Polyhedron:
    """Irredundant constraints of the same set"""
    return from_ppl(to_ppl(polyhedron), polyhedron.dimension)


def hull_constraints(points: Iterable[Sequence], rays: Iterable[Sequence] = ()) -> Polyhedron:
    """H-form of conv(points) + cone(rays)"""
    points = list(dict.fromkeys(tuple(Fraction(v) for v in p) for p in points))
    rays = [tuple(Fraction(v) for v in r) for r in rays]
    if not points:
        raise GeometryException("hull of an empty point set")
    dimension = len(points[0])
    if any(len(v) != dimension for v in points + rays):
        raise GeometryException("generators of different dimensions")

    # points first: a ray cannot be added to the empty polyhedron
    hull = ppl.C_Polyhedron(dimension, "empty")
    for p in points:
        ints, divisor = integral(p)
        hull.add_generator(ppl.point(ppl.Linear_Expression(ints, 0), divisor))
    for r in rays:
        if any(r):
            ints, _ = integral(r)
            hull.add_generator(ppl.ray(ppl.Linear_Expression(ints, 0)))

    result = from_ppl(hull, dimension)
    logger.debug(f"hull of {len(points)} points and {len(rays)} rays: {len(result.constraints)} constraints")
    return result


def generators(polyhedron: Polyhedron) -> tuple[list[Vector], list[Vector], list[Vector]]:
    """Vertices, rays and lines of the closure of a polyhedron"""
    dimension = polyhedron.dimension
    closed = to_ppl(polyhedron.closure())
    if closed.is_empty():
        return [], [], []
    vertices, directions, lines = set(), set(), []
    for generator in closed.minimized_generators():
        if generator.is_point():
            vertices.add(_padded(generator.coefficients(), dimension, int(generator.divisor())))
        elif generator.is_ray():
            directions.add(_padded(generator.coefficients(), dimension))
        elif generator.is_line():
            lines.append(_padded(generator.coefficients(), dimension))
    return sorted(vertices), sorted(directions), lines


def enumerate_vertices(polyhedron: Polyhedron) -> list[Vector]:
    """Exact vertex set of a bounded polyhedron, sorted; empty when infeasible"""
    vertices, directions, lines = generators(polyhedron)
    if vertices and (directions or lines):
        raise GeometryException("unbounded polyhedron has no finite vertex description")
    return vertices


def is_bounded(polyhedron: Polyhedron) -> Optional[bool]:
    """True or False for nonempty input, None for the empty set"""
    converted = to_ppl(polyhedron)
    if converted.is_empty():
        return None
    return converted.is_bounded()
