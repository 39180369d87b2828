"""
Linear constraints, convex polyhedra and regions over the rationals
"""

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from ..models.rational import Vector
from ..utils.exceptions import GeometryException


class Relation(str, Enum):
    """Relation of a constraint a . x rel b"""
    LE = "<="
    LT = "<"
    EQ = "="


def _dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x) if ai), Fraction(0))


@dataclass(frozen=True)
class LinearConstraint:
    """The constraint coefficients . x  relation  bound"""
    coefficients: Vector
    relation: Relation
    bound: Fraction

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    @property
    def is_constant(self) -> bool:
        return not any(self.coefficients)

    @property
    def is_strict(self) -> bool:
        return self.relation is Relation.LT

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return _dot(self.coefficients, point)

    def holds(self, point: Sequence[Fraction]) -> bool:
        lhs = self.value(point)
        if self.relation is Relation.LE:
            return lhs <= self.bound
        if self.relation is Relation.LT:
            return lhs < self.bound
        return lhs == self.bound

    def constant_truth(self) -> bool:
        """Truth value of a constraint with all coefficients zero"""
        return self.holds((Fraction(0),) * self.dimension)

    def normalized(self) -> "LinearConstraint":
        """Scale to coprime integers; equalities get a positive leading coefficient"""
        if self.is_constant:
            return self
        scale = lcm(*(c.denominator for c in self.coefficients), self.bound.denominator)
        ints = [int(c * scale) for c in self.coefficients] + [int(self.bound * scale)]
        divisor = gcd(*ints)
        if self.relation is Relation.EQ:
            leading = next(v for v in ints if v)
            if leading < 0:
                divisor = -divisor
        return LinearConstraint(
            tuple(Fraction(v, divisor) for v in ints[:-1]),
            self.relation,
            Fraction(ints[-1], divisor),
        )

    def closure(self) -> "LinearConstraint":
        if self.relation is Relation.LT:
            return replace(self, relation=Relation.LE)
        return self

    def negations(self) -> list["LinearConstraint"]:
        """Constraints whose union is the complement of this one"""
        flipped = tuple(-c for c in self.coefficients)
        if self.relation is Relation.LE:
            return [LinearConstraint(flipped, Relation.LT, -self.bound)]
        if self.relation is Relation.LT:
            return [LinearConstraint(flipped, Relation.LE, -self.bound)]
        return [
            LinearConstraint(self.coefficients, Relation.LT, self.bound),
            LinearConstraint(flipped, Relation.LT, -self.bound),
        ]

    def as_inequalities(self) -> list["LinearConstraint"]:
        """Equalities split into two non-strict inequalities"""
        if self.relation is not Relation.EQ:
            return [self]
        return [
            LinearConstraint(self.coefficients, Relation.LE, self.bound),
            LinearConstraint(tuple(-c for c in self.coefficients), Relation.LE, -self.bound),
        ]

    def permuted(self, order: Sequence[int]) -> "LinearConstraint":
        """Coefficient i of the result is coefficient order[i] of this constraint"""
        return replace(self, coefficients=tuple(self.coefficients[k] for k in order))

    def __str__(self) -> str:
        terms = []
        for index, coefficient in enumerate(self.coefficients):
            if coefficient:
                terms.append(f"{coefficient}*x{index + 1}")
        lhs = " + ".join(terms) or "0"
        return f"{lhs} {self.relation.value} {self.bound}"


def le(coefficients: Iterable, bound) -> LinearConstraint:
    return LinearConstraint(tuple(Fraction(c) for c in coefficients), Relation.LE, Fraction(bound))


def lt(coefficients: Iterable, bound) -> LinearConstraint:
    return LinearConstraint(tuple(Fraction(c) for c in coefficients), Relation.LT, Fraction(bound))


def eq(coefficients: Iterable, bound) -> LinearConstraint:
    return LinearConstraint(tuple(Fraction(c) for c in coefficients), Relation.EQ, Fraction(bound))


def ge(coefficients: Iterable, bound) -> LinearConstraint:
    return le((-Fraction(c) for c in coefficients), -Fraction(bound))


def gt(coefficients: Iterable, bound) -> LinearConstraint:
    return lt((-Fraction(c) for c in coefficients), -Fraction(bound))


def unit(dimension: int, index: int, value=1) -> Vector:
    return tuple(Fraction(value) if i == index else Fraction(0) for i in range(dimension))


@dataclass(frozen=True)
class Polyhedron:
    """Convex polyhedron in H-form"""
    dimension: int
    constraints: tuple[LinearConstraint, ...] = ()

    def __post_init__(self):
        for constraint in self.constraints:
            if constraint.dimension != self.dimension:
                raise GeometryException(
                    f"constraint of dimension {constraint.dimension} in a polyhedron of dimension {self.dimension}"
                )

    @classmethod
    def universe(cls, dimension: int) -> "Polyhedron":
        return cls(dimension)

    @classmethod
    def empty(cls, dimension: int) -> "Polyhedron":
        return cls(dimension, (LinearConstraint((Fraction(0),) * dimension, Relation.LE, Fraction(-1)),))

    @classmethod
    def from_constraints(cls, dimension: int, constraints: Iterable[LinearConstraint]) -> "Polyhedron":
        """Normalize, drop constant truths and duplicates; a constant falsity yields the empty set"""
        seen: dict[LinearConstraint, None] = {}
        for constraint in constraints:
            constraint = constraint.normalized()
            if constraint.is_constant:
                if constraint.constant_truth():
                    continue
                return cls.empty(dimension)
            seen.setdefault(constraint, None)
        return cls(dimension, tuple(seen))

    @classmethod
    def point(cls, point: Sequence[Fraction]) -> "Polyhedron":
        dimension = len(point)
        return cls.from_constraints(
            dimension, (eq(unit(dimension, i), point[i]) for i in range(dimension))
        )

    @property
    def is_trivially_empty(self) -> bool:
        return any(c.is_constant and not c.constant_truth() for c in self.constraints)

    @property
    def has_strict(self) -> bool:
        return any(c.is_strict for c in self.constraints)

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        if len(point) != self.dimension:
            raise GeometryException(f"point of dimension {len(point)} tested against dimension {self.dimension}")
        return all(c.holds(point) for c in self.constraints)

    def __contains__(self, point) -> bool:
        return self.contains_point(point)

    def is_empty(self) -> bool:
        from .lp import is_feasible

        return not is_feasible(self)

    def closure(self) -> "Polyhedron":
        return Polyhedron(self.dimension, tuple(c.closure() for c in self.constraints))

    def with_constraints(self, constraints: Iterable[LinearConstraint]) -> "Polyhedron":
        return Polyhedron.from_constraints(self.dimension, (*self.constraints, *constraints))

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if other.dimension != self.dimension:
            raise GeometryException("cannot intersect polyhedra of different dimensions")
        return self.with_constraints(other.constraints)

    def permuted(self, order: Sequence[int]) -> "Polyhedron":
        return Polyhedron(self.dimension, tuple(c.permuted(order) for c in self.constraints))

    def swap_coordinates(self, i: int, j: int) -> "Polyhedron":
        order = list(range(self.dimension))
        order[i], order[j] = order[j], order[i]
        return self.permuted(order)

    def negate_coordinates(self, indices: Iterable[int]) -> "Polyhedron":
        """Image under x_i -> -x_i for the given coordinates"""
        flip = set(indices)
        if not flip:
            return self
        return Polyhedron.from_constraints(
            self.dimension,
            (
                replace(c, coefficients=tuple(-a if k in flip else a for k, a in enumerate(c.coefficients)))
                for c in self.constraints
            ),
        )

    def embed(self, mapping: Sequence[int]) -> "Polyhedron":
        """Lift into len(mapping) coordinates where new coordinate k copies old coordinate mapping[k].

        Coordinates copying the same old coordinate are tied by equalities.
        """
        if any(not 0 <= m < self.dimension for m in mapping):
            raise GeometryException("embedding refers to a missing coordinate")
        size = len(mapping)
        first: dict[int, int] = {}
        extra = []
        for k, m in enumerate(mapping):
            if m in first:
                coefficients = [Fraction(0)] * size
                coefficients[first[m]] = Fraction(1)
                coefficients[k] = Fraction(-1)
                extra.append(eq(coefficients, 0))
            else:
                first[m] = k
        lifted = []
        for c in self.constraints:
            coefficients = [Fraction(0)] * size
            for m, k in first.items():
                coefficients[k] = c.coefficients[m]
            lifted.append(replace(c, coefficients=tuple(coefficients)))
        return Polyhedron.from_constraints(size, [*lifted, *extra])


@dataclass(frozen=True)
class Region:
    """Finite union of polyhedra of one dimension; no disjuncts means the empty set"""
    dimension: int
    disjuncts: tuple[Polyhedron, ...] = ()

    def __post_init__(self):
        for disjunct in self.disjuncts:
            if disjunct.dimension != self.dimension:
                raise GeometryException("all disjuncts of a region must share one dimension")

    @classmethod
    def of(cls, *polyhedra: Polyhedron) -> "Region":
        if not polyhedra:
            raise GeometryException("a region built from no polyhedra needs an explicit dimension")
        return cls(polyhedra[0].dimension, tuple(polyhedra))

    def __len__(self) -> int:
        return len(self.disjuncts)

    def __iter__(self):
        return iter(self.disjuncts)

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        return any(p.contains_point(point) for p in self.disjuncts)

    def __contains__(self, point) -> bool:
        return self.contains_point(point)

    def is_empty(self) -> bool:
        return all(p.is_empty() for p in self.disjuncts)

    def intersect(self, other: "Region") -> "Region":
        if other.dimension != self.dimension:
            raise GeometryException("cannot intersect regions of different dimensions")
        pieces = (p.intersect(q) for p in self.disjuncts for q in other.disjuncts)
        return Region(self.dimension, tuple(p for p in pieces if not p.is_trivially_empty))

    def map(self, func, dimension: Optional[int] = None) -> "Region":
        """Apply ``func`` to every disjunct; ``dimension`` is the dimension of the images"""
        pieces = tuple(func(p) for p in self.disjuncts)
        return Region(self.dimension if dimension is None else dimension, pieces)
