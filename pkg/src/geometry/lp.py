"""
Exact linear programming over the rationals

Dense two-phase simplex with Bland's rule. Variables are free; strict
constraints are relaxed to their closure when optimizing, and handled with a
slack variable when deciding feasibility.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from ..models.rational import Vector
from .linear import LinearConstraint, Polyhedron, Relation

_ZERO = Fraction(0)


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


class Direction(str, Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class LpResult:
    """Outcome of an optimization; value and point are set when optimal"""
    status: LpStatus
    value: Optional[Fraction] = None
    point: Optional[Vector] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


def _pivot(rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int], r: int, e: int) -> None:
    pivot = rows[r][e]
    rows[r] = [v / pivot for v in rows[r]]
    rhs[r] = rhs[r] / pivot
    pivot_row = rows[r]
    for i, row in enumerate(rows):
        factor = row[e]
        if i != r and factor:
            rows[i] = [a - factor * b if b else a for a, b in zip(row, pivot_row)]
            rhs[i] -= factor * rhs[r]
    basis[r] = e


def _run_simplex(rows, rhs, basis, cost, columns) -> LpStatus:
    """Maximize cost . z over the tableau, entering only through ``columns``"""
    while True:
        in_basis = set(basis)
        basic_cost = [cost[b] for b in basis]
        entering = None
        for j in columns:
            if j in in_basis:
                continue
            reduced = cost[j] - sum((basic_cost[i] * row[j] for i, row in enumerate(rows) if row[j]), _ZERO)
            if reduced > 0:
                entering = j
                break
        if entering is None:
            return LpStatus.OPTIMAL

        leaving = None
        best_ratio = None
        for i, row in enumerate(rows):
            if row[entering] > 0:
                ratio = rhs[i] / row[entering]
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leaving])):
                    best_ratio, leaving = ratio, i
        if leaving is None:
            return LpStatus.UNBOUNDED
        _pivot(rows, rhs, basis, leaving, entering)


def solve(dimension: int, constraints: Sequence[LinearConstraint], objective: Sequence[Fraction]) -> LpResult:
    """Maximize objective . x subject to the closure of the constraints"""
    inequality_count = sum(1 for c in constraints if c.relation is not Relation.EQ)
    m = len(constraints)
    slack_base = 2 * dimension
    artificial_base = slack_base + inequality_count
    width = artificial_base + m

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack = slack_base
    for r, constraint in enumerate(constraints):
        row = [_ZERO] * width
        for k, a in enumerate(constraint.coefficients):
            row[k] = a
            row[dimension + k] = -a
        if constraint.relation is not Relation.EQ:
            row[slack] = Fraction(1)
            slack += 1
        bound = constraint.bound
        if bound < 0:
            row = [-v for v in row]
            bound = -bound
        row[artificial_base + r] = Fraction(1)
        rows.append(row)
        rhs.append(bound)
    basis = [artificial_base + r for r in range(m)]

    # Phase 1: drive the artificial variables to zero
    phase_one = [_ZERO] * artificial_base + [Fraction(-1)] * m
    _run_simplex(rows, rhs, basis, phase_one, range(width))
    if sum((rhs[i] for i, b in enumerate(basis) if b >= artificial_base), _ZERO) > 0:
        return LpResult(LpStatus.INFEASIBLE)

    redundant = []
    for i, b in enumerate(basis):
        if b < artificial_base:
            continue
        column = next((j for j in range(artificial_base) if rows[i][j]), None)
        if column is None:
            redundant.append(i)
        else:
            _pivot(rows, rhs, basis, i, column)
    for i in reversed(redundant):
        del rows[i], rhs[i], basis[i]

    # Phase 2
    objective = [Fraction(c) for c in objective]
    cost = objective + [-c for c in objective] + [_ZERO] * (width - slack_base)
    status = _run_simplex(rows, rhs, basis, cost, range(artificial_base))
    if status is LpStatus.UNBOUNDED:
        return LpResult(LpStatus.UNBOUNDED)

    values = [_ZERO] * width
    for i, b in enumerate(basis):
        values[b] = rhs[i]
    point = tuple(values[k] - values[dimension + k] for k in range(dimension))
    value = sum((c * x for c, x in zip(objective, point)), _ZERO)
    return LpResult(LpStatus.OPTIMAL, value, point)


def optimize(polyhedron: Polyhedron, objective: Sequence, direction: Direction = Direction.MAX) -> LpResult:
    """Exact optimum of a linear objective; strict constraints count as their closure"""
    objective = [Fraction(c) for c in objective]
    if direction is Direction.MAX:
        return solve(polyhedron.dimension, polyhedron.constraints, objective)
    result = solve(polyhedron.dimension, polyhedron.constraints, [-c for c in objective])
    if result.is_optimal:
        return LpResult(LpStatus.OPTIMAL, -result.value, result.point)
    return result


def find_point(polyhedron: Polyhedron) -> Optional[Vector]:
    """A point satisfying every constraint (strict ones included), or None"""
    if polyhedron.is_trivially_empty:
        return None
    if not polyhedron.has_strict:
        result = solve(polyhedron.dimension, polyhedron.constraints, [_ZERO] * polyhedron.dimension)
        return result.point if result.is_optimal else None

    # maximize a margin s with a . x + s <= b on strict rows
    dimension = polyhedron.dimension + 1
    lifted = []
    for c in polyhedron.constraints:
        margin = Fraction(1) if c.is_strict else _ZERO
        relation = Relation.LE if c.is_strict else c.relation
        lifted.append(LinearConstraint(c.coefficients + (margin,), relation, c.bound))
    lifted.append(LinearConstraint((_ZERO,) * polyhedron.dimension + (Fraction(1),), Relation.LE, Fraction(1)))
    result = solve(dimension, lifted, (_ZERO,) * polyhedron.dimension + (Fraction(1),))
    if not result.is_optimal or result.value <= 0:
        return None
    return result.point[:-1]


def is_feasible(polyhedron: Polyhedron) -> bool:
    return find_point(polyhedron) is not None


def entails(polyhedron: Polyhedron, constraint: LinearConstraint) -> bool:
    """Whether every point of the polyhedron satisfies the constraint"""
    return all(
        not is_feasible(Polyhedron(polyhedron.dimension, polyhedron.constraints + (negation,)))
        for negation in constraint.negations()
    )


def includes(outer: Polyhedron, inner: Polyhedron) -> bool:
    """inner is a subset of outer"""
    if not is_feasible(inner):
        return True
    return all(entails(inner, c) for c in outer.constraints)


def same_set(first: Polyhedron, second: Polyhedron) -> bool:
    """Set equality by mutual entailment"""
    return includes(first, second) and includes(second, first)
