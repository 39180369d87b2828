"""
Unit tests for exact linear programming
"""

from fractions import Fraction

from src.geometry.linear import Polyhedron, eq, ge, gt, le, lt
from src.geometry.lp import (
    Direction,
    LpStatus,
    entails,
    find_point,
    includes,
    is_feasible,
    optimize,
    same_set,
)


def box(width, height) -> Polyhedron:
    return Polyhedron.from_constraints(2, [ge([1, 0], 0), ge([0, 1], 0), le([1, 0], width), le([0, 1], height)])


class TestOptimize:
    """Unit tests for the simplex solver"""

    def test_maximum(self):
        result = optimize(box(1, 2), [1, 1], Direction.MAX)
        assert result.status is LpStatus.OPTIMAL
        assert result.value == 3
        assert result.point == (Fraction(1), Fraction(2))

    def test_minimum_with_negative_coordinates(self):
        """Test free variables reach negative values"""
        polyhedron = Polyhedron.from_constraints(1, [ge([1], Fraction(-5, 2)), le([1], 7)])
        assert optimize(polyhedron, [1], Direction.MIN).value == Fraction(-5, 2)

    def test_unbounded(self):
        polyhedron = Polyhedron.from_constraints(1, [ge([1], 0)])
        assert optimize(polyhedron, [1]).status is LpStatus.UNBOUNDED

    def test_infeasible(self):
        polyhedron = Polyhedron.from_constraints(1, [le([1], 0), ge([1], 1)])
        assert optimize(polyhedron, [1]).status is LpStatus.INFEASIBLE

    def test_equalities(self):
        """Test equality rows, including a redundant one"""
        polyhedron = Polyhedron.from_constraints(
            2, [eq([1, 1], 1), eq([2, 2], 2), ge([1, 0], 0), ge([0, 1], 0)]
        )
        assert optimize(polyhedron, [1, -1]).value == 1
        assert optimize(polyhedron, [1, -1], Direction.MIN).value == -1

    def test_strict_constraints_give_supremum(self):
        """Test optimization runs over the closure"""
        polyhedron = Polyhedron.from_constraints(1, [lt([1], 1), ge([1], 0)])
        assert optimize(polyhedron, [1]).value == 1


class TestFeasibility:
    """Unit tests for feasibility with strict constraints"""

    def test_open_interval(self):
        point = find_point(Polyhedron.from_constraints(1, [lt([1], 1), gt([1], 0)]))
        assert point is not None
        assert 0 < point[0] < 1

    def test_open_empty(self):
        assert find_point(Polyhedron.from_constraints(1, [lt([1], 0), gt([1], 0)])) is None
        assert find_point(Polyhedron.from_constraints(1, [lt([1], 0), ge([1], 0)])) is None
        assert find_point(Polyhedron.from_constraints(1, [le([1], 0), ge([1], 0)])) == (Fraction(0),)

    def test_trivially_empty(self):
        assert not is_feasible(Polyhedron.empty(3))
        assert Polyhedron.empty(3).is_empty()

    def test_entails(self):
        """Test entailment of non-strict and strict constraints"""
        assert entails(box(1, 1), le([1, 1], 2))
        assert not entails(box(1, 1), lt([1, 1], 2))
        assert entails(box(1, 1), eq([0, 0], 0))

    def test_includes_and_same_set(self):
        assert includes(box(2, 2), box(1, 1))
        assert not includes(box(1, 1), box(2, 2))
        doubled = Polyhedron.from_constraints(2, [*box(1, 1).constraints, le([1, 1], 2)])
        assert same_set(doubled, box(1, 1))
