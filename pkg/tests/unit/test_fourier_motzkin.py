"""
Unit tests for projection along one coordinate
"""

import random
from fractions import Fraction

import pytest

from src.geometry.fourier_motzkin import eliminate, eliminate_polyhedron, simplify
from src.geometry.linear import Polyhedron, Region, eq, ge, le, lt
from src.geometry.lp import is_feasible, same_set
from src.utils.exceptions import GeometryException


def interval(lo, hi) -> Polyhedron:
    return Polyhedron.from_constraints(1, [ge([1], lo), le([1], hi)])


class TestEliminate:
    """Unit tests for eliminating one variable"""

    def test_triangle_shadow(self):
        triangle = Polyhedron.from_constraints(2, [ge([1, 0], 0), ge([0, 1], 0), le([1, 1], 1)])
        assert same_set(eliminate_polyhedron(triangle, 1), interval(0, 1))
        assert same_set(eliminate_polyhedron(triangle, 0), interval(0, 1))

    def test_equality_substitution(self):
        """Test an equality is used as a substitution"""
        diagonal = Polyhedron.from_constraints(2, [eq([1, -1], 0), ge([0, 1], 0), le([0, 1], 2)])
        assert same_set(eliminate_polyhedron(diagonal, 1), interval(0, 2))

    def test_strictness_propagates(self):
        """Test x < y, y <= 1 projects to x < 1"""
        polyhedron = Polyhedron.from_constraints(2, [lt([1, -1], 0), le([0, 1], 1)])
        projected = eliminate_polyhedron(polyhedron, 1)
        assert not projected.contains_point((Fraction(1),))
        assert projected.contains_point((Fraction(99, 100),))

    def test_sum_variable(self):
        """Test the shadow of {s = x + y} over the unit square is [0, 2]"""
        square = Polyhedron.from_constraints(
            3, [eq([1, -1, -1], 0), ge([0, 1, 0], 0), le([0, 1, 0], 1), ge([0, 0, 1], 0), le([0, 0, 1], 1)]
        )
        projected = eliminate_polyhedron(eliminate_polyhedron(square, 2), 1)
        assert same_set(projected, interval(0, 2))

    def test_remaining_coordinates_keep_their_order(self):
        point = Polyhedron.point((Fraction(1), Fraction(2), Fraction(3)))
        assert same_set(eliminate_polyhedron(point, 0), Polyhedron.point((Fraction(2), Fraction(3))))
        assert same_set(eliminate_polyhedron(point, 1), Polyhedron.point((Fraction(1), Fraction(3))))

    def test_empty_input(self):
        assert eliminate_polyhedron(Polyhedron.empty(2), 0) == Polyhedron.empty(1)

    def test_index_out_of_range(self):
        with pytest.raises(GeometryException):
            eliminate_polyhedron(interval(0, 1), 1)

    def test_random_systems_against_slices(self):
        """Test (x, z) lies in the projection exactly when the slice of the system through it is feasible"""
        rng = random.Random(8)
        for _ in range(60):
            constraints = [
                rng.choice([le, lt, eq])([rng.randint(-2, 2) for _ in range(3)], rng.randint(-3, 3))
                for _ in range(rng.randint(1, 5))
            ]
            polyhedron = Polyhedron.from_constraints(3, constraints)
            projected = eliminate(Region.of(polyhedron), 1)
            assert projected.dimension == 2
            for _ in range(15):
                x, z = (Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(2))
                slice_ = polyhedron.with_constraints([eq([1, 0, 0], x), eq([0, 0, 1], z)])
                assert projected.contains_point((x, z)) == is_feasible(slice_), (constraints, x, z)


class TestRegion:
    """Unit tests for projecting unions of polyhedra"""

    def test_simplify_drops_contained_and_empty(self):
        region = Region(1, (interval(0, 2), interval(1, 2), Polyhedron.empty(1), interval(3, 4)))
        simplified = simplify(region)
        assert len(simplified) == 2
        assert simplified.contains_point((Fraction(7, 2),))

    def test_simplify_keeps_one_of_equal_pieces(self):
        region = Region(1, (interval(0, 1), interval(0, 1)))
        assert len(simplify(region)) == 1

    def test_eliminate_region(self):
        pieces = (
            Polyhedron.from_constraints(2, [eq([1, 0], 0), ge([0, 1], 0), le([0, 1], 1)]),
            Polyhedron.from_constraints(2, [eq([1, 0], 1), ge([0, 1], 5), le([0, 1], 6)]),
        )
        result = eliminate(Region(2, pieces), 0)
        assert result.dimension == 1
        assert result.contains_point((Fraction(11, 2),))
        assert not result.contains_point((Fraction(3),))
