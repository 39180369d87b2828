"""
Unit tests for the coordinatewise-minimum closure of convex hulls
"""

import random
from fractions import Fraction

import pytest

from src.geometry.double_description import enumerate_vertices, hull_constraints, is_bounded
from src.geometry.fmin import (
    face_difference,
    fmin_finite,
    fmin_region,
    gamma_closure,
    in_fmin_finite,
    orthant_member,
    pairwise_closure,
)
from src.geometry.linear import Polyhedron, ge, le
from src.geometry.lp import includes, same_set
from src.models.rational import vector
from src.utils.exceptions import GeometryException

THREE_POINTS = [vector([0, 1, 0]), vector([-1, -1, 1]), vector([1, 1, 1])]


def random_points(rng: random.Random, dimension: int, count: int, spread: int = 5) -> list:
    return [vector(rng.randint(-spread, spread) for _ in range(dimension)) for _ in range(count)]


def random_query(rng: random.Random, dimension: int, spread: int = 5):
    return vector(Fraction(rng.randint(-4 * spread, 4 * spread), rng.randint(1, 4)) for _ in range(dimension))


class TestFminBasics:
    """Unit tests on small hand-checked sets"""

    def test_two_points_give_triangle(self):
        """Test F_min of the segment between (1,0) and (0,1)"""
        region = fmin_region([(1, 0), (0, 1)])
        triangle = Polyhedron.from_constraints(2, [ge([1, 0], 0), ge([0, 1], 0), le([1, 1], 1)])
        assert same_set(region, triangle)
        assert region.contains_point(vector([0, 0]))

    def test_one_dimension(self):
        """Test F_min of a set of numbers is their hull"""
        assert enumerate_vertices(fmin_region([(3,), (-2,), (1,)])) == [vector([-2]), vector([3])]

    def test_three_points_finite_closure(self):
        """Test the finite closure of three points in dimension three"""
        assert fmin_finite(THREE_POINTS) == sorted(THREE_POINTS + [vector([-1, -1, 0])])

    def test_region_exceeds_hull_of_finite_closure(self):
        """Test the origin is in the closure but not in the hull of the finite minima"""
        origin = vector([0, 0, 0])
        assert fmin_region(THREE_POINTS).contains_point(origin)
        assert not hull_constraints(fmin_finite(THREE_POINTS)).contains_point(origin)
        assert orthant_member(THREE_POINTS, origin)

    def test_face_difference(self):
        """Test conv(S) - L_1 keeps the first coordinate and lowers the others"""
        face = face_difference([(0, 0), (1, 1)], 0)
        assert face.contains_point(vector([1, -10]))
        assert not face.contains_point(vector([2, 0]))
        with pytest.raises(GeometryException):
            face_difference([(0, 0)], 2)

    def test_in_fmin_finite(self):
        assert in_fmin_finite(THREE_POINTS, vector([-1, -1, 0]))
        assert not in_fmin_finite(THREE_POINTS, vector([0, 0, 0]))

    def test_pairwise_closure_reaches_finite_closure(self):
        """Test two rounds of pairwise minima reach every subset minimum in dimension up to four"""
        rng = random.Random(11)
        for _ in range(40):
            dimension = rng.randint(2, 4)
            points = random_points(rng, dimension, rng.randint(1, 6))
            assert pairwise_closure(points, 2) == fmin_finite(points)

    def test_rejects_bad_input(self):
        with pytest.raises(GeometryException):
            fmin_region([])
        with pytest.raises(GeometryException):
            fmin_region([(0, 1), (1,)])
        with pytest.raises(GeometryException):
            gamma_closure([(0, 0, 0, 0)])


class TestFminProperties:
    """Randomized agreement between the constructions"""

    def test_plane_region_is_hull_of_finite_closure(self):
        """Test in the plane F_min(conv S) equals conv(f_min(S))"""
        rng = random.Random(2024)
        for _ in range(300):
            points = random_points(rng, 2, rng.randint(1, 8))
            assert same_set(fmin_region(points), hull_constraints(fmin_finite(points))), points

    def test_constraints_agree_with_face_programs(self):
        """Test constraint membership against per-face feasibility on 200 queries per set"""
        rng = random.Random(7)
        for _ in range(100):
            dimension = rng.randint(1, 4)
            points = random_points(rng, dimension, rng.randint(1, 6))
            region = fmin_region(points)
            finite = fmin_finite(points)[:10]
            queries = finite + [random_query(rng, dimension) for _ in range(200 - len(finite))]
            assert len(queries) == 200
            for query in queries:
                assert region.contains_point(query) == orthant_member(points, query), (points, query)

    def test_gamma_closure_vertices(self):
        """Test every vertex of F_min(conv S) is a minimum of the gamma closure and nothing escapes"""
        rng = random.Random(3)
        for _ in range(50):
            points = random_points(rng, 3, rng.randint(1, 5), spread=3)
            region = fmin_region(points)
            closure = gamma_closure(points)
            for vertex in enumerate_vertices(region):
                assert in_fmin_finite(closure, vertex), (points, vertex)
            for point in closure:
                assert region.contains_point(point)

    def test_region_contains_hull_and_is_bounded(self):
        """Test conv(S) and conv(f_min(S)) lie inside F_min(conv S), which is a polytope"""
        rng = random.Random(41)
        for _ in range(60):
            dimension = rng.randint(1, 4)
            points = random_points(rng, dimension, rng.randint(1, 6), spread=4)
            region = fmin_region(points)
            assert is_bounded(region) is True, points
            assert includes(region, hull_constraints(points)), points
            assert includes(region, hull_constraints(fmin_finite(points))), points

    def test_closure_is_idempotent(self):
        """Test F_min of the vertices of F_min(conv S) is F_min(conv S) again"""
        rng = random.Random(43)
        for _ in range(60):
            dimension = rng.randint(1, 4)
            points = random_points(rng, dimension, rng.randint(1, 6), spread=4)
            region = fmin_region(points)
            assert same_set(fmin_region(enumerate_vertices(region)), region), points
