import math

import numpy as np
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from apps.core.exceptions import DomainError
from apps.geometry.jung import diameter, jung_factor, jung_report
from apps.geometry.meb import IllConditionedSupport, chebyshev_ball, circumball, coreset_center
from apps.geometry.oracle import chebyshev_oracle
from apps.geometry.shapes import regular_simplex
from apps.geometry.types import PointSet

TRIANGLE = [[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3.0) / 2.0]]

point_clouds = st.integers(min_value=1, max_value=4).flatmap(
    lambda dim: st.lists(
        st.lists(
            st.floats(min_value=-100, max_value=100, allow_nan=False),
            min_size=dim, max_size=dim,
        ),
        min_size=1, max_size=15,
    )
)


class DiameterTests(SimpleTestCase):

    def test_singleton(self):
        self.assertEqual(diameter(PointSet(1, [[0.0]])), 0.0)

    def test_two_points(self):
        self.assertEqual(diameter(PointSet(1, [[0.0], [1.0]])), 1.0)

    def test_equilateral_triangle(self):
        self.assertAlmostEqual(diameter(PointSet(2, TRIANGLE)), 1.0, places=15)


class ChebyshevBallTests(SimpleTestCase):

    def test_segment_midpoint(self):
        ball = chebyshev_ball(PointSet(1, [[0.0], [1.0]]))
        assert_allclose(ball.center, [0.5])
        self.assertEqual(ball.radius, 0.5)

    def test_equilateral_triangle(self):
        ball = chebyshev_ball(PointSet(2, TRIANGLE))
        self.assertAlmostEqual(ball.radius, 1.0 / math.sqrt(3.0), places=12)
        self.assertAlmostEqual(ball.radius, chebyshev_oracle(PointSet(2, TRIANGLE)).radius, places=12)

    def test_obtuse_triangle_uses_diametral_ball(self):
        ps = PointSet(2, [[0.0, 0.0], [2.0, 0.0], [1.0, 0.1]])
        ball = chebyshev_ball(ps)
        assert_allclose(ball.center, [1.0, 0.0], atol=1e-12)
        self.assertAlmostEqual(ball.radius, 1.0, places=12)
        self.assertAlmostEqual(chebyshev_oracle(ps).radius, 1.0, places=12)

    def test_singleton_and_duplicates(self):
        self.assertEqual(chebyshev_ball(PointSet(3, [[1, 2, 3]] * 4)).radius, 0.0)

    def test_collinear_points_in_the_plane(self):
        ps = PointSet(2, [[0, 0], [1, 1], [2, 2], [3, 3]])
        ball = chebyshev_ball(ps)
        assert_allclose(ball.center, [1.5, 1.5], atol=1e-9)
        self.assertAlmostEqual(ball.radius, 1.5 * math.sqrt(2.0), places=9)

    def test_same_seed_same_ball(self):
        rng = np.random.default_rng(11)
        ps = PointSet(3, rng.normal(size=(30, 3)))
        first = chebyshev_ball(ps, seed=5)
        second = chebyshev_ball(ps, seed=5)
        assert_allclose(first.center, second.center, rtol=0, atol=0)
        self.assertEqual(first.radius, second.radius)

    @override_settings(NCK_MAX_DIM=4)
    def test_dimension_cap(self):
        with self.assertRaisesMessage(DomainError, 'dimension 5 exceeds'):
            chebyshev_ball(PointSet(5, np.eye(5)))

    @override_settings(NCK_WELZL_MAX_DIM=0)
    def test_coreset_path_matches_simplex_radius(self):
        for dim in (2, 3, 5):
            ball = chebyshev_ball(PointSet(dim, regular_simplex(dim)))
            expected = jung_factor(dim)
            self.assertLessEqual(ball.radius, expected * (1.0 + 1e-6))
            self.assertGreaterEqual(ball.radius, expected * (1.0 - 1e-12))

    @settings(deadline=None, max_examples=200)
    @given(point_clouds)
    def test_encloses_every_point(self, rows):
        ps = PointSet.from_rows(rows)
        ball = chebyshev_ball(ps)
        self.assertTrue(ball.encloses(ps, tol=1e-9))


class CircumballTests(SimpleTestCase):

    def test_right_triangle(self):
        center, r2 = circumball(np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]]))
        assert_allclose(center, [1.0, 1.0])
        self.assertAlmostEqual(r2, 2.0)

    def test_collinear_support_is_ill_conditioned(self):
        with self.assertRaises(IllConditionedSupport):
            circumball(np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]))

    def test_coreset_on_square(self):
        points = np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0], [2.0, 2.0]])
        center = coreset_center(points, tol=1e-12)
        assert_allclose(center, [1.0, 1.0], atol=1e-6)


class SimplexJungEqualityTests(SimpleTestCase):
    """The unit-side regular simplex attains the upper Jung bound."""

    def test_regular_simplex_is_regular(self):
        for dim in range(1, 9):
            vertices = regular_simplex(dim)
            self.assertEqual(vertices.shape, (dim + 1, dim))
            self.assertAlmostEqual(diameter(PointSet(dim, vertices)), 1.0, places=12)
            distances = np.linalg.norm(vertices[:, None] - vertices[None], axis=2)
            assert_allclose(distances[~np.eye(dim + 1, dtype=bool)], 1.0, rtol=1e-12)

    def test_radius_equals_upper_bound(self):
        for dim in range(1, 9):
            ball = chebyshev_ball(PointSet(dim, regular_simplex(dim)))
            expected = math.sqrt(dim / (2.0 * dim + 2.0))
            self.assertLessEqual(abs(ball.radius - expected), 1e-9 * expected, msg=f'N={dim}')

    def test_tetrahedron_oracle(self):
        ball = chebyshev_oracle(PointSet(3, regular_simplex(3)))
        self.assertAlmostEqual(ball.radius, math.sqrt(3.0 / 8.0), places=12)

    def test_report_margin_is_zero(self):
        report = jung_report(PointSet(2, TRIANGLE))
        self.assertAlmostEqual(report.upper, math.sqrt(1.0 / 3.0), places=12)
        self.assertAlmostEqual(report.margin, 0.0, places=9)
        self.assertTrue(report.passed)


class RandomJungTests(SimpleTestCase):
    """Seeded random point sets sized 2..N+4 in the cube [-1, 1]^N."""

    def test_sandwich(self):
        rng = np.random.default_rng(2024)
        for dim in (1, 2, 3, 5, 8):
            factor = jung_factor(dim)
            for trial in range(1000):
                size = int(rng.integers(2, dim + 5))
                ps = PointSet(dim, rng.uniform(-1.0, 1.0, size=(size, dim)))
                diam = diameter(ps)
                ball = chebyshev_ball(ps, seed=trial)
                self.assertTrue(ball.encloses(ps, tol=1e-9))
                self.assertGreaterEqual(ball.radius, 0.5 * diam - 1e-9, msg=f'N={dim} trial={trial}')
                self.assertLessEqual(ball.radius, factor * diam + 1e-9, msg=f'N={dim} trial={trial}')

    def test_line_bounds_coincide(self):
        report = jung_report(PointSet(1, [[0.0], [1.0]]))
        self.assertEqual((report.lower, report.upper, report.radius), (0.5, 0.5, 0.5))
        self.assertTrue(report.passed)


class RadiusInvarianceTests(SimpleTestCase):

    def test_rigid_motions(self):
        rng = np.random.default_rng(31)
        for trial in range(300):
            size = int(rng.integers(2, 13))
            points = rng.uniform(-1.0, 1.0, size=(size, 3))
            rotation, _ = np.linalg.qr(rng.normal(size=(3, 3)))
            shift = rng.uniform(-10.0, 10.0, size=3)
            before = chebyshev_ball(PointSet(3, points)).radius
            after = chebyshev_ball(PointSet(3, points @ rotation.T + shift)).radius
            self.assertLessEqual(abs(after - before), 1e-9 * before, msg=f'trial {trial}')

    def test_added_point_never_shrinks(self):
        rng = np.random.default_rng(32)
        for trial in range(300):
            dim = int(rng.integers(1, 5))
            points = rng.uniform(-1.0, 1.0, size=(int(rng.integers(1, 11)), dim))
            extra = rng.uniform(-2.0, 2.0, size=(1, dim))
            self.assertLessEqual(
                chebyshev_ball(PointSet(dim, points)).radius,
                chebyshev_ball(PointSet(dim, np.vstack([points, extra]))).radius + 1e-12,
                msg=f'trial {trial}',
            )
