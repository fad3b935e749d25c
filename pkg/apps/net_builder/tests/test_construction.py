import json
import math

import numpy as np
from django.test import SimpleTestCase, override_settings
from numpy.testing import assert_allclose, assert_array_equal

from apps.cli.generators import ramp_family, simplex_osc_family
from apps.core.exceptions import AlphaTooSmallError, DomainError, QuantizationRangeError
from apps.core.formats import dumps_json
from apps.function_space.files import parse_family
from apps.function_space.paths import sup_distance, sup_norm, uniform_bound
from apps.function_space.types import Family, Grid, SampledPath
from apps.geometry.jung import jung_factor
from apps.moduli.covering import net_radius
from apps.net_builder.construction import (
    build_net,
    chebyshev_profile,
    plateau_interpolant,
    quantize_path,
)
from apps.net_builder.partition import build_partition
from apps.net_builder.serializers import NetSerializer
from apps.net_builder.types import ChebyshevProfile, Lattice, Partition


class ChebyshevProfileTests(SimpleTestCase):

    def test_constant_path(self):
        path = SampledPath(Grid.uniform(0.0, 1.0, 10), [[2.0, -1.0]] * 11)
        profile = chebyshev_profile(path, build_partition(0.0, 1.0, 0.4))
        assert_allclose(profile.centers, [[2.0, -1.0]] * 5)
        assert_array_equal(profile.radii, np.zeros(5))

    def test_identity_centers_are_midpoints(self):
        path = SampledPath(Grid([0.0, 1.0]), [0.0, 1.0])
        part = build_partition(0.0, 1.0, 0.4)
        profile = chebyshev_profile(path, part)
        self.assertAlmostEqual(profile.centers[0, 0], 1.0 / 9.0, places=15)
        self.assertAlmostEqual(profile.radii[0], 1.0 / 9.0, places=15)
        lows, highs = part.closures()
        assert_allclose(profile.centers[:, 0], 0.5 * (lows + highs))

    def test_simplex_images_reach_the_jung_bound(self):
        fam = simplex_osc_family(1, 2.0 ** -8, dim=2)
        profile = chebyshev_profile(fam.members[0], build_partition(0.0, 1.0, 0.25))
        assert_allclose(profile.radii, math.sqrt(1.0 / 3.0), rtol=1e-9)
        assert_allclose(profile.diameters, 1.0, rtol=1e-9)

    def test_line_profile_matches_general_solver(self):
        rng = np.random.default_rng(4)
        grid = Grid(np.concatenate([[0.0], np.sort(rng.uniform(0, 1, 40)), [1.0]]))
        values = rng.uniform(-1, 1, len(grid))
        part = build_partition(0.0, 1.0, 0.2)
        line = chebyshev_profile(SampledPath(grid, values), part)
        lifted = chebyshev_profile(SampledPath(grid, np.column_stack([values, np.zeros_like(values)])), part)
        assert_allclose(line.radii, lifted.radii, atol=1e-9)
        assert_allclose(line.centers[:, 0], lifted.centers[:, 0], atol=1e-9)

    def test_other_interval(self):
        path = SampledPath(Grid([0.0, 2.0]), [0.0, 1.0])
        with self.assertRaises(DomainError):
            chebyshev_profile(path, build_partition(0.0, 1.0, 0.4))


class PlateauInterpolantTests(SimpleTestCase):

    def test_equal_centers_give_a_constant(self):
        part = build_partition(0.0, 1.0, 0.4)
        profile = ChebyshevProfile(np.full((5, 2), 0.5), np.zeros(5), np.zeros(5))
        path = plateau_interpolant(profile, part)
        assert_array_equal(path.values, np.full((10, 2), 0.5))

    def test_two_plateaus_and_a_bridge(self):
        part = Partition([0.0, 1 / 3, 2 / 3, 1.0])
        profile = ChebyshevProfile(np.array([[0.0], [1.0]]), np.zeros(2), np.zeros(2))
        path = plateau_interpolant(profile, part)
        self.assertEqual(path.values[:, 0].tolist(), [0.0, 0.0, 1.0, 1.0])

    def test_count_mismatch(self):
        part = Partition([0.0, 1 / 3, 2 / 3, 1.0])
        profile = ChebyshevProfile(np.zeros((3, 1)), np.zeros(3), np.zeros(3))
        with self.assertRaisesMessage(DomainError, 'profile has 3 centers, partition needs 2'):
            plateau_interpolant(profile, part)

    def test_identity_error(self):
        path = SampledPath(Grid([0.0, 1.0]), [0.0, 1.0])
        part = build_partition(0.0, 1.0, 0.4)
        ftilde = plateau_interpolant(chebyshev_profile(path, part), part)
        self.assertLessEqual(sup_distance(ftilde, path), 0.5 * 0.4)

    def test_plateau_bound_on_random_paths(self):
        rng = np.random.default_rng(6)
        for trial in range(60):
            dim = int(rng.integers(1, 4))
            grid = Grid(np.concatenate([[0.0], np.sort(rng.uniform(0, 1, 30)), [1.0]]))
            path = SampledPath(grid, rng.uniform(-1, 1, size=(len(grid), dim)))
            part = build_partition(0.0, 1.0, float(rng.uniform(0.05, 1.0)))
            profile = chebyshev_profile(path, part)
            ftilde = plateau_interpolant(profile, part)
            bound = jung_factor(dim) * float(np.max(profile.diameters))
            self.assertLessEqual(sup_distance(ftilde, path), bound + 1e-9, msg=f'trial {trial}')
            self.assertLessEqual(sup_norm(ftilde), 3.0 * sup_norm(path) + 1e-9)


class QuantizeTests(SimpleTestCase):

    def test_nearest_multiple(self):
        lattice = Lattice.for_epsilon(0.25, 3.0, 1)
        self.assertEqual(lattice.spacing, 0.5)
        path = SampledPath(Grid([0.0, 1.0]), [1.1, -0.3])
        self.assertEqual(quantize_path(path, lattice).values[:, 0].tolist(), [1.0, -0.5])

    def test_ties_round_down(self):
        lattice = Lattice.for_epsilon(0.25, 3.0, 1)
        self.assertEqual(lattice.snap(np.array([0.25, -0.25, 0.75])).tolist(), [0.0, -0.5, 0.5])

    def test_idempotent(self):
        lattice = Lattice.for_epsilon(0.1, 3.0, 2)
        path = SampledPath(Grid([0.0, 0.5, 1.0]), np.random.default_rng(1).uniform(-1, 1, (3, 2)))
        once = quantize_path(path, lattice)
        assert_array_equal(quantize_path(once, lattice).values, once.values)

    def test_error_is_within_half_diagonal(self):
        lattice = Lattice.for_epsilon(0.1, 3.0, 2)
        self.assertAlmostEqual(lattice.epsilon, 0.1, places=15)
        values = np.random.default_rng(2).uniform(-2, 2, size=(1000, 2))
        errors = np.linalg.norm(lattice.snap(values) - values, axis=1)
        self.assertLessEqual(float(np.max(errors)), 0.1 + 1e-12)

    def test_sup_error_within_epsilon(self):
        rng = np.random.default_rng(3)
        lattice = Lattice.for_epsilon(0.05, 3.0, 3)
        for _ in range(100):
            path = SampledPath(Grid.uniform(0.0, 1.0, 7), rng.uniform(-1, 1, size=(8, 3)))
            self.assertLessEqual(sup_distance(quantize_path(path, lattice), path), 0.05 + 1e-12)

    def test_out_of_range(self):
        lattice = Lattice.for_epsilon(0.1, 1.0, 1)
        path = SampledPath(Grid([0.0, 1.0]), [0.0, 2.0])
        with self.assertRaisesMessage(QuantizationRangeError, 'quantization range exceeded'):
            quantize_path(path, lattice)

    def test_dimension_mismatch(self):
        with self.assertRaises(DomainError):
            quantize_path(SampledPath(Grid([0.0, 1.0]), [0.0, 1.0]), Lattice.for_epsilon(0.1, 1.0, 2))


class BuildNetTests(SimpleTestCase):

    def test_constant_family(self):
        fam = Family.from_values(Grid.uniform(0.0, 1.0, 4), [[[0.3, -0.7]] * 5])
        result = build_net(fam, delta=0.5, alpha=0.0, epsilon=0.1)
        self.assertEqual(len(result.net), 1)
        lattice = result.lattice
        assert_array_equal(result.net.members[0].values[0], lattice.snap(np.array([0.3, -0.7])))
        self.assertLessEqual(result.certificates[0].total, 0.1 + 1e-12)
        self.assertTrue(result.passed)

    def test_ramp_certificates(self):
        fam = ramp_family(12, 2.0 ** -14)
        result = build_net(fam, delta=2.0 ** -12, alpha=1.0, epsilon=0.01)
        self.assertTrue(result.passed)
        for certificate in result.certificates:
            self.assertLessEqual(certificate.total, 0.5 + 0.01 + 1e-9)
        self.assertLessEqual(net_radius(fam, result.net), 0.5 + 0.01 + 1e-9)

    def test_simplex_certificates(self):
        fam = simplex_osc_family(3, 2.0 ** -10, dim=2)
        result = build_net(fam, delta=2.0 ** -5, alpha=1.0, epsilon=0.01)
        bound = math.sqrt(1.0 / 3.0) + 0.01 + 1e-9
        self.assertTrue(result.passed)
        self.assertTrue(all(c.total <= bound for c in result.certificates))
        self.assertLessEqual(net_radius(fam, result.net), bound)

    def test_alpha_too_small(self):
        fam = ramp_family(12, 2.0 ** -14)
        with self.assertRaises(AlphaTooSmallError) as caught:
            build_net(fam, delta=2.0 ** -12, alpha=0.5, epsilon=0.01)
        self.assertEqual(caught.exception.omega, 1.0)
        self.assertIn('alpha too small for delta', str(caught.exception))

    def test_alpha_above_twice_the_bound(self):
        fam = Family.from_values(Grid([0.0, 1.0]), [[0.0, 0.25]])
        with self.assertRaisesMessage(DomainError, 'exceeds twice the uniform bound'):
            build_net(fam, delta=0.5, alpha=1.0, epsilon=0.01)

    def test_duplicate_members_share_an_element(self):
        grid = Grid.uniform(0.0, 1.0, 16)
        wave = np.sin(3.0 * grid.knots)
        fam = Family.from_values(grid, [wave, wave, -wave], ['a', 'b', 'c'])
        result = build_net(fam, delta=0.25, alpha=1.0, epsilon=0.05)
        self.assertEqual(result.net.labels, ('L0', 'L1'))
        self.assertEqual([c.net_index for c in result.certificates], [0, 0, 1])

    def test_deterministic(self):
        fam = simplex_osc_family(2, 2.0 ** -8, dim=3)
        first = build_net(fam, delta=0.1, alpha=1.0, epsilon=0.02, seed=4)
        with override_settings(NCK_WORKERS=3):
            second = build_net(fam, delta=0.1, alpha=1.0, epsilon=0.02, seed=4)
        assert_array_equal(first.net.stacked(), second.net.stacked())
        self.assertEqual(first.certificates, second.certificates)

    def test_lattice_covers_three_bounds(self):
        fam = ramp_family(3, 2.0 ** -6)
        result = build_net(fam, delta=0.2, alpha=1.0, epsilon=0.01)
        self.assertEqual(result.lattice.bound, 3.0 * uniform_bound(fam))
        self.assertLessEqual(uniform_bound(result.net), 3.0 * uniform_bound(fam) + 0.01)

    def test_document_loads_back_as_family(self):
        fam = ramp_family(3, 2.0 ** -6)
        result = build_net(fam, delta=0.2, alpha=1.0, epsilon=0.01)
        data = NetSerializer(result).data
        self.assertIs(data['pass'], True)
        self.assertEqual(
            set(data['certificates'][0]),
            {'member_id', 'net_index', 'plateau_err', 'quant_err', 'total', 'bound', 'pass'},
        )
        self.assertEqual(data['partition']['points'], result.partition.points.tolist())
        loaded = parse_family(dumps_json(data))
        assert_array_equal(loaded.stacked(), result.net.stacked())
        self.assertEqual(json.loads(dumps_json(data))['delta'], 0.2)
