import math
from unittest import TestCase

from numpy import array, complex128, diag, exp, linspace, ones, pi, searchsorted, zeros
from scipy.integrate import quad

from coupledtops.dynamics import BipartiteState, CoupledTopParams
from coupledtops.exceptions import DimensionMismatch, EmptyInput, InvalidParameterValue
from coupledtops.rmt import (
    chi_square,
    eigenstate_ensemble,
    poisson_spacing,
    rdm_eigenvalue_histogram,
    spacing_distribution,
    unfolded_spacings,
    wigner_surmise,
)
from coupledtops.settings import EigenBackend
from tests.state_factories import create_rng, random_bipartite_state, random_unitary


class ChiSquareTest(TestCase):
    def test_statistic(self) -> None:
        result = chi_square([10, 12, 3], [10.0, 10.0, 2.0])
        self.assertEqual(result.bins_used, 2)
        self.assertAlmostEqual(result.statistic, 0.4, places=14)
        self.assertAlmostEqual(result.per_bin, 0.2, places=14)

    def test_no_usable_bins(self) -> None:
        self.assertEqual(chi_square([1, 2], [1.0, 1.0]).per_bin, math.inf)

    def test_shape_mismatch(self) -> None:
        with self.assertRaises(DimensionMismatch):
            chi_square([1, 2, 3], [1.0, 2.0])


class RdmHistogramTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(30)

    def test_single_product_state(self) -> None:
        grid = zeros((3, 3), dtype=complex128)
        grid[0, 0] = 1.0
        hist = rdm_eigenvalue_histogram([BipartiteState(grid=grid)], bins=24)
        self.assertEqual(hist.total, 3)
        self.assertEqual(hist.counts[0], 2)
        self.assertEqual(hist.counts[searchsorted(hist.edges, 1.0, side="right") - 1], 1)
        self.assertEqual(hist.outside_fraction, 0.0)

    def test_random_states_follow_the_density(self) -> None:
        states = [random_bipartite_state(16, 16, self._rng) for _ in range(200)]
        hist = rdm_eigenvalue_histogram(states, bins=24, backend=EigenBackend.LAPACK)
        self.assertEqual(hist.total, 200 * 16)
        self.assertLess(abs(hist.expected.sum() / hist.total - 1.0), 1e-8)
        self.assertEqual(hist.edges.size, 25)
        self.assertAlmostEqual(hist.edges[-1], 1.2 * hist.params.lambda_max, places=14)
        self.assertLess(hist.outside_fraction, 0.05)
        self.assertLess(hist.chi_square().per_bin, 5.0)

    def test_values_above_range_go_to_top_bin(self) -> None:
        grid = zeros((16, 16), dtype=complex128)
        grid[3, 5] = 1.0
        hist = rdm_eigenvalue_histogram([BipartiteState(grid=grid)], bins=24)
        self.assertEqual(hist.counts[-1], 1)
        self.assertEqual(hist.counts[0], 15)
        self.assertAlmostEqual(hist.outside_fraction, 1.0 / 16, places=15)

    def test_empty(self) -> None:
        with self.assertRaises(EmptyInput):
            rdm_eigenvalue_histogram([])

    def test_mixed_dimensions(self) -> None:
        states = [random_bipartite_state(3, 3, self._rng), random_bipartite_state(3, 4, self._rng)]
        with self.assertRaises(DimensionMismatch):
            rdm_eigenvalue_histogram(states)

    def test_eigenstate_ensemble(self) -> None:
        states = eigenstate_ensemble(CoupledTopParams(j=1.0, k1=6.0, eps=0.5, k2=6.1), EigenBackend.LAPACK)
        self.assertEqual(len(states), 9)
        self.assertTrue(all(s.grid.shape == (3, 3) for s in states))


class SpacingTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(31)

    def test_unfolded_spacings_have_unit_mean(self) -> None:
        angles = self._rng.uniform(-pi, pi, 50)
        spacings = unfolded_spacings(angles)
        self.assertEqual(spacings.size, 50)
        self.assertAlmostEqual(spacings.mean(), 1.0, places=12)
        self.assertTrue((spacings >= 0.0).all())

    def test_equally_spaced_angles(self) -> None:
        angles = -pi + 2 * pi * (linspace(0.0, 1.0, 8, endpoint=False) + 0.5 / 8)
        self.assertTrue(abs(unfolded_spacings(angles) - ones(8)).max() < 1e-12)

    def test_too_few_angles(self) -> None:
        with self.assertRaises(EmptyInput):
            unfolded_spacings([0.3])

    def test_reference_densities_normalised(self) -> None:
        for density in (wigner_surmise, poisson_spacing):
            with self.subTest(density=density.__name__):
                total, _ = quad(lambda s: float(density(s)), 0.0, math.inf)
                mean, _ = quad(lambda s: s * float(density(s)), 0.0, math.inf)
                self.assertAlmostEqual(total, 1.0, places=8)
                self.assertAlmostEqual(mean, 1.0, places=8)

    def test_expected_counts_include_overflow(self) -> None:
        hist = spacing_distribution(random_unitary(60, self._rng), bins=10, s_max=3.0)
        self.assertEqual(hist.counts.sum(), 60)
        self.assertAlmostEqual(hist.wigner_expected.sum(), 60.0, places=10)
        self.assertAlmostEqual(hist.poisson_expected.sum(), 60.0, places=10)
        self.assertAlmostEqual(hist.mean_spacing, 1.0, places=12)

    def test_random_unitary_repels_levels(self) -> None:
        hist = spacing_distribution(random_unitary(300, self._rng), backend=EigenBackend.LAPACK)
        self.assertLess(hist.chi_square_wigner().statistic, hist.chi_square_poisson().statistic)

    def test_sectors(self) -> None:
        u = diag(exp(1j * array([0.1, 1.0, 2.5, -0.4, -2.0, 3.0])))
        sectors = [diag(ones(6))[:, :3].astype(complex128), diag(ones(6))[:, 3:].astype(complex128)]
        hist = spacing_distribution(u, sectors=sectors, backend=EigenBackend.LAPACK)
        self.assertEqual(hist.spacings.size, 6)
        with self.assertRaises(EmptyInput):
            spacing_distribution(u, sectors=[diag(ones(6))[:, :1].astype(complex128)])

    def test_invalid_binning(self) -> None:
        with self.assertRaises(InvalidParameterValue):
            spacing_distribution(random_unitary(4, self._rng), bins=0)
