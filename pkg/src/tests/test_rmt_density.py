import math
from unittest import TestCase

from numpy import linspace
from scipy.integrate import quad

from coupledtops.exceptions import DomainError, InvalidParameterValue
from coupledtops.rmt import (
    MpDensityParams,
    entropy_bound_by_quadrature,
    mp_bin_probabilities,
    mp_density,
    mp_moment,
    rmt_entropy_bound,
)


class MpDensityTest(TestCase):
    def test_support_edges(self) -> None:
        p = MpDensityParams(N=10, Q=4.0)
        self.assertAlmostEqual(p.lambda_min, (1.0 + 0.25 - 1.0) / 10, places=15)
        self.assertAlmostEqual(p.lambda_max, (1.0 + 0.25 + 1.0) / 10, places=15)
        self.assertEqual(MpDensityParams(N=33, Q=1.0).lambda_min, 0.0)

    def test_from_dims(self) -> None:
        p = MpDensityParams.from_dims(20, 5)
        self.assertEqual((p.N, p.Q), (5, 4.0))

    def test_invalid_parameters(self) -> None:
        for n, q in ((0, 1.0), (5, 0.5), (5, math.inf)):
            with self.assertRaises(InvalidParameterValue):
                MpDensityParams(N=n, Q=q)

    def test_zero_outside_support(self) -> None:
        p = MpDensityParams(N=10, Q=4.0)
        for lam in (0.0, p.lambda_min, p.lambda_max, 1.0):
            self.assertEqual(mp_density(p, lam), 0.0)
        self.assertGreater(mp_density(p, 0.1), 0.0)

    def test_moments(self) -> None:
        for n, q in ((33, 1.0), (10, 4.0), (161, 1.5)):
            with self.subTest(N=n, Q=q):
                p = MpDensityParams(N=n, Q=q)
                self.assertAlmostEqual(mp_moment(p, 0), 1.0, places=8)
                self.assertAlmostEqual(mp_moment(p, 1) * n, 1.0, places=8)

    def test_normalised_by_independent_quadrature(self) -> None:
        p = MpDensityParams(N=10, Q=4.0)
        total, _ = quad(lambda lam: mp_density(p, lam), p.lambda_min, p.lambda_max, limit=200)
        self.assertAlmostEqual(total, 1.0, places=7)

    def test_bin_probabilities(self) -> None:
        p = MpDensityParams(N=16, Q=1.0)
        edges = linspace(0.0, 1.2 * p.lambda_max, 25)
        probabilities = mp_bin_probabilities(p, edges)
        self.assertAlmostEqual(probabilities.sum(), 1.0, places=8)
        self.assertLess(probabilities[20:].sum(), 1e-12)
        self.assertTrue((probabilities[:20] > 0.0).all())


class EntropyBoundTest(TestCase):
    def test_equal_dimensions(self) -> None:
        for n in (10, 161, 1000):
            self.assertAlmostEqual(rmt_entropy_bound(n, 1.0), math.log(n) - 0.5, places=9)

    def test_spin_eighty(self) -> None:
        self.assertAlmostEqual(rmt_entropy_bound(161, 1.0), 4.5814, places=4)

    def test_matches_large_dimension_limit(self) -> None:
        # ln N - 1/(2Q) for every Q >= 1
        for q in (1.0, 1.5, 2.0, 4.0, 10.0, 100.0):
            self.assertAlmostEqual(rmt_entropy_bound(33, q), math.log(33) - 0.5 / q, places=9)

    def test_very_unequal_dimensions(self) -> None:
        self.assertLess(abs(rmt_entropy_bound(161, 1e4) - math.log(161)), 1e-3)

    def test_increases_with_ratio(self) -> None:
        bounds = [rmt_entropy_bound(33, q) for q in linspace(1.0, 100.0, 25)]
        self.assertTrue(all(b < c for b, c in zip(bounds, bounds[1:])))

    def test_agrees_with_quadrature(self) -> None:
        for n, q in ((33, 1.0), (33, 2.5), (100, 10.0)):
            with self.subTest(N=n, Q=q):
                self.assertAlmostEqual(rmt_entropy_bound(n, q), entropy_bound_by_quadrature(n, q), places=7)

    def test_domain(self) -> None:
        for n, q in ((1, 1.0), (10, 0.5)):
            with self.assertRaises(DomainError):
                rmt_entropy_bound(n, q)
