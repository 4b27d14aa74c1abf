import math
from unittest import TestCase

from numpy import euler_gamma
from scipy.special import sici

from coupledtops.exceptions import DomainError
from coupledtops.numkernel import cos_integral, entire_cos_integral, hyp3f2, log_factorials, sin_integral

SICI_ARGUMENTS = (0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 15.9, 16.0, 16.1, 30.0, 100.0, 1000.0)


class SineCosineIntegralTest(TestCase):
    def test_si_at_zero(self) -> None:
        self.assertEqual(sin_integral(0.0).value, 0.0)

    def test_si_at_one(self) -> None:
        self.assertAlmostEqual(sin_integral(1.0).value, 0.9460830703671830, places=12)

    def test_si_against_scipy(self) -> None:
        for x in SICI_ARGUMENTS:
            with self.subTest(x=x):
                result = sin_integral(x)
                expected, _ = sici(x)
                self.assertLessEqual(abs(result.value - expected), max(result.est_error, 1e-13) + 1e-12)
                self.assertLess(abs(result.value - expected), 1e-9)

    def test_ci_against_scipy(self) -> None:
        for x in SICI_ARGUMENTS:
            with self.subTest(x=x):
                _, expected = sici(x)
                self.assertLess(abs(cos_integral(x).value - expected), 1e-9)

    def test_si_is_odd(self) -> None:
        for x in (0.3, 2.5, 40.0):
            self.assertEqual(sin_integral(-x).value, -sin_integral(x).value)

    def test_si_tends_to_half_pi(self) -> None:
        self.assertAlmostEqual(sin_integral(1e6).value, math.pi / 2, places=5)

    def test_ci_small_argument(self) -> None:
        x = 1e-6
        self.assertLess(abs(cos_integral(x).value - math.log(x) - euler_gamma), 1e-6)

    def test_ci_domain(self) -> None:
        for x in (0.0, -1.0):
            with self.assertRaises(DomainError):
                cos_integral(x)

    def test_entire_cos_integral(self) -> None:
        for x in (0.5, 3.0, 20.0):
            with self.subTest(x=x):
                _, ci = sici(x)
                self.assertAlmostEqual(entire_cos_integral(x).value, euler_gamma + math.log(x) - ci, places=10)
        self.assertAlmostEqual(entire_cos_integral(1e-4).value / 2.5e-9, 1.0, places=7)
        self.assertEqual(entire_cos_integral(0.0).value, 0.0)


class Hyp3F2Test(TestCase):
    def test_zero_argument(self) -> None:
        self.assertEqual(hyp3f2(1.0, 1.0, 1.5, 2.0, 3.0, 0.0).value, 1.0)

    def test_closed_form_at_one(self) -> None:
        result = hyp3f2(1.0, 1.0, 1.5, 2.0, 3.0, 1.0)
        self.assertAlmostEqual(result.value, 8.0 * (math.log(2.0) - 0.5), places=9)

    def test_monotone_in_argument(self) -> None:
        values = [hyp3f2(1.0, 1.0, 1.5, 2.0, 3.0, z).value for z in (0.0, 0.25, 0.5, 0.75, 0.99, 1.0)]
        self.assertEqual(values, sorted(values))

    def test_geometric_special_case(self) -> None:
        # 3F2(1, b, c; b, c; z) = 1/(1 - z)
        self.assertAlmostEqual(hyp3f2(1.0, 2.0, 3.0, 2.0, 3.0, 0.5).value, 2.0, places=13)

    def test_error_estimate_bounds_truncation(self) -> None:
        coarse = hyp3f2(1.0, 1.0, 1.5, 2.0, 3.0, 0.25, tol=1e-8)
        fine = hyp3f2(1.0, 1.0, 1.5, 2.0, 3.0, 0.25, tol=1e-17)
        self.assertLessEqual(abs(coarse.value - fine.value), coarse.est_error)

    def test_domain(self) -> None:
        for args in (
            (1.0, 1.0, 1.5, 2.0, 3.0, 1.5),
            (1.0, 1.0, 1.5, 2.0, 3.0, -0.1),
            (0.0, 1.0, 1.5, 2.0, 3.0, 0.5),
            (1.0, 1.0, 1.0, 1.0, 1.0, 1.0),
        ):
            with self.subTest(args=args):
                with self.assertRaises(DomainError):
                    hyp3f2(*args)


class LogFactorialTest(TestCase):
    def test_values(self) -> None:
        table = log_factorials(10)
        self.assertEqual(table[0], 0.0)
        self.assertAlmostEqual(table[5], math.log(120.0), places=12)
        self.assertAlmostEqual(table[10], math.log(math.factorial(10)), places=10)

    def test_read_only(self) -> None:
        with self.assertRaises(ValueError):
            log_factorials(4)[2] = 1.0
