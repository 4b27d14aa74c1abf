import math
from unittest import TestCase

from numpy import array, asarray, complex128, diag, eye, int64, kron, log, ones, sort, sqrt, zeros
from numpy.linalg import eigvalsh
from numpy.testing import assert_allclose

from coupledtops.dynamics import BipartiteState, CoupledTopParams, DensityOperator
from coupledtops.entanglement import (
    MeasureKind,
    MeasureSeries,
    SchmidtSpectrum,
    linear_entropy,
    log_negativity,
    measure_series_mixed,
    measure_series_pure,
    negativity,
    partial_transpose,
    reduced_density_matrix,
    schmidt_spectrum,
    time_average,
    trace_norm_of_partial_transpose,
    von_neumann,
)
from coupledtops.exceptions import DimensionMismatch, EmptyInput, InvalidParameterValue
from coupledtops.settings import EigenBackend
from tests.state_factories import (
    bell_state,
    create_rng,
    packet_mixed_state,
    packet_product_state,
    random_bipartite_state,
    random_density_operator,
    random_unitary,
)


class SchmidtSpectrumTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(20)

    def test_product_state(self) -> None:
        grid = zeros((3, 4), dtype=complex128)
        grid[1, 2] = 1.0
        assert_allclose(schmidt_spectrum(BipartiteState(grid=grid)).lambdas, [1.0, 0.0, 0.0], atol=1e-14)

    def test_maximally_entangled_qubits(self) -> None:
        assert_allclose(schmidt_spectrum(bell_state()).lambdas, [0.5, 0.5], atol=1e-14)

    def test_matches_reduced_density_matrix(self) -> None:
        for _ in range(20):
            state = random_bipartite_state(7, 7, self._rng)
            lambdas = schmidt_spectrum(state).lambdas
            for subsystem in (1, 2):
                rdm = reduced_density_matrix(state, subsystem)
                assert_allclose(lambdas, sort(eigvalsh(rdm.matrix))[::-1], atol=1e-10)

    def test_rectangular_grid(self) -> None:
        state = random_bipartite_state(3, 5, self._rng)
        self.assertEqual(schmidt_spectrum(state).lambdas.size, 3)
        self.assertEqual(reduced_density_matrix(state, 2).dims, (5, 1))

    def test_clamps_roundoff(self) -> None:
        spectrum = SchmidtSpectrum(array([-1e-13, 1.0 + 1e-13]))
        assert_allclose(spectrum.lambdas, [1.0 + 1e-13, 0.0])

    def test_rejects_invalid_spectra(self) -> None:
        for lambdas in ([1.0 + 1e-9, -1e-9], [0.5, 0.4]):
            with self.assertRaises(InvalidParameterValue):
                SchmidtSpectrum(array(lambdas))

    def test_invalid_subsystem(self) -> None:
        with self.assertRaises(InvalidParameterValue):
            reduced_density_matrix(bell_state(), 3)


class EntropyTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(21)

    def test_pure_product_has_no_entropy(self) -> None:
        spectrum = SchmidtSpectrum(array([1.0, 0.0, 0.0]))
        self.assertEqual(von_neumann(spectrum), 0.0)
        self.assertEqual(linear_entropy(spectrum), 0.0)

    def test_uniform_spectrum(self) -> None:
        for n in (2, 7, 161):
            spectrum = SchmidtSpectrum(ones(n) / n)
            self.assertAlmostEqual(von_neumann(spectrum), math.log(n), places=12)
            self.assertAlmostEqual(linear_entropy(spectrum), 1.0 - 1.0 / n, places=12)

    def test_bell_state(self) -> None:
        self.assertAlmostEqual(von_neumann(schmidt_spectrum(bell_state())), math.log(2.0), places=12)

    def test_bounds(self) -> None:
        for _ in range(20):
            spectrum = schmidt_spectrum(random_bipartite_state(5, 9, self._rng))
            self.assertTrue(0.0 <= von_neumann(spectrum) <= math.log(5) + 1e-12)
            self.assertTrue(0.0 <= linear_entropy(spectrum) <= 1.0 - 1.0 / 5 + 1e-12)

    def test_local_unitary_invariance(self) -> None:
        state = random_bipartite_state(6, 6, self._rng)
        u1, u2 = random_unitary(6, self._rng), random_unitary(6, self._rng)
        rotated = BipartiteState(grid=u1 @ state.grid @ u2.T)
        before, after = schmidt_spectrum(state), schmidt_spectrum(rotated)
        self.assertAlmostEqual(von_neumann(before), von_neumann(after), places=10)
        self.assertAlmostEqual(linear_entropy(before), linear_entropy(after), places=10)


class PartialTransposeTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(22)

    def test_product_operator(self) -> None:
        a = random_density_operator(3, 1, 2, self._rng).matrix
        b = random_density_operator(4, 1, 3, self._rng).matrix
        rho = DensityOperator(matrix=kron(a, b), dims=(3, 4))
        assert_allclose(partial_transpose(rho), kron(a, b.T), atol=1e-15)
        assert_allclose(partial_transpose(rho, subsystem=1), kron(a.T, b), atol=1e-15)

    def test_involution(self) -> None:
        rho = random_density_operator(3, 4, 2, self._rng)
        once = DensityOperator(matrix=partial_transpose(rho), dims=(3, 4))
        assert_allclose(partial_transpose(once), rho.matrix, atol=0.0)

    def test_bell_state_spectrum(self) -> None:
        transposed = partial_transpose(bell_state().density_operator())
        assert_allclose(eigvalsh(transposed), [-0.5, 0.5, 0.5, 0.5], atol=1e-14)

    def test_dims_must_factor_the_operator(self) -> None:
        with self.assertRaises(DimensionMismatch):
            partial_transpose(bell_state().density_operator(), dims=(3, 2))

    def test_either_subsystem_gives_the_same_trace_norm(self) -> None:
        rho = random_density_operator(3, 3, 2, self._rng)
        self.assertAlmostEqual(
            trace_norm_of_partial_transpose(rho, subsystem=1), trace_norm_of_partial_transpose(rho, subsystem=2)
        )


class LogNegativityTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(23)

    def test_product_state(self) -> None:
        grid = zeros((3, 3), dtype=complex128)
        grid[0, 1] = 1.0
        self.assertAlmostEqual(log_negativity(BipartiteState(grid=grid).density_operator()), 0.0, places=12)

    def test_bell_state(self) -> None:
        rho = bell_state().density_operator()
        self.assertAlmostEqual(log_negativity(rho), math.log(2.0), places=10)
        self.assertAlmostEqual(negativity(rho), 0.5, places=10)

    def test_maximally_mixed_state(self) -> None:
        rho = DensityOperator(matrix=eye(9, dtype=complex128) / 9, dims=(3, 3))
        self.assertAlmostEqual(log_negativity(rho), 0.0, places=12)

    def test_pure_state_closed_form(self) -> None:
        for _ in range(10):
            state = random_bipartite_state(5, 5, self._rng)
            lambdas = schmidt_spectrum(state).lambdas
            expected = 2.0 * log(sqrt(lambdas).sum())
            for backend in (EigenBackend.JACOBI, EigenBackend.LAPACK):
                self.assertAlmostEqual(log_negativity(state.density_operator(), backend=backend), expected, places=8)

    def test_nonnegative_for_random_mixtures(self) -> None:
        for _ in range(10):
            self.assertGreater(log_negativity(random_density_operator(3, 3, 4, self._rng)), -1e-12)

    def test_classically_correlated_state(self) -> None:
        rho = DensityOperator(matrix=diag([0.5, 0.0, 0.0, 0.5]).astype(complex128), dims=(2, 2))
        self.assertAlmostEqual(log_negativity(rho), 0.0, places=14)


class MeasureSeriesTest(TestCase):
    def test_uncoupled_run_stays_unentangled(self) -> None:
        p = CoupledTopParams(j=3.0, k1=6.0, eps=0.0)
        series = measure_series_pure(p, packet_product_state(p), 30)
        for kind in (MeasureKind.VON_NEUMANN, MeasureKind.LINEAR):
            self.assertEqual(len(series[kind]), 31)
            assert_allclose(series[kind].values, zeros(31), atol=1e-10)

    def test_stride(self) -> None:
        p = CoupledTopParams(j=2.0, k1=6.0, eps=0.1)
        series = measure_series_pure(p, packet_product_state(p), 10, stride=3)
        assert_allclose(series[MeasureKind.VON_NEUMANN].kicks, [0, 3, 6, 9])

    def test_coupled_run_entangles(self) -> None:
        p = CoupledTopParams(j=3.0, k1=6.0, eps=0.5)
        series = measure_series_pure(p, packet_product_state(p), 40)
        entropy = series[MeasureKind.VON_NEUMANN].values
        self.assertAlmostEqual(entropy[0], 0.0, places=10)
        self.assertGreater(entropy[-1], 0.5)
        self.assertTrue((entropy <= math.log(7) + 1e-10).all())
        self.assertTrue((series[MeasureKind.LINEAR].values <= 1.0 - 1.0 / 7 + 1e-10).all())

    def test_chaotic_run_respects_the_caps_at_every_kick(self) -> None:
        for j in (3.0, 3.5):
            with self.subTest(j=j):
                p = CoupledTopParams(j=j, k1=6.0, eps=1.0, k2=6.1)
                n = p.basis.dim
                series = measure_series_pure(p, packet_product_state(p), 300)
                self.assertLessEqual(series[MeasureKind.VON_NEUMANN].values.max(), math.log(n) + 1e-9)
                self.assertLessEqual(series[MeasureKind.LINEAR].values.max(), 1.0 - 1.0 / n + 1e-9)
                self.assertGreaterEqual(series[MeasureKind.LINEAR].values.min(), -1e-12)

    def test_mixed_run_starts_separable(self) -> None:
        p = CoupledTopParams(j=2.0, k1=6.0, eps=0.5)
        series = measure_series_mixed(p, packet_mixed_state(p), 20, backend=EigenBackend.LAPACK)
        self.assertEqual(series.kind, MeasureKind.LOG_NEGATIVITY)
        self.assertAlmostEqual(series.values[0], 0.0, places=10)
        self.assertTrue((series.values >= -1e-10).all())
        self.assertGreater(series.values.max(), 0.0)

    def test_invalid_run_length(self) -> None:
        p = CoupledTopParams(j=1.0, k1=6.0, eps=0.1)
        for n_max, stride in ((0, 1), (5, 0)):
            with self.assertRaises(InvalidParameterValue):
                measure_series_pure(p, packet_product_state(p), n_max, stride)

    def test_series_validation(self) -> None:
        kicks = asarray([0, 1, 2], dtype=int64)
        with self.assertRaises(DimensionMismatch):
            MeasureSeries(MeasureKind.LINEAR, kicks, asarray([0.0, 0.1]))
        with self.assertRaises(InvalidParameterValue):
            MeasureSeries(MeasureKind.LINEAR, asarray([0, 2, 1], dtype=int64), asarray([0.0, 0.1, 0.2]))
        with self.assertRaises(InvalidParameterValue):
            MeasureSeries(MeasureKind.LINEAR, kicks, asarray([0.0, math.nan, 0.2]))

    def test_time_average(self) -> None:
        kicks = asarray([0, 2, 4, 6], dtype=int64)
        series = MeasureSeries(MeasureKind.VON_NEUMANN, kicks, asarray([0.0, 1.0, 2.0, 3.0]))
        self.assertEqual(time_average(series, 2, 4), 1.5)
        self.assertEqual(time_average(series, 0, 100), 1.5)
        with self.assertRaises(EmptyInput):
            time_average(series, 7, 10)
