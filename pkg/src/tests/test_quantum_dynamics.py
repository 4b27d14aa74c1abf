from unittest import TestCase

from numpy import abs as np_abs
from numpy import allclose, complex128, diag, eye, kron, zeros
from numpy.linalg import norm, svd
from numpy.testing import assert_allclose, assert_array_equal

from coupledtops.dynamics import (
    BipartiteState,
    CoupledTopParams,
    build_single_floquet,
    coupling_phases,
    floquet_step_density,
    floquet_step_pure,
    iterate_density,
    iterate_pure,
    materialize_ut,
    parity_operator,
    swap_operator,
    symmetry_sector_bases,
    uncoupled_burn_in,
)
from coupledtops.exceptions import DimensionMismatch, DimensionTooLarge, InvalidParameterValue
from coupledtops.settings import EigenBackend
from coupledtops.spin import SpinBasis, rotation_y_quarter
from tests.state_factories import create_rng, packet_mixed_state, packet_product_state, random_bipartite_state


class CoupledTopParamsTest(TestCase):
    def test_second_torsion_defaults_to_first(self) -> None:
        p = CoupledTopParams(j=2.0, k1=6.0, eps=0.1)
        self.assertEqual(p.k2, 6.0)
        self.assertEqual(p.torsion2, 6.0)
        self.assertEqual(CoupledTopParams(j=2.0, k1=6.0, eps=0.1, k2=6.1).torsion2, 6.1)

    def test_invalid_spin(self) -> None:
        for j in (0.0, 1.3):
            with self.assertRaises(InvalidParameterValue):
                CoupledTopParams(j=j, k1=6.0, eps=0.1)


class SingleTopFloquetTest(TestCase):
    def test_zero_torsion_is_the_rotation(self) -> None:
        basis = SpinBasis(4.0)
        assert_array_equal(build_single_floquet(basis, 0.0), rotation_y_quarter(basis))

    def test_unitary(self) -> None:
        u = build_single_floquet(SpinBasis(80.0), 6.0)
        self.assertLess(np_abs(u.conj().T @ u - eye(161)).max(), 1e-12)

    def test_torsions_do_not_compose_additively(self) -> None:
        basis = SpinBasis(1.0)
        product = build_single_floquet(basis, 1.0) @ build_single_floquet(basis, 2.0)
        self.assertFalse(allclose(product, build_single_floquet(basis, 3.0)))


class PureStepTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(10)

    def test_uncoupled_product_stays_product(self) -> None:
        p = CoupledTopParams(j=5.0, k1=6.0, eps=0.0)
        for state in iterate_pure(packet_product_state(p), p, 50):
            s = svd(state.grid, compute_uv=False)
            self.assertLess(s[1], 1e-12)

    def test_kick_count_and_norm(self) -> None:
        p = CoupledTopParams(j=3.0, k1=3.0, eps=0.3, k2=2.0)
        states = list(iterate_pure(random_bipartite_state(7, 7, self._rng), p, 20))
        self.assertEqual([s.kick_count for s in states], list(range(21)))
        self.assertLess(abs(norm(states[-1].grid) - 1.0), 1e-12)

    def test_matches_explicit_floquet_matrix(self) -> None:
        p = CoupledTopParams(j=3.0, k1=6.0, eps=0.7, k2=6.1)
        u = materialize_ut(p)
        for _ in range(10):
            state = random_bipartite_state(7, 7, self._rng)
            assert_allclose(floquet_step_pure(state, p).vector(), u @ state.vector(), atol=1e-11)

    def test_dimension_mismatch(self) -> None:
        p = CoupledTopParams(j=3.0, k1=6.0, eps=0.1)
        with self.assertRaises(DimensionMismatch):
            floquet_step_pure(random_bipartite_state(5, 7, self._rng), p)

    def test_swap_symmetric_state_stays_symmetric(self) -> None:
        p = CoupledTopParams(j=3.0, k1=6.0, eps=0.2)
        state = packet_product_state(p)
        for state in iterate_pure(state, p, 10):
            assert_allclose(state.grid, state.grid.T, atol=1e-12)


class UncoupledBurnInTest(TestCase):
    def test_matches_uncoupled_evolution(self) -> None:
        p = CoupledTopParams(j=5.0, k1=6.0, eps=0.3, k2=6.1)
        uncoupled = CoupledTopParams(j=5.0, k1=6.0, eps=0.0, k2=6.1)
        expected = list(iterate_pure(packet_product_state(p), uncoupled, 12))[-1]
        spread = uncoupled_burn_in(packet_product_state(p), p, 12)
        self.assertEqual(spread.kick_count, 0)
        assert_allclose(spread.grid, expected.grid, atol=1e-13)
        self.assertLess(svd(spread.grid, compute_uv=False)[1], 1e-12)

    def test_zero_kicks_restarts_the_count(self) -> None:
        p = CoupledTopParams(j=2.0, k1=6.0, eps=0.3)
        state = list(iterate_pure(packet_product_state(p), p, 3))[-1]
        restarted = uncoupled_burn_in(state, p, 0)
        self.assertEqual(restarted.kick_count, 0)
        assert_array_equal(restarted.grid, state.grid)

    def test_negative_kicks(self) -> None:
        p = CoupledTopParams(j=2.0, k1=6.0, eps=0.3)
        with self.assertRaises(InvalidParameterValue):
            uncoupled_burn_in(packet_product_state(p), p, -1)


class DensityStepTest(TestCase):
    def setUp(self) -> None:
        self._rng = create_rng(11)

    def test_matches_pure_evolution(self) -> None:
        p = CoupledTopParams(j=2.0, k1=6.0, eps=0.3, k2=5.0)
        pure = random_bipartite_state(5, 5, self._rng)
        rho = pure.density_operator()
        for _ in range(50):
            pure = floquet_step_pure(pure, p)
            rho = floquet_step_density(rho, p)
        assert_allclose(rho.matrix, pure.density_operator().matrix, atol=1e-9)
        self.assertEqual(rho.kick_count, 50)

    def test_uncoupled_pure_product_stays_pure(self) -> None:
        p = CoupledTopParams(j=3.0, k1=6.0, eps=0.0)
        for rho in iterate_density(packet_product_state(p).density_operator(), p, 100):
            self.assertAlmostEqual(rho.purity(), 1.0, places=10)

    def test_trace_and_purity_conserved(self) -> None:
        p = CoupledTopParams(j=3.0, k1=6.0, eps=0.1)
        initial = packet_mixed_state(p)
        final = None
        for final in iterate_density(initial, p, 100):
            pass
        assert final is not None
        self.assertLess(abs(final.matrix.trace() - 1.0), 1e-12)
        self.assertAlmostEqual(final.purity(), initial.purity(), places=10)


class ExplicitFloquetTest(TestCase):
    def test_spin_half_unitary(self) -> None:
        u = materialize_ut(CoupledTopParams(j=0.5, k1=1.0, eps=0.5))
        self.assertEqual(u.shape, (4, 4))
        self.assertLess(np_abs(u.conj().T @ u - eye(4)).max(), 1e-14)

    def test_uncoupled_is_tensor_product(self) -> None:
        p = CoupledTopParams(j=2.0, k1=3.0, eps=0.0, k2=6.0)
        basis = p.basis
        expected = kron(build_single_floquet(basis, 3.0), build_single_floquet(basis, 6.0))
        assert_allclose(materialize_ut(p), expected, atol=1e-15)

    def test_coupling_factor_is_diagonal(self) -> None:
        p = CoupledTopParams(j=2.0, k1=3.0, eps=0.4)
        local = kron(build_single_floquet(p.basis, 3.0), build_single_floquet(p.basis, 3.0))
        coupling = materialize_ut(p) @ local.conj().T
        assert_allclose(coupling, diag(coupling_phases(p.basis, 0.4).reshape(-1)), atol=1e-12)

    def test_coupling_commutes_with_the_kicks(self) -> None:
        rng = create_rng(12)
        for j in (3.0, 3.5):
            with self.subTest(j=j):
                p = CoupledTopParams(j=j, k1=6.0, eps=0.4, k2=6.1)
                basis = p.basis
                rotation = rotation_y_quarter(basis).conj().T
                kick1 = build_single_floquet(basis, p.k1) @ rotation
                kick2 = build_single_floquet(basis, p.torsion2) @ rotation
                assert_allclose(kick1, diag(kick1.diagonal()), atol=1e-12)
                kicks = kron(kick1, kick2)
                coupling = coupling_phases(basis, p.eps).reshape(-1)
                vector = random_bipartite_state(basis.dim, basis.dim, rng).vector()
                coupling_first = kicks @ (coupling * vector)
                kicks_first = coupling * (kicks @ vector)
                self.assertLess(np_abs(coupling_first - kicks_first).max(), 1e-12)

    def test_too_large(self) -> None:
        with self.assertRaises(DimensionTooLarge):
            materialize_ut(CoupledTopParams(j=32.0, k1=6.0, eps=0.1))


class SymmetryTest(TestCase):
    def test_parity_commutes_with_floquet_matrix(self) -> None:
        p = CoupledTopParams(j=2.0, k1=6.0, eps=0.5, k2=6.1)
        u = materialize_ut(p)
        parity = parity_operator(p.basis)
        self.assertLess(np_abs(parity @ u - u @ parity).max(), 1e-10)

    def test_swap_commutes_only_for_equal_torsions(self) -> None:
        equal = CoupledTopParams(j=2.0, k1=6.0, eps=0.5)
        unequal = CoupledTopParams(j=2.0, k1=6.0, eps=0.5, k2=6.1)
        swap = swap_operator(equal.basis)
        u = materialize_ut(equal)
        self.assertLess(np_abs(swap @ u - u @ swap).max(), 1e-10)
        u = materialize_ut(unequal)
        self.assertGreater(np_abs(swap @ u - u @ swap).max(), 1e-3)

    def test_sectors_block_diagonalise(self) -> None:
        for k2, expected_sectors in ((6.1, 2), (6.0, 4)):
            with self.subTest(k2=k2):
                p = CoupledTopParams(j=2.0, k1=6.0, eps=0.5, k2=k2)
                sectors = symmetry_sector_bases(p, EigenBackend.LAPACK)
                self.assertEqual(len(sectors), expected_sectors)
                self.assertEqual(sum(block.shape[1] for block in sectors), 25)
                u = materialize_ut(p)
                for i, a in enumerate(sectors):
                    assert_allclose(a.conj().T @ a, eye(a.shape[1]), atol=1e-10)
                    for b in sectors[i + 1 :]:
                        self.assertLess(np_abs(a.conj().T @ u @ b).max(), 1e-9)

    def test_swap_of_product(self) -> None:
        basis = SpinBasis(1.0)
        a = zeros((3, 3), dtype=complex128)
        a[0, 2] = 1.0
        swapped = swap_operator(basis) @ BipartiteState(grid=a).vector()
        assert_allclose(swapped.reshape(3, 3), a.T)
