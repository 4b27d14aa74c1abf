from enum import Enum

from coupledtops.settings import EigenBackend


class TestEigenBackend(Enum):
    SELF_CONTAINED = 0
    LAPACK = 1


# Set to TestEigenBackend.SELF_CONTAINED to run the long acceptance checks on the cyclic Jacobi kernel end to end.
# TestEigenBackend.LAPACK uses numpy's drivers, which is much faster for the d = 441 partial transposes of the
# mixed-state runs. Unit tests always exercise both backends explicitly.
ACCEPTANCE_EIGEN_BACKEND_MODE = TestEigenBackend.LAPACK
ACCEPTANCE_EIGEN_BACKEND = (
    EigenBackend.LAPACK if ACCEPTANCE_EIGEN_BACKEND_MODE == TestEigenBackend.LAPACK else EigenBackend.JACOBI
)

# Seed of every random state, unitary and Hermitian matrix built by tests/state_factories.py
RANDOM_SEED = 20240917

# Number of random bipartite states used by the measure-identity checks
RANDOM_STATE_COUNT = 100

# Spin of the large pure-state runs (N = 2j + 1 = 161) and of the mixed-state runs (d = 441)
LARGE_SPIN = 80.0
MIXED_SPIN = 10.0

# Initial packet shared by both tops, and the second point of the two-point mixture
PACKET = (0.89, 0.63)
MIXTURE_POINT_B = (2.25, -0.63)
