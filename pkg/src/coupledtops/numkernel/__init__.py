"""Self-contained dense complex linear algebra and special functions.

All routines are pure functions of their inputs and may be called from many threads at once.

| Function                | Purpose                                                               |
|-------------------------|-----------------------------------------------------------------------|
| `hermitian_eig`         | Eigendecomposition of a Hermitian matrix (cyclic Jacobi or LAPACK)    |
| `svd`                   | Thin SVD, via the Gram matrix for N ≤ 256                             |
| `singular_values`       | Singular values only                                                  |
| `unitary_eigenangles`   | Eigenangles of a unitary matrix                                       |
| `unitary_eigensystem`   | Eigenangles and eigenvectors of a unitary matrix                      |
| `log_factorials`        | Table of ln(n!)                                                       |
| `sin_integral`          | Si(x)                                                                 |
| `cos_integral`          | Ci(x)                                                                 |
| `entire_cos_integral`   | Cin(x) = γ + ln x - Ci(x)                                             |
| `hyp3f2`                | 3F2(a1, a2, a3; b1, b2; z) for 0 ≤ z ≤ 1                              |
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from coupledtops.numkernel.linalg import (
    ComplexMatrix,
    HermitianSpectrum,
    as_complex_matrix,
    hermitian_eig,
    singular_values,
    svd,
    unitary_eigenangles,
    unitary_eigensystem,
)
from coupledtops.numkernel.special import (
    SpecialFnValue,
    cos_integral,
    entire_cos_integral,
    hyp3f2,
    log_factorials,
    sin_integral,
)

__all__ = [
    "ComplexMatrix",
    "HermitianSpectrum",
    "SpecialFnValue",
    "as_complex_matrix",
    "hermitian_eig",
    "svd",
    "singular_values",
    "unitary_eigenangles",
    "unitary_eigensystem",
    "log_factorials",
    "sin_integral",
    "cos_integral",
    "entire_cos_integral",
    "hyp3f2",
]
