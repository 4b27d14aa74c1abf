"""Angular-momentum algebra for one spin-j top and the initial states of the coupled tops.

| Name                    | Purpose                                                    |
|-------------------------|------------------------------------------------------------|
| `SpinBasis`             | |j, m⟩ basis, index a ↔ m = j - a                          |
| `CoherentParams`        | (θ₀, φ₀) of a coherent state                               |
| `StateVector`           | Normalised single-top amplitudes                           |
| `jx_matrix` etc.        | Angular-momentum matrices                                  |
| `rotation_y_quarter`    | exp(-i (π/2) J_y) from the Wigner small-d formula          |
| `rotation_y_half`       | exp(-i π J_y), the single-top parity                       |
| `coherent_state`        | SU(2) coherent state                                       |
| `product_initial_state` | Product of two coherent states                             |
| `mixed_initial_state`   | Two-point mixture on top 1 times a coherent state on top 2 |
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from coupledtops.spin.basis import CoherentParams, SpinBasis, StateVector, as_basis
from coupledtops.spin.operators import (
    jx_matrix,
    jy_matrix,
    jz_matrix,
    raising_matrix,
    rotation_y_half,
    rotation_y_quarter,
)
from coupledtops.spin.states import coherent_state, mixed_initial_state, product_initial_state

__all__ = [
    "SpinBasis",
    "CoherentParams",
    "StateVector",
    "as_basis",
    "jx_matrix",
    "jy_matrix",
    "jz_matrix",
    "raising_matrix",
    "rotation_y_quarter",
    "rotation_y_half",
    "coherent_state",
    "product_initial_state",
    "mixed_initial_state",
]
