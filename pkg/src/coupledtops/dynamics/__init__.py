"""Quantum and classical dynamics of two coupled kicked tops.

| Name                     | Purpose                                                         |
|--------------------------|-----------------------------------------------------------------|
| `CoupledTopParams`       | (j, k1, k2, ε) of the Floquet operator                          |
| `BipartiteState`         | Pure state as an N×N amplitude grid                             |
| `DensityOperator`        | Density matrix on the composite space                           |
| `build_single_floquet`   | Single-top factor U = kick · rotation                           |
| `floquet_step_pure`      | One kick of a pure state, never forming U_T                     |
| `floquet_step_density`   | One kick of a density operator, never forming U_T               |
| `materialize_ut`         | Explicit U_T for spectral statistics (d ≤ 4096)                 |
| `uncoupled_burn_in`      | Evolves with ε = 0, then restarts the kick count                |
| `symmetry_sector_bases`  | Invariant subspaces of U_T (parity, and swap when k1 = k2)      |
| `single_map_step`        | Classical single-top map                                        |
| `coupled_map_step`       | Classical coupled-top map                                       |
| `phase_space_section`    | (θ, φ) section of the single-top map                            |
| `sphere_coverage`        | Fraction of equal-area sphere cells visited                     |
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from coupledtops.dynamics.classical import (
    ClassicalPairState,
    ClassicalTopState,
    SectionGrid,
    SectionPoints,
    coupled_map_step,
    iterate_coupled,
    iterate_single,
    phase_space_section,
    single_map_step,
    sphere_coverage,
)
from coupledtops.dynamics.quantum import (
    CoupledTopParams,
    FloquetFactors,
    build_single_floquet,
    coupling_phases,
    floquet_factors,
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
from coupledtops.dynamics.states import BipartiteState, DensityOperator

__all__ = [
    "BipartiteState",
    "DensityOperator",
    "CoupledTopParams",
    "FloquetFactors",
    "build_single_floquet",
    "coupling_phases",
    "floquet_factors",
    "floquet_step_pure",
    "floquet_step_density",
    "iterate_pure",
    "iterate_density",
    "uncoupled_burn_in",
    "materialize_ut",
    "parity_operator",
    "swap_operator",
    "symmetry_sector_bases",
    "ClassicalTopState",
    "ClassicalPairState",
    "SectionGrid",
    "SectionPoints",
    "single_map_step",
    "coupled_map_step",
    "iterate_single",
    "iterate_coupled",
    "phase_space_section",
    "sphere_coverage",
]
