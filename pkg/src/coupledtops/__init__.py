"""
Entanglement production in two coupled quantum kicked tops, and the random-matrix predictions it is compared with.

`coupledtops` evolves pure and mixed states of two spin-j tops under a Floquet operator made of a single-top kick
on each top followed by a J_z·J_z coupling kick. It never forms the d×d Floquet matrix for time evolution; each kick
is applied as two N×N products and a diagonal phase, so j = 80 (d = 25921) runs on a desktop.

### Simulation
| Name                       | Purpose                                                          |
|----------------------------|------------------------------------------------------------------|
| `CoupledTopParams`         | (j, k1, k2, ε) of the coupled tops                               |
| `product_initial_state`    | Product of two SU(2) coherent states                             |
| `mixed_initial_state`      | Two-point mixture on top 1 times a coherent state on top 2       |
| `iterate_pure`             | Kick-by-kick evolution of a pure state                           |
| `iterate_density`          | Kick-by-kick evolution of a density operator                     |
| `uncoupled_burn_in`        | Spreads a product state under the uncoupled tops before coupling |
| `phase_space_section`      | Classical single-top section in (θ, φ)                           |

### Entanglement
| Name                       | Purpose                                                          |
|----------------------------|------------------------------------------------------------------|
| `schmidt_spectrum`         | Squared Schmidt coefficients of a pure state                     |
| `von_neumann`              | S_V = -Σ λ ln λ                                                  |
| `linear_entropy`           | S_R = 1 - Σ λ²                                                   |
| `log_negativity`           | E_N = ln ‖ρ^T₂‖₁                                                 |
| `measure_series_pure`      | S_V and S_R against kick number                                  |
| `measure_series_mixed`     | E_N against kick number                                          |

### Submodules
* `coupledtops.numkernel`: self-contained eigensolvers, SVD and special functions.
* `coupledtops.spin`: angular-momentum matrices, rotations and coherent states.
* `coupledtops.dynamics`: quantum and classical maps, symmetry sectors.
* `coupledtops.rmt`: random-matrix predictions and the statistics that test simulations against them.
* `coupledtops.experiments`: JSON experiment configs, the runner, CSV output and the `coupledtops` command.
* `coupledtops.settings`: Enums and default constants.

### Reference Documentation
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from importlib.metadata import PackageNotFoundError, version

from .dynamics import CoupledTopParams, iterate_density, iterate_pure, phase_space_section, uncoupled_burn_in
from .entanglement import (
    MeasureKind,
    MeasureSeries,
    SchmidtSpectrum,
    linear_entropy,
    log_negativity,
    measure_series_mixed,
    measure_series_pure,
    schmidt_spectrum,
    von_neumann,
)
from .spin import mixed_initial_state, product_initial_state

__all__ = [
    "CoupledTopParams",
    "product_initial_state",
    "mixed_initial_state",
    "iterate_pure",
    "iterate_density",
    "uncoupled_burn_in",
    "phase_space_section",
    "SchmidtSpectrum",
    "MeasureKind",
    "MeasureSeries",
    "schmidt_spectrum",
    "von_neumann",
    "linear_entropy",
    "log_negativity",
    "measure_series_pure",
    "measure_series_mixed",
    "numkernel",
    "spin",
    "dynamics",
    "rmt",
    "experiments",
    "settings",
]

try:
    __version__ = version("coupledtops")
except PackageNotFoundError:
    __version__ = "unknown"
