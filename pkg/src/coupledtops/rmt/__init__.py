"""Random-matrix predictions for coupled chaotic tops, and the statistics that test simulations against them.

| Function                       | Prediction or test                                                      |
|--------------------------------|-------------------------------------------------------------------------|
| `mp_density`                   | Eigenvalue density of reduced density matrices of random states         |
| `mp_bin_probabilities`         | Mass of that density in histogram bins                                  |
| `rmt_entropy_bound`            | Saturation value ln(γN) of the von Neumann entropy                      |
| `entropy_bound_by_quadrature`  | The same bound by direct quadrature                                     |
| `p_epsilon_exact`              | Mean coupling phase p(ε), exact double sum                              |
| `p_epsilon_approx`             | Mean coupling phase p(ε), large-j closed form                           |
| `sr_theory_curve`              | Closed-form linear-entropy growth S_R(n)                                |
| `sr_exact_sum`                 | Linear-entropy growth from the exact sums                               |
| `saturation_onset`             | First kick at which a growth curve reaches the random-state plateau     |
| `rdm_eigenvalue_histogram`     | Pooled Schmidt spectra against the density                              |
| `spacing_distribution`         | Unfolded eigenangle spacings against the Wigner surmise and Poisson law |
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from coupledtops.rmt.density import (
    MpDensityParams,
    entropy_bound_by_quadrature,
    mp_bin_probabilities,
    mp_density,
    mp_moment,
    rmt_entropy_bound,
)
from coupledtops.rmt.growth import (
    SrTheoryParams,
    closed_form_bracket,
    coupling_phase_sum,
    p_epsilon_approx,
    p_epsilon_exact,
    saturation_onset,
    sr_exact_curve,
    sr_exact_sum,
    sr_theory_curve,
)
from coupledtops.rmt.statistics import (
    ChiSquare,
    Histogram,
    SpacingHistogram,
    chi_square,
    eigenstate_ensemble,
    poisson_spacing,
    rdm_eigenvalue_histogram,
    spacing_distribution,
    unfolded_spacings,
    wigner_surmise,
)

__all__ = [
    "MpDensityParams",
    "mp_density",
    "mp_moment",
    "mp_bin_probabilities",
    "rmt_entropy_bound",
    "entropy_bound_by_quadrature",
    "SrTheoryParams",
    "p_epsilon_exact",
    "p_epsilon_approx",
    "closed_form_bracket",
    "coupling_phase_sum",
    "sr_theory_curve",
    "sr_exact_sum",
    "sr_exact_curve",
    "saturation_onset",
    "ChiSquare",
    "Histogram",
    "SpacingHistogram",
    "chi_square",
    "rdm_eigenvalue_histogram",
    "eigenstate_ensemble",
    "unfolded_spacings",
    "spacing_distribution",
    "wigner_surmise",
    "poisson_spacing",
]
