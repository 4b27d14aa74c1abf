"""Linear entropy of two slightly different chaotic tops (k = 6.0 and 6.1) against the random-matrix growth law, for
three couplings. The function defined here is used by the tests module as an integration test."""

from typing import Dict, Sequence, Tuple

from coupledtops import (
    CoupledTopParams,
    MeasureKind,
    MeasureSeries,
    measure_series_pure,
    product_initial_state,
    uncoupled_burn_in,
)
from coupledtops.rmt import SrTheoryParams, saturation_onset, sr_theory_curve
from coupledtops.settings import DEFAULT_PACKET, DEFAULT_SR_BURN_IN, EigenBackend, PModel
from coupledtops.spin import CoherentParams


def sr_growth_example(
    j: float = 40.0,
    k1: float = 6.0,
    k2: float = 6.1,
    eps_values: Sequence[float] = (1e-4, 1e-3, 1e-2),
    n_max: int = 100,
    burn_in: int = DEFAULT_SR_BURN_IN,
    backend: EigenBackend = EigenBackend.LAPACK,
) -> Dict[float, Tuple[MeasureSeries, MeasureSeries]]:
    """Returns (simulated, predicted) linear-entropy series per coupling. The packet is first spread by `burn_in`
    uncoupled kicks; the simulated series then starts at kick 0 and the prediction at kick 1."""

    packet = CoherentParams(*DEFAULT_PACKET)
    results = {}
    for eps in eps_values:
        params = CoupledTopParams(j=j, k1=k1, k2=k2, eps=eps)
        initial = uncoupled_burn_in(product_initial_state(params.basis, packet, packet), params, burn_in)
        simulated = measure_series_pure(params, initial, n_max, backend=backend)[MeasureKind.LINEAR]
        predicted = sr_theory_curve(SrTheoryParams(N=params.basis.dim, eps=eps), n_max, PModel.EXACT_SUM)
        onset = saturation_onset(predicted, params.basis.dim)
        deviation = abs(simulated.values[1 : onset + 1] - predicted.values[:onset]).max()
        print(f"eps = {eps}: max |simulated - predicted| = {deviation:.4f} for n = 1..{onset}")
        results[eps] = (simulated, predicted)
    return results


if __name__ == "__main__":

    from matplotlib.pyplot import legend, plot, show, tight_layout, xlabel, ylabel

    for eps, (simulated, predicted) in sr_growth_example().items():
        line = plot(simulated.kicks, simulated.values, label=f"ε = {eps:g}")[0]
        plot(predicted.kicks, predicted.values, "--", color=line.get_color())
    xlabel("Kicks")
    ylabel("Linear entropy")
    legend()
    tight_layout()
    show()
