"""Log-negativity of a two-point mixed state on the first top evolving under the coupled kick. The function defined
here is used by the tests module as an integration test."""

from typing import Dict, Sequence

from coupledtops import CoupledTopParams, MeasureSeries, measure_series_mixed, mixed_initial_state
from coupledtops.settings import DEFAULT_MIXED_POINT_B, DEFAULT_MIXTURE_WEIGHT, DEFAULT_PACKET, EigenBackend
from coupledtops.spin import CoherentParams


def mixed_entropy_example(
    j: float = 10.0,
    k_values: Sequence[float] = (1.0, 6.0),
    eps: float = 0.01,
    n_max: int = 100,
    weight: float = DEFAULT_MIXTURE_WEIGHT,
    backend: EigenBackend = EigenBackend.LAPACK,
) -> Dict[float, MeasureSeries]:

    point_a = CoherentParams(*DEFAULT_PACKET)
    point_b = CoherentParams(*DEFAULT_MIXED_POINT_B)
    results = {}
    for k in k_values:
        params = CoupledTopParams(j=j, k1=k, eps=eps)
        initial = mixed_initial_state(params.basis, point_a, point_b, weight, point_a)
        results[k] = measure_series_mixed(params, initial, n_max, backend=backend)
        print(f"k = {k}: E_N({n_max}) = {results[k].values[-1]:.4f}")
    return results


if __name__ == "__main__":

    from matplotlib.pyplot import legend, plot, show, tight_layout, xlabel, ylabel

    for k, series in mixed_entropy_example().items():
        plot(series.kicks, series.values, label=f"k = {k}")
    xlabel("Kicks")
    ylabel("Log-negativity (nats)")
    legend()
    tight_layout()
    show()
