"""Entanglement production by two coupled kicked tops started in a product of coherent states. At ε = 1e-2 the
chaotic top (k = 6) saturates at the random-state bound; at ε = 1e-4 the regular tops entangle more than the chaotic
one. The function defined here is used by the tests module as an integration test."""

from typing import Dict, Sequence

from coupledtops import CoupledTopParams, MeasureKind, MeasureSeries, measure_series_pure, product_initial_state
from coupledtops.rmt import rmt_entropy_bound
from coupledtops.settings import DEFAULT_PACKET, EigenBackend
from coupledtops.spin import CoherentParams


def pure_entropy_example(
    j: float = 20.0,
    k_values: Sequence[float] = (1.0, 2.0, 3.0, 6.0),
    eps: float = 0.01,
    n_max: int = 200,
    backend: EigenBackend = EigenBackend.LAPACK,
) -> Dict[float, Dict[MeasureKind, MeasureSeries]]:

    packet = CoherentParams(*DEFAULT_PACKET)
    results = {}
    for k in k_values:
        params = CoupledTopParams(j=j, k1=k, eps=eps)
        initial = product_initial_state(params.basis, packet, packet)
        results[k] = measure_series_pure(params, initial, n_max, backend=backend)
        print(f"k = {k}: S_V({n_max}) = {results[k][MeasureKind.VON_NEUMANN].values[-1]:.4f}")
    return results


if __name__ == "__main__":

    from matplotlib.pyplot import axhline, legend, plot, show, tight_layout, xlabel, ylabel

    j = 20.0
    results = pure_entropy_example(j=j)

    for k, series in results.items():
        entropy = series[MeasureKind.VON_NEUMANN]
        plot(entropy.kicks, entropy.values, label=f"k = {k}")
    axhline(rmt_entropy_bound(int(2 * j + 1), 1.0), color="k", linestyle="--", label="random-state bound")
    xlabel("Kicks")
    ylabel("von Neumann entropy (nats)")
    legend()
    tight_layout()
    show()
