"""Eigenvalues of the reduced density matrices of strongly chaotic time-evolved states, pooled over many kicks and
compared with the density expected for random states. The function defined here is used by the tests module as an
integration test."""

from coupledtops import CoupledTopParams, iterate_pure, product_initial_state
from coupledtops.rmt import Histogram, rdm_eigenvalue_histogram
from coupledtops.settings import DEFAULT_PACKET, EigenBackend
from coupledtops.spin import CoherentParams


def rdm_histogram_example(
    j: float = 16.0,
    k: float = 6.0,
    eps: float = 0.1,
    n_start: int = 100,
    n_stop: int = 600,
    sample_every: int = 5,
    bins: int = 24,
    backend: EigenBackend = EigenBackend.JACOBI,
) -> Histogram:

    params = CoupledTopParams(j=j, k1=k, eps=eps)
    packet = CoherentParams(*DEFAULT_PACKET)
    initial = product_initial_state(params.basis, packet, packet)
    states = [
        s for s in iterate_pure(initial, params, n_stop) if s.kick_count >= n_start and s.kick_count % sample_every == 0
    ]
    hist = rdm_eigenvalue_histogram(states, bins, backend)
    chi = hist.chi_square()
    print(f"{len(states)} states, {hist.total} eigenvalues")
    print(f"outside support: {100 * hist.outside_fraction:.2f}%")
    print(f"chi-square per bin {chi.per_bin:.2f} over {chi.bins_used} bins")
    return hist


if __name__ == "__main__":

    from matplotlib.pyplot import bar, legend, plot, show, tight_layout, xlabel, ylabel

    hist = rdm_histogram_example()

    width = hist.bin_high - hist.bin_low
    bar(hist.bin_low, hist.counts, width=width, align="edge", alpha=0.5, label="simulation")
    plot(hist.bin_low + width / 2, hist.expected, "k-", label="random states")
    xlabel("Eigenvalue of the reduced density matrix")
    ylabel("Count")
    legend()
    tight_layout()
    show()
