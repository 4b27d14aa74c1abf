"""Nearest-neighbour spacings of the eigenangles of the coupled Floquet operator, unfolded within each parity sector,
against the Wigner surmise and the Poisson law. The function defined here is used by the tests module as an
integration test."""

from coupledtops import CoupledTopParams
from coupledtops.dynamics import materialize_ut, symmetry_sector_bases
from coupledtops.rmt import SpacingHistogram, spacing_distribution
from coupledtops.settings import EigenBackend


def spacing_example(
    j: float = 5.0,
    k1: float = 6.0,
    k2: float = 6.1,
    eps: float = 0.5,
    bins: int = 10,
    backend: EigenBackend = EigenBackend.LAPACK,
) -> SpacingHistogram:

    params = CoupledTopParams(j=j, k1=k1, k2=k2, eps=eps)
    sectors = symmetry_sector_bases(params, backend)
    hist = spacing_distribution(materialize_ut(params), bins, sectors=sectors, backend=backend)
    print(f"{hist.spacings.size} spacings from {len(sectors)} sectors, mean {hist.mean_spacing:.3f}")
    wigner, poisson = hist.chi_square_wigner(), hist.chi_square_poisson()
    print(f"chi-square: Wigner {wigner.statistic:.1f}, Poisson {poisson.statistic:.1f}")
    return hist


if __name__ == "__main__":

    from matplotlib.pyplot import bar, legend, plot, show, tight_layout, xlabel, ylabel

    hist = spacing_example()

    width = hist.edges[1] - hist.edges[0]
    centres = hist.edges[:-1] + width / 2
    bar(hist.edges[:-1], hist.counts, width=width, align="edge", alpha=0.5, label="Floquet eigenangles")
    plot(centres, hist.wigner_expected, "k-", label="Wigner surmise")
    plot(centres, hist.poisson_expected, "k:", label="Poisson")
    xlabel("Unfolded spacing")
    ylabel("Count")
    legend()
    tight_layout()
    show()
