"""Phase-space sections of the classical single top at increasing torsion strength: regular tori at k = 1 give way
to a chaotic sea that covers almost the whole sphere at k = 6. The function defined here is used by the tests module
as an integration test."""

from typing import Dict, Sequence, Tuple

from coupledtops.dynamics import SectionGrid, SectionPoints, phase_space_section, sphere_coverage


def phase_space_example(
    k_values: Sequence[float] = (1.0, 2.0, 3.0, 6.0),
    grid_size: Tuple[int, int] = (20, 20),
    iterations: int = 200,
) -> Dict[float, SectionPoints]:
    grid = SectionGrid(n_cos_theta=grid_size[0], n_phi=grid_size[1])
    sections = {k: phase_space_section(k, grid, iterations) for k in k_values}
    for k, points in sections.items():
        print(f"k = {k}: {points.theta.size} points, sphere coverage {sphere_coverage(points.theta, points.phi):.2f}")
    return sections


if __name__ == "__main__":

    from matplotlib.pyplot import show, subplots

    sections = phase_space_example()

    fig, axes = subplots(2, 2, figsize=(9, 7), sharex=True, sharey=True)
    for ax, (k, points) in zip(axes.ravel(), sections.items()):
        ax.plot(points.phi, points.theta, ",", color="k")
        ax.set_title(f"k = {k}")
        ax.set_xlabel("φ (rad)")
        ax.set_ylabel("θ (rad)")
    fig.tight_layout()
    show()
