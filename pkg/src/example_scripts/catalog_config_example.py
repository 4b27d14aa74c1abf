"""Runs one of the configs shipped with the package, with a few fields overridden, and reads back the CSVs it wrote.
The function defined here is used by the tests module as an integration test."""

from dataclasses import replace
from pathlib import Path
from typing import Dict, Optional

from pandas import DataFrame

from coupledtops.experiments import load_catalog_config, read_csv, run_experiment
from coupledtops.experiments.config import OutputSettings
from coupledtops.settings import EigenBackend


def catalog_config_example(
    name: str, output_directory: Path, j: Optional[float] = None, n_max: int = 50
) -> Dict[str, DataFrame]:

    cfg = load_catalog_config(name)
    cfg = replace(
        cfg,
        top=replace(cfg.top, j=cfg.top.j if j is None else j),
        run=replace(cfg.run, n_max=n_max, eigen_backend=EigenBackend.LAPACK),
        output=OutputSettings(directory=output_directory, plot_script=True),
    )
    result = run_experiment(cfg)
    print(f"run {result.kind.value} wrote {len(result.csv_files)} CSV file(s) and {result.manifest}")
    return {path.name: read_csv(path) for path in result.csv_files}


if __name__ == "__main__":

    from matplotlib.pyplot import legend, plot, show, tight_layout, xlabel

    tables = catalog_config_example("fig2a", Path("results/example_fig2a"), j=20.0)
    for name, frame in tables.items():
        plot(frame["n"], frame["S_V"], label=name)
    xlabel("Kicks")
    legend(fontsize="small")
    tight_layout()
    show()
