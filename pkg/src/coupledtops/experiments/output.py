"""Writes experiment artifacts: CSV tables with `#` comment headers, the run manifest, and optional plot scripts.

CSV bodies depend only on the config, so reruns are byte-identical; timestamps live in the manifest alone.
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import hashlib
import json
import logging
import platform
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Dict, List, Sequence

import numpy
import pandas
import scipy
from pandas import DataFrame

from coupledtops.exceptions import ExperimentIOError

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"
FLOAT_FORMAT = "%.12g"


@dataclass(frozen=True, eq=False)
class CsvArtifact:
    """One output table, prior to writing."""

    name: str
    """File name, including the .csv extension."""
    frame: DataFrame = field(repr=False)
    comments: Sequence[str] = ()
    """Lines written above the column header, each prefixed with "# "."""
    x_column: str = "n"
    """Column plotted along the horizontal axis by the plot script."""
    y_columns: Sequence[str] = ()
    """Columns plotted against `x_column`. Empty means every other column."""
    scatter: bool = False
    """Plot points rather than lines."""


@dataclass
class RunManifest:
    """Provenance of one experiment run."""

    config: Dict[str, object]
    run_id: str
    """sha1 of the canonical config JSON."""
    started_utc: str
    finished_utc: str = ""
    versions: Dict[str, str] = field(default_factory=dict)
    outputs: Dict[str, str] = field(default_factory=dict)
    """sha256 of each CSV, by file name."""
    summary: Dict[str, float] = field(default_factory=dict)


def run_id_for(canonical_config: str) -> str:
    return hashlib.sha1(canonical_config.encode("utf-8")).hexdigest()


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def package_version() -> str:
    try:
        return version("coupledtops")
    except PackageNotFoundError:
        return "unknown"


def library_versions() -> Dict[str, str]:
    return {
        "coupledtops": package_version(),
        "numpy": numpy.__version__,
        "scipy": scipy.__version__,
        "pandas": pandas.__version__,
        "python": platform.python_version(),
    }


def ensure_directory(directory: Path) -> None:
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ExperimentIOError(f"cannot create output directory {directory}", e) from e


def write_csv(directory: Path, artifact: CsvArtifact) -> str:
    """Writes the table as UTF-8 with LF line endings and returns the sha256 of the file."""
    path = directory / artifact.name
    try:
        with path.open("w", encoding="utf-8", newline="") as handle:
            for comment in artifact.comments:
                handle.write(f"# {comment}\n")
            artifact.frame.to_csv(handle, index=False, lineterminator="\n", float_format=FLOAT_FORMAT)
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
    except OSError as e:
        raise ExperimentIOError(f"cannot write {path}", e) from e
    logger.info(f"wrote {path} ({len(artifact.frame)} rows)")
    return digest


def write_manifest(directory: Path, manifest: RunManifest) -> Path:
    path = directory / MANIFEST_NAME
    body = {
        "run_id": manifest.run_id,
        "started_utc": manifest.started_utc,
        "finished_utc": manifest.finished_utc,
        "versions": manifest.versions,
        "config": manifest.config,
        "outputs": manifest.outputs,
        "summary": manifest.summary,
    }
    try:
        path.write_text(json.dumps(body, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(f"cannot write {path}", e) from e
    return path


def read_csv(path: Path) -> DataFrame:
    """Reads a CSV written by `write_csv`, skipping its comment header."""
    try:
        return pandas.read_csv(path, comment="#")
    except OSError as e:
        raise ExperimentIOError(f"cannot read {path}", e) from e


_PLOT_TEMPLATE = '''"""Plots the CSVs of experiment run {run_id}. Generated by coupledtops; edit freely."""
from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd

HERE = Path(__file__).parent
TABLES = {tables!r}


def main() -> None:
    fig, axes = plt.subplots(len(TABLES), 1, figsize=(7, 3.5 * len(TABLES)), squeeze=False)
    for ax, (name, x_column, y_columns, scatter) in zip(axes[:, 0], TABLES):
        frame = pd.read_csv(HERE / name, comment="#")
        for column in y_columns or [c for c in frame.columns if c != x_column]:
            if scatter:
                ax.plot(frame[x_column], frame[column], ",", label=column)
            else:
                ax.plot(frame[x_column], frame[column], label=column)
        ax.set_xlabel(x_column)
        ax.set_title(name)
        ax.legend(fontsize="small")
    fig.tight_layout()
    plt.show()


if __name__ == "__main__":
    main()
'''


def write_plot_script(directory: Path, run_id: str, artifacts: Sequence[CsvArtifact]) -> Path:
    """Writes plot_results.py, which draws every column of each CSV against its x column."""
    tables: List[tuple] = [(a.name, a.x_column, list(a.y_columns), a.scatter) for a in artifacts]
    path = directory / "plot_results.py"
    try:
        path.write_text(_PLOT_TEMPLATE.format(run_id=run_id[:10], tables=tables), encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(f"cannot write {path}", e) from e
    return path
