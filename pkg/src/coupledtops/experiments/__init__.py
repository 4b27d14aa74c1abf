"""Experiment configs, the runner that evaluates them, and the files a run leaves behind.

| Name                  | Purpose                                                                   |
|-----------------------|---------------------------------------------------------------------------|
| `ExperimentConfig`    | Validated experiment description, one dataclass per JSON table            |
| `validate_config`     | Parse and range-check a config file, reporting every violation            |
| `config_from_dict`    | The same for already-parsed JSON                                          |
| `dump_config`         | Write a config that reads back unchanged                                  |
| `load_catalog_config` | Load one of the shipped configs (fig1a ... fig5, spacing)                 |
| `run_experiment`      | Run a config, writing one CSV per series and `manifest.json`              |
| `read_csv`            | Read a CSV written by a run, skipping its comment header                  |
| `main`                | The `coupledtops` command line                                            |

Every CSV starts with `#` comment lines naming the measure, parameters and units, followed by a header row. CSV
bodies depend only on the config; the run id in the manifest is the sha1 of the key-sorted config JSON.
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from coupledtops.experiments.cli import main
from coupledtops.experiments.config import (
    ExperimentConfig,
    catalog_names,
    config_from_dict,
    config_to_dict,
    dump_config,
    load_catalog_config,
    parse_config_text,
    validate_config,
)
from coupledtops.experiments.output import read_csv
from coupledtops.experiments.runner import ExperimentResult, run_experiment

__all__ = [
    "ExperimentConfig",
    "ExperimentResult",
    "validate_config",
    "parse_config_text",
    "config_from_dict",
    "config_to_dict",
    "dump_config",
    "catalog_names",
    "load_catalog_config",
    "run_experiment",
    "read_csv",
    "main",
]
