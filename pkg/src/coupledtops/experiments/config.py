"""Experiment configuration: dataclasses mirroring the nested tables of a JSON config file, parsing with every
violation collected, and writing a config back out.

A config file is a JSON object. Only `experiment` is always required; `top.j` is required by every quantum
experiment. For example::

    {
      "experiment": "pure_entropy",
      "top": {"j": 80, "k": [1.0, 2.0, 3.0, 6.0], "eps": 0.01},
      "run": {"n_max": 500, "stride": 1}
    }

`top.k` and `top.eps` take one number or a list; each (k, ε) pair is one sweep point with its own output series.
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import json
import logging
import math
from dataclasses import dataclass, field, fields
from enum import Enum
from importlib.resources import files
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar, Union

from coupledtops.dynamics import CoupledTopParams
from coupledtops.exceptions import ConfigParseError, ExperimentIOError
from coupledtops.settings import (
    DEFAULT_MIXED_POINT_B,
    DEFAULT_MIXTURE_WEIGHT,
    DEFAULT_PACKET,
    DEFAULT_SR_BURN_IN,
    EigenBackend,
    ExperimentKind,
    InitialStateKind,
    PModel,
)

logger = logging.getLogger(__name__)

MEMORY_WARNING_BYTES = 1 << 30
QUANTUM_KINDS = (
    ExperimentKind.PURE_ENTROPY,
    ExperimentKind.MIXED_ENTROPY,
    ExperimentKind.SR_OVERLAY,
    ExperimentKind.RDM_HISTOGRAM,
    ExperimentKind.SPACING,
)

AnglePair = Tuple[float, float]


@dataclass(frozen=True)
class TopSettings:
    """The `top` table: spin and sweep values shared by both tops."""

    j: Optional[float] = None
    """Spin of each top. Required by all quantum experiments; ignored by `phase_space`."""
    k: Tuple[float, ...] = (6.0,)
    """Torsion strengths of top 1 to sweep."""
    eps: Tuple[float, ...] = (0.01,)
    """Coupling strengths to sweep."""
    k2: Optional[float] = None
    """Fixed torsion strength of top 2. When omitted top 2 uses the same k as top 1 at every sweep point."""


@dataclass(frozen=True)
class InitialStateSettings:
    """The `initial_state` table. Angle pairs are (θ₀, φ₀) in radians."""

    kind: InitialStateKind = InitialStateKind.PURE
    top1: AnglePair = DEFAULT_PACKET
    """Coherent packet on top 1, or the first point of the mixture for mixed runs."""
    top2: AnglePair = DEFAULT_PACKET
    """Coherent packet on top 2."""
    mixed_point_b: AnglePair = DEFAULT_MIXED_POINT_B
    """Second point of the mixture on top 1."""
    weight: float = DEFAULT_MIXTURE_WEIGHT
    """Weight of `top1` in the mixture."""


@dataclass(frozen=True)
class RunSettings:
    """The `run` table."""

    n_max: int = 200
    """Number of kicks. Classical iteration counts are set under `section`."""
    stride: int = 1
    """Record a measure every `stride` kicks."""
    eigen_backend: EigenBackend = EigenBackend.JACOBI
    jobs: int = 1
    """Worker threads across sweep points."""


@dataclass(frozen=True)
class OutputSettings:
    """The `output` table."""

    directory: Path = Path("results")
    """Directory receiving the CSVs and the manifest. Created if missing."""
    plot_script: bool = False
    """Also write a matplotlib script that plots the CSVs."""


@dataclass(frozen=True)
class HistogramSettings:
    """The `histogram` table, for `rdm_histogram` experiments."""

    bins: int = 24
    n_start: int = 100
    """First kick pooled."""
    n_stop: int = 600
    """Last kick pooled."""
    sample_every: int = 5
    eigenstate_mode: bool = False
    """Pool the eigenvectors of the explicit Floquet matrix instead of time-evolved states."""


@dataclass(frozen=True)
class SectionSettings:
    """The `section` table, for `phase_space` experiments."""

    grid_size: Tuple[int, int] = (20, 20)
    """Number of (cos θ, φ) grid points. (0, 0) leaves only the listed points."""
    iterations: int = 200
    points: Tuple[AnglePair, ...] = ()
    """Extra initial conditions as (θ, φ) pairs."""


@dataclass(frozen=True)
class SpacingSettings:
    """The `spacing` table, for `spacing` experiments."""

    bins: int = 10
    s_max: float = 3.0
    desymmetrize: bool = True
    """Unfold each parity (and, for k2 = k, swap) sector separately before pooling."""


@dataclass(frozen=True)
class OverlaySettings:
    """The `overlay` table, for `sr_overlay` experiments."""

    p_model: PModel = PModel.EXACT_SUM
    """Which growth-law curve the simulation is compared against in the run summary."""
    simulate: bool = True
    """Include the simulated S_R column. Without it only the theory curves are written."""
    uncoupled_burn_in: int = DEFAULT_SR_BURN_IN
    """Kicks of the uncoupled tops (ε = 0) applied to the initial state before the coupled run starts at n = 0."""


@dataclass(frozen=True)
class BoundSettings:
    """The `bound` table, for `rmt_bound` experiments."""

    N: Tuple[int, ...] = ()
    """Smaller subsystem dimensions. Empty means 2j + 1."""
    Q: Tuple[float, ...] = (1.0,)


@dataclass(frozen=True)
class ExperimentConfig:
    """A complete, validated experiment description."""

    experiment: ExperimentKind
    top: TopSettings = field(default_factory=TopSettings)
    initial_state: InitialStateSettings = field(default_factory=InitialStateSettings)
    run: RunSettings = field(default_factory=RunSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    histogram: HistogramSettings = field(default_factory=HistogramSettings)
    section: SectionSettings = field(default_factory=SectionSettings)
    spacing: SpacingSettings = field(default_factory=SpacingSettings)
    overlay: OverlaySettings = field(default_factory=OverlaySettings)
    bound: BoundSettings = field(default_factory=BoundSettings)

    def sweep_points(self) -> List[CoupledTopParams]:
        """One `CoupledTopParams` per (k, ε) pair, k varying slowest."""
        if self.top.j is None:
            return []
        top = self.top
        return [CoupledTopParams(j=top.j, k1=k, eps=eps, k2=top.k2) for k in top.k for eps in top.eps]


_TABLES: Dict[str, type] = {
    "top": TopSettings,
    "initial_state": InitialStateSettings,
    "run": RunSettings,
    "output": OutputSettings,
    "histogram": HistogramSettings,
    "section": SectionSettings,
    "spacing": SpacingSettings,
    "overlay": OverlaySettings,
    "bound": BoundSettings,
}

T = TypeVar("T")


class _Collector:
    """Accumulates (field path, message) violations while a config is converted."""

    def __init__(self) -> None:
        self.violations: List[Tuple[str, str]] = []

    def add(self, path: str, message: str) -> None:
        self.violations.append((path, message))

    def convert(self, path: str, raw: Any, converter: Callable[[Any], T], default: T) -> T:
        try:
            return converter(raw)
        except (TypeError, ValueError) as e:
            self.add(path, str(e))
            return default


def _number(raw: Any) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise TypeError(f"expected a number, got {raw!r}")
    if not math.isfinite(raw):
        raise ValueError(f"expected a finite number, got {raw!r}")
    return float(raw)


def _integer(raw: Any) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise TypeError(f"expected an integer, got {raw!r}")
    return raw


def _boolean(raw: Any) -> bool:
    if not isinstance(raw, bool):
        raise TypeError(f"expected true or false, got {raw!r}")
    return raw


def _string(raw: Any) -> str:
    if not isinstance(raw, str) or not raw:
        raise TypeError(f"expected a non-empty string, got {raw!r}")
    return raw


def _numbers(raw: Any) -> Tuple[float, ...]:
    values = raw if isinstance(raw, list) else [raw]
    if not values:
        raise ValueError("expected at least one value")
    return tuple(_number(v) for v in values)


def _integers(raw: Any) -> Tuple[int, ...]:
    values = raw if isinstance(raw, list) else [raw]
    return tuple(_integer(v) for v in values)


def _pair(raw: Any) -> AnglePair:
    if not isinstance(raw, list) or len(raw) != 2:
        raise TypeError(f"expected a [theta, phi] pair, got {raw!r}")
    return _number(raw[0]), _number(raw[1])


def _pairs(raw: Any) -> Tuple[AnglePair, ...]:
    if not isinstance(raw, list):
        raise TypeError(f"expected a list of [theta, phi] pairs, got {raw!r}")
    return tuple(_pair(p) for p in raw)


def _grid(raw: Any) -> Tuple[int, int]:
    if isinstance(raw, int) and not isinstance(raw, bool):
        return raw, raw
    if not isinstance(raw, list) or len(raw) != 2:
        raise TypeError(f"expected an integer or an [n_cos_theta, n_phi] pair, got {raw!r}")
    return _integer(raw[0]), _integer(raw[1])


def _enum(enum_type: Any) -> Callable[[Any], Any]:
    def convert(raw: Any) -> Any:
        try:
            return enum_type(raw)
        except ValueError:
            choices = ", ".join(repr(member.value) for member in enum_type)
            raise ValueError(f"expected one of {choices}, got {raw!r}") from None

    return convert


def _optional(converter: Callable[[Any], T]) -> Callable[[Any], Optional[T]]:
    return lambda raw: None if raw is None else converter(raw)


_CONVERTERS: Dict[str, Dict[str, Callable[[Any], Any]]] = {
    "top": {"j": _optional(_number), "k": _numbers, "eps": _numbers, "k2": _optional(_number)},
    "initial_state": {
        "kind": _enum(InitialStateKind),
        "top1": _pair,
        "top2": _pair,
        "mixed_point_b": _pair,
        "weight": _number,
    },
    "run": {"n_max": _integer, "stride": _integer, "eigen_backend": _enum(EigenBackend), "jobs": _integer},
    "output": {"directory": lambda raw: Path(_string(raw)), "plot_script": _boolean},
    "histogram": {
        "bins": _integer,
        "n_start": _integer,
        "n_stop": _integer,
        "sample_every": _integer,
        "eigenstate_mode": _boolean,
    },
    "section": {"grid_size": _grid, "iterations": _integer, "points": _pairs},
    "spacing": {"bins": _integer, "s_max": _number, "desymmetrize": _boolean},
    "overlay": {"p_model": _enum(PModel), "simulate": _boolean, "uncoupled_burn_in": _integer},
    "bound": {"N": _integers, "Q": _numbers},
}


def _table(name: str, raw: Any, collector: _Collector) -> Any:
    table_type = _TABLES[name]
    defaults = table_type()
    if raw is None:
        return defaults
    if not isinstance(raw, dict):
        collector.add(name, f"expected a table, got {raw!r}")
        return defaults
    converters = _CONVERTERS[name]
    for key in raw:
        if key not in converters:
            collector.add(f"{name}.{key}", "unknown field")
    values = {
        key: collector.convert(f"{name}.{key}", raw[key], converter, getattr(defaults, key))
        for key, converter in converters.items()
        if key in raw
    }
    return table_type(**values)


def _check_ranges(cfg: ExperimentConfig, collector: _Collector) -> None:
    kind = cfg.experiment
    top = cfg.top
    already_reported = any(path == "top.j" for path, _ in collector.violations)
    if kind in QUANTUM_KINDS and top.j is None and not already_reported:
        collector.add("top.j", "required field is missing")
    if top.j is not None and (top.j <= 0 or not float(2 * top.j).is_integer()):
        collector.add("top.j", f"must be a positive integer or half-integer, got {top.j}")
    for eps in top.eps:
        if eps < 0:
            collector.add("top.eps", f"coupling strengths must be nonnegative, got {eps}")
    if kind is ExperimentKind.SR_OVERLAY and any(eps == 0 for eps in top.eps):
        collector.add("top.eps", "the growth law needs eps > 0")

    state = cfg.initial_state
    for name in ("top1", "top2", "mixed_point_b"):
        theta, _ = getattr(state, name)
        if not 0.0 <= theta <= math.pi:
            collector.add(f"initial_state.{name}", f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= state.weight <= 1.0:
        collector.add("initial_state.weight", f"must lie in [0, 1], got {state.weight}")
    if kind is ExperimentKind.MIXED_ENTROPY and state.kind is not InitialStateKind.MIXED:
        collector.add("initial_state.kind", "a mixed_entropy experiment needs a mixed initial state")
    if kind in (ExperimentKind.PURE_ENTROPY, ExperimentKind.SR_OVERLAY, ExperimentKind.RDM_HISTOGRAM):
        if state.kind is not InitialStateKind.PURE:
            collector.add("initial_state.kind", f"a {kind.value} experiment needs a pure initial state")

    run = cfg.run
    for name, value in (("n_max", run.n_max), ("stride", run.stride), ("jobs", run.jobs)):
        if value < 1:
            collector.add(f"run.{name}", f"must be at least 1, got {value}")
    if run.stride > run.n_max:
        collector.add("run.stride", f"must not exceed n_max = {run.n_max}, got {run.stride}")

    hist = cfg.histogram
    if hist.bins < 1:
        collector.add("histogram.bins", f"must be at least 1, got {hist.bins}")
    if hist.sample_every < 1:
        collector.add("histogram.sample_every", f"must be at least 1, got {hist.sample_every}")
    if not 0 <= hist.n_start <= hist.n_stop:
        collector.add("histogram.n_start", f"need 0 <= n_start <= n_stop, got {hist.n_start} and {hist.n_stop}")

    section = cfg.section
    if min(section.grid_size) < 0:
        collector.add("section.grid_size", f"grid sizes must be nonnegative, got {section.grid_size}")
    if section.iterations < 0:
        collector.add("section.iterations", f"must be nonnegative, got {section.iterations}")
    if kind is ExperimentKind.PHASE_SPACE and min(section.grid_size) == 0 and not section.points:
        collector.add("section", "no initial conditions: the grid is empty and no points are listed")

    if cfg.overlay.uncoupled_burn_in < 0:
        collector.add("overlay.uncoupled_burn_in", f"must be nonnegative, got {cfg.overlay.uncoupled_burn_in}")

    if cfg.spacing.bins < 1 or not cfg.spacing.s_max > 0:
        collector.add("spacing", f"need bins >= 1 and s_max > 0, got {cfg.spacing.bins} and {cfg.spacing.s_max}")

    bound = cfg.bound
    if kind is ExperimentKind.RMT_BOUND and not bound.N and top.j is None:
        collector.add("bound.N", "give bound.N or top.j")
    for n in bound.N:
        if n < 2:
            collector.add("bound.N", f"dimensions must be at least 2, got {n}")
    for q in bound.Q:
        if q < 1:
            collector.add("bound.Q", f"dimension ratios must be at least 1, got {q}")


def estimate_memory_bytes(cfg: ExperimentConfig) -> int:
    """Rough working-set size of the largest array the experiment allocates."""
    if cfg.top.j is None:
        return 0
    n = int(round(2 * cfg.top.j)) + 1
    d = n * n
    if cfg.experiment is ExperimentKind.MIXED_ENTROPY:
        return 4 * 16 * d * d
    if cfg.experiment is ExperimentKind.SPACING or cfg.histogram.eigenstate_mode:
        return 6 * 16 * d * d
    return 16 * 16 * d


def config_from_dict(data: Any, source: str = "<dict>") -> ExperimentConfig:
    """Builds an `ExperimentConfig` from parsed JSON.

    Raises:
        ConfigParseError: Listing every violation found.
    """
    collector = _Collector()
    if not isinstance(data, dict):
        raise ConfigParseError(source, [("<root>", "expected a JSON object")])
    for key in data:
        if key != "experiment" and key not in _TABLES:
            collector.add(key, "unknown table")
    if "experiment" not in data:
        collector.add("experiment", "required field is missing")
        kind = ExperimentKind.PURE_ENTROPY
    else:
        kind = collector.convert("experiment", data["experiment"], _enum(ExperimentKind), ExperimentKind.PURE_ENTROPY)
    tables = {name: _table(name, data.get(name), collector) for name in _TABLES}
    cfg = ExperimentConfig(experiment=kind, **tables)
    _check_ranges(cfg, collector)
    if collector.violations:
        raise ConfigParseError(source, collector.violations)

    memory = estimate_memory_bytes(cfg)
    if memory > MEMORY_WARNING_BYTES:
        d = (int(round(2 * (cfg.top.j or 0))) + 1) ** 2
        logger.warning(f"{source}: d = {d} needs about {memory / (1 << 30):.1f} GiB of working memory")
    return cfg


def parse_config_text(text: str, source: str = "<string>") -> ExperimentConfig:
    """Parses and validates JSON config text; syntax errors are reported with their line and column."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigParseError(source, [(f"line {e.lineno}, column {e.colno}", e.msg)]) from e
    return config_from_dict(data, source)


def validate_config(path: Union[str, Path]) -> ExperimentConfig:
    """Reads, parses and range-checks a config file.

    Raises:
        ConfigParseError: With every violation found, including JSON syntax errors with their line and column.
        ExperimentIOError: If the file cannot be read.
    """
    config_path = Path(path)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(f"cannot read config {config_path}", e) from e
    return parse_config_text(text, str(config_path))


def _plain(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, Path):
        return value.as_posix()
    if isinstance(value, Enum):
        return value.value
    return value


def config_to_dict(cfg: ExperimentConfig) -> Dict[str, Any]:
    """The config as JSON-compatible data, every field written out."""
    data: Dict[str, Any] = {"experiment": cfg.experiment.value}
    for name in _TABLES:
        table = getattr(cfg, name)
        data[name] = {f.name: _plain(getattr(table, f.name)) for f in fields(table)}
    return data


def canonical_json(cfg: ExperimentConfig) -> str:
    """Compact, key-sorted JSON of the config, the input of the run id."""
    return json.dumps(config_to_dict(cfg), sort_keys=True, separators=(",", ":"))


def dump_config(cfg: ExperimentConfig, path: Union[str, Path]) -> None:
    """Writes the config so that `validate_config` reads back an equal `ExperimentConfig`."""
    config_path = Path(path)
    try:
        config_path.write_text(json.dumps(config_to_dict(cfg), indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(f"cannot write config {config_path}", e) from e


def catalog_names() -> List[str]:
    """Names of the configs shipped with the package, such as fig2a."""
    catalog = files("coupledtops.experiments").joinpath("catalog")
    return sorted(entry.name[: -len(".json")] for entry in catalog.iterdir() if entry.name.endswith(".json"))


def load_catalog_config(name: str) -> ExperimentConfig:
    """Loads a shipped config by name.

    Raises:
        ConfigParseError: If no config of that name ships with the package.
    """
    resource = files("coupledtops.experiments").joinpath("catalog").joinpath(f"{name}.json")
    if not resource.is_file():
        raise ConfigParseError(f"catalog:{name}", [("<catalog>", f"no such config; choose from {catalog_names()}")])
    return parse_config_text(resource.read_text(encoding="utf-8"), f"catalog:{name}")
