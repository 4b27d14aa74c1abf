"""Runs one configured experiment: evaluates every sweep point, writes a CSV per series and a manifest."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence, Tuple, TypeVar

from numpy import arange, asarray, int64, log
from pandas import DataFrame

from coupledtops.dynamics import (
    CoupledTopParams,
    SectionGrid,
    iterate_pure,
    materialize_ut,
    phase_space_section,
    sphere_coverage,
    symmetry_sector_bases,
    uncoupled_burn_in,
)
from coupledtops.entanglement import MeasureKind, measure_series_mixed, measure_series_pure
from coupledtops.exceptions import DimensionTooLarge
from coupledtops.experiments.config import ExperimentConfig, canonical_json, config_to_dict, estimate_memory_bytes
from coupledtops.experiments.output import (
    CsvArtifact,
    RunManifest,
    ensure_directory,
    library_versions,
    run_id_for,
    utc_timestamp,
    write_csv,
    write_manifest,
    write_plot_script,
)
from coupledtops.rmt import (
    SrTheoryParams,
    eigenstate_ensemble,
    entropy_bound_by_quadrature,
    rdm_eigenvalue_histogram,
    rmt_entropy_bound,
    saturation_onset,
    spacing_distribution,
    sr_exact_curve,
    sr_theory_curve,
)
from coupledtops.rmt.growth import EXACT_SUM_MAX_DIM
from coupledtops.settings import ExperimentKind, PModel
from coupledtops.spin import CoherentParams, mixed_initial_state, product_initial_state

logger = logging.getLogger(__name__)

MEMORY_LIMIT_BYTES = 8 << 30

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class ExperimentResult:
    """What a run left on disk."""

    kind: ExperimentKind
    directory: Path
    csv_files: List[Path] = field(default_factory=list)
    manifest: Path = Path()
    summary: Dict[str, float] = field(default_factory=dict)
    """Headline numbers per series, also recorded in the manifest."""


@dataclass
class _PointOutput:
    artifacts: List[CsvArtifact]
    summary: Dict[str, float]


def _tag(value: float) -> str:
    return f"{value:g}"


def _point_tag(p: CoupledTopParams) -> str:
    tag = f"k{_tag(p.k1)}"
    if p.torsion2 != p.k1:
        tag += f"_k2{_tag(p.torsion2)}"
    return f"{tag}_eps{_tag(p.eps)}_j{_tag(p.j)}"


def _params_comment(p: CoupledTopParams) -> str:
    return f"params: j={p.j:g} k1={p.k1:g} k2={p.torsion2:g} eps={p.eps:g}"


def _map(jobs: int, function: Callable[[T], R], items: Sequence[T]) -> List[R]:
    """Order-preserving map over sweep points, across `jobs` worker threads."""
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(function, items))


def _angles(pair: Tuple[float, float]) -> CoherentParams:
    return CoherentParams(theta0=pair[0], phi0=pair[1])


def _phase_space(cfg: ExperimentConfig) -> List[_PointOutput]:
    section = cfg.section
    grid = SectionGrid(n_cos_theta=section.grid_size[0], n_phi=section.grid_size[1], points=section.points)

    def run(k: float) -> _PointOutput:
        points = phase_space_section(k, grid, section.iterations)
        frame = DataFrame(
            {"orbit_id": points.orbit_id, "iter": points.iteration, "theta": points.theta, "phi": points.phi}
        )
        coverage = sphere_coverage(points.theta, points.phi)
        artifact = CsvArtifact(
            name=f"phase_space_k{_tag(k)}.csv",
            frame=frame,
            comments=(
                "measure: classical single-top section, theta = arccos Z, phi = atan2(Y, X)",
                f"params: k={k:g} iterations={section.iterations} grid={section.grid_size[0]}x{section.grid_size[1]}",
                "units: theta [rad], phi [rad]",
            ),
            x_column="phi",
            y_columns=("theta",),
            scatter=True,
        )
        return _PointOutput([artifact], {f"coverage_k{_tag(k)}": coverage})

    return _map(cfg.run.jobs, run, list(cfg.top.k))


def _pure_entropy(cfg: ExperimentConfig) -> List[_PointOutput]:
    state_settings = cfg.initial_state

    def run(p: CoupledTopParams) -> _PointOutput:
        initial = product_initial_state(p.basis, _angles(state_settings.top1), _angles(state_settings.top2))
        series = measure_series_pure(p, initial, cfg.run.n_max, cfg.run.stride, cfg.run.eigen_backend)
        entropy = series[MeasureKind.VON_NEUMANN]
        frame = DataFrame({"n": entropy.kicks, "S_V": entropy.values, "S_R": series[MeasureKind.LINEAR].values})
        tag = _point_tag(p)
        artifact = CsvArtifact(
            name=f"pure_{tag}.csv",
            frame=frame,
            comments=(
                "measure: S_V von Neumann entropy, S_R linear entropy of the reduced state",
                _params_comment(p),
                "units: n [kicks], S_V [nats], S_R [dimensionless]",
            ),
        )
        return _PointOutput([artifact], {f"S_V_final_{tag}": float(entropy.values[-1])})

    return _map(cfg.run.jobs, run, cfg.sweep_points())


def _mixed_entropy(cfg: ExperimentConfig) -> List[_PointOutput]:
    state_settings = cfg.initial_state
    memory = estimate_memory_bytes(cfg)
    if memory > MEMORY_LIMIT_BYTES:
        raise DimensionTooLarge(f"mixed-state evolution would need about {memory / (1 << 30):.1f} GiB")

    def run(p: CoupledTopParams) -> _PointOutput:
        initial = mixed_initial_state(
            p.basis,
            _angles(state_settings.top1),
            _angles(state_settings.mixed_point_b),
            state_settings.weight,
            _angles(state_settings.top2),
        )
        series = measure_series_mixed(p, initial, cfg.run.n_max, cfg.run.stride, cfg.run.eigen_backend)
        tag = _point_tag(p)
        artifact = CsvArtifact(
            name=f"mixed_{tag}.csv",
            frame=DataFrame({"n": series.kicks, "E_N": series.values}),
            comments=(
                "measure: E_N log-negativity of the evolving two-point mixed state",
                _params_comment(p) + f" weight={state_settings.weight:g}",
                "units: n [kicks], E_N [nats]",
            ),
        )
        return _PointOutput([artifact], {f"E_N_final_{tag}": float(series.values[-1])})

    return _map(cfg.run.jobs, run, cfg.sweep_points())


def _rmt_bound(cfg: ExperimentConfig) -> List[_PointOutput]:
    dims = cfg.bound.N or (int(round(2 * (cfg.top.j or 0))) + 1,)
    rows = [(n, q) for n in dims for q in cfg.bound.Q]
    bounds = [rmt_entropy_bound(n, q) for n, q in rows]
    quadrature = [entropy_bound_by_quadrature(n, q) for n, q in rows]
    frame = DataFrame(
        {
            "N": asarray([n for n, _ in rows], dtype=int64),
            "Q": [q for _, q in rows],
            "S_V_bound": bounds,
            "S_V_bound_quadrature": quadrature,
            "ln_N": log(asarray([n for n, _ in rows], dtype=float)),
        }
    )
    artifact = CsvArtifact(
        name="rmt_bound.csv",
        frame=frame,
        comments=(
            "measure: saturation bound ln(gamma N) of S_V for random states, closed form and quadrature",
            f"params: N={list(dims)} Q={list(cfg.bound.Q)}",
            "units: S_V_bound [nats], S_V_bound_quadrature [nats], ln_N [nats]",
        ),
        x_column="Q",
        y_columns=("S_V_bound", "S_V_bound_quadrature"),
    )
    summary = {f"bound_N{n}_Q{_tag(q)}": b for (n, q), b in zip(rows, bounds)}
    return [_PointOutput([artifact], summary)]


def _sr_overlay(cfg: ExperimentConfig) -> List[_PointOutput]:
    overlay = cfg.overlay
    n_max = cfg.run.n_max

    def run(p: CoupledTopParams) -> _PointOutput:
        theory = SrTheoryParams(N=p.basis.dim, eps=p.eps)
        curves = {
            "S_R_closed_form": sr_theory_curve(theory, n_max, PModel.CLOSED_FORM),
            "S_R_exact_p": sr_theory_curve(theory, n_max, PModel.EXACT_SUM),
        }
        if theory.N <= EXACT_SUM_MAX_DIM:
            curves["S_R_exact_sum"] = sr_exact_curve(theory, n_max)
        kicks = arange(cfg.run.stride, n_max + 1, cfg.run.stride, dtype=int64)
        columns: Dict[str, Any] = {"n": kicks}
        columns.update({name: curve.values[kicks - 1] for name, curve in curves.items()})
        tag = _point_tag(p)
        summary: Dict[str, float] = {}
        if overlay.simulate:
            state_settings = cfg.initial_state
            packet = product_initial_state(p.basis, _angles(state_settings.top1), _angles(state_settings.top2))
            initial = uncoupled_burn_in(packet, p, overlay.uncoupled_burn_in)
            simulated = measure_series_pure(p, initial, n_max, cfg.run.stride, cfg.run.eigen_backend)[
                MeasureKind.LINEAR
            ]
            columns["S_R_simulation"] = simulated.values[1:]
            reference = "S_R_closed_form" if overlay.p_model is PModel.CLOSED_FORM else "S_R_exact_p"
            onset = saturation_onset(curves[reference], theory.N)
            window = kicks <= max(onset, cfg.run.stride)
            deviation = abs(columns["S_R_simulation"][window] - columns[reference][window]).max()
            summary[f"max_deviation_{tag}"] = float(deviation)
            summary[f"saturation_onset_{tag}"] = float(onset)
            logger.info(f"{tag}: max |simulation - {reference}| = {deviation:.4f} up to saturation onset n = {onset}")
        artifact = CsvArtifact(
            name=f"sr_overlay_{tag}.csv",
            frame=DataFrame(columns),
            comments=(
                "measure: S_R linear entropy, simulated and from the random-matrix growth law",
                _params_comment(p) + f" N={theory.N} uncoupled_burn_in={overlay.uncoupled_burn_in}",
                "units: n [kicks], S_R columns [dimensionless]",
            ),
        )
        return _PointOutput([artifact], summary)

    return _map(cfg.run.jobs, run, cfg.sweep_points())


def _rdm_histogram(cfg: ExperimentConfig) -> List[_PointOutput]:
    settings = cfg.histogram

    def run(p: CoupledTopParams) -> _PointOutput:
        if settings.eigenstate_mode:
            states = eigenstate_ensemble(p, cfg.run.eigen_backend)
            source = "eigenvectors of the Floquet operator"
        else:
            initial = product_initial_state(
                p.basis, _angles(cfg.initial_state.top1), _angles(cfg.initial_state.top2)
            )
            states = [
                s
                for s in iterate_pure(initial, p, settings.n_stop)
                if s.kick_count >= settings.n_start and (s.kick_count - settings.n_start) % settings.sample_every == 0
            ]
            source = f"states at kicks {settings.n_start}..{settings.n_stop} every {settings.sample_every}"
        hist = rdm_eigenvalue_histogram(states, settings.bins, cfg.run.eigen_backend)
        chi = hist.chi_square()
        tag = _point_tag(p)
        artifact = CsvArtifact(
            name=f"rdm_hist_{tag}.csv",
            frame=DataFrame(
                {
                    "bin_low": hist.bin_low,
                    "bin_high": hist.bin_high,
                    "count": hist.counts,
                    "theory_value": hist.expected,
                }
            ),
            comments=(
                f"measure: pooled Schmidt spectra of {len(states)} {source}",
                _params_comment(p) + f" N={hist.params.N} Q={hist.params.Q:g}",
                f"support: lambda_min={hist.params.lambda_min:.12g} lambda_max={hist.params.lambda_max:.12g}",
                f"fit: chi_square_per_bin={chi.per_bin:.6g} bins_used={chi.bins_used} "
                f"outside_fraction={hist.outside_fraction:.6g}",
                "units: bin edges [eigenvalue], count and theory_value [eigenvalues per bin]",
            ),
            x_column="bin_low",
            y_columns=("count", "theory_value"),
        )
        return _PointOutput(
            [artifact],
            {f"chi_square_per_bin_{tag}": chi.per_bin, f"outside_fraction_{tag}": hist.outside_fraction},
        )

    return _map(cfg.run.jobs, run, cfg.sweep_points())


def _spacing(cfg: ExperimentConfig) -> List[_PointOutput]:
    settings = cfg.spacing
    backend = cfg.run.eigen_backend

    def run(p: CoupledTopParams) -> _PointOutput:
        u = materialize_ut(p)
        sectors = symmetry_sector_bases(p, backend) if settings.desymmetrize else None
        hist = spacing_distribution(u, settings.bins, settings.s_max, sectors, backend)
        wigner = hist.chi_square_wigner()
        poisson = hist.chi_square_poisson()
        tag = _point_tag(p)
        artifact = CsvArtifact(
            name=f"spacing_{tag}.csv",
            frame=DataFrame(
                {
                    "bin_low": hist.edges[:-1],
                    "bin_high": hist.edges[1:],
                    "count": hist.counts,
                    "theory_value": hist.wigner_expected,
                    "poisson_value": hist.poisson_expected,
                }
            ),
            comments=(
                "measure: unfolded nearest-neighbour eigenangle spacings of the Floquet operator; theory_value is the"
                " GOE Wigner surmise",
                _params_comment(p) + f" sectors={len(sectors) if sectors is not None else 1}",
                f"fit: chi_square_wigner={wigner.statistic:.6g} chi_square_poisson={poisson.statistic:.6g}",
                "units: bin edges [mean spacing], counts [spacings per bin]; the last bin holds all larger spacings",
            ),
            x_column="bin_low",
            y_columns=("count", "theory_value", "poisson_value"),
        )
        return _PointOutput(
            [artifact], {f"chi_square_wigner_{tag}": wigner.statistic, f"chi_square_poisson_{tag}": poisson.statistic}
        )

    return _map(cfg.run.jobs, run, cfg.sweep_points())


_RUNNERS: Dict[ExperimentKind, Callable[[ExperimentConfig], List[_PointOutput]]] = {
    ExperimentKind.PHASE_SPACE: _phase_space,
    ExperimentKind.PURE_ENTROPY: _pure_entropy,
    ExperimentKind.MIXED_ENTROPY: _mixed_entropy,
    ExperimentKind.RMT_BOUND: _rmt_bound,
    ExperimentKind.SR_OVERLAY: _sr_overlay,
    ExperimentKind.RDM_HISTOGRAM: _rdm_histogram,
    ExperimentKind.SPACING: _spacing,
}


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Runs the experiment and writes its CSVs, the manifest and (if configured) a plot script.

    Args:
        cfg (ExperimentConfig): A config returned by `validate_config` or built in code.
    Returns:
        result (ExperimentResult): Paths written and headline numbers.
    Raises:
        ExperimentIOError: If the output directory or a file cannot be written.
        DimensionTooLarge: If an explicit Floquet matrix or a density operator would be too large.
    """
    canonical = canonical_json(cfg)
    manifest = RunManifest(
        config=config_to_dict(cfg),
        run_id=run_id_for(canonical),
        started_utc=utc_timestamp(),
        versions=library_versions(),
    )
    logger.info(f"running {cfg.experiment.value} experiment {manifest.run_id[:10]}")
    outputs = _RUNNERS[cfg.experiment](cfg)

    directory = cfg.output.directory
    ensure_directory(directory)
    result = ExperimentResult(kind=cfg.experiment, directory=directory)
    artifacts = [artifact for output in outputs for artifact in output.artifacts]
    for artifact in artifacts:
        manifest.outputs[artifact.name] = write_csv(directory, artifact)
        result.csv_files.append(directory / artifact.name)
    for output in outputs:
        result.summary.update(output.summary)
    if cfg.output.plot_script:
        write_plot_script(directory, manifest.run_id, artifacts)
    manifest.summary = dict(result.summary)
    manifest.finished_utc = utc_timestamp()
    result.manifest = write_manifest(directory, manifest)
    return result
