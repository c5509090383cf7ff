"""Command implementations behind the CLI verbs.

Every command is a pure function of its RunConfig: seeds for runs, parts,
stretch factors, calibrations and benchmark variants are all derived from
the master seed.
"""

import logging
from dataclasses import replace
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from src.bench.report import BenchmarkReport, plot_data, timeline
from src.bench.run_config import RunConfig
from src.circuits.gates import Circuit
from src.circuits.iqp import htest, iqp_from_graph
from src.circuits.simulate import amplitude
from src.circuits.synthesis import compile_controlled_diagonal, stretch_cnots
from src.config import DEFAULTS
from src.dataset.exporter import export_frame
from src.knots.kauffman import kauffman_jones
from src.knots.library import KnotRecord, get_knot, load_knot_file, load_pd_file, record_from_diagram
from src.knots.moves import random_moves
from src.knots.pd import KnotDiagram, faces, orient_and_sign
from src.knots.tait import TaitGraph, tait_graph_for
from src.mitigation.bootstrap import bootstrap
from src.mitigation.dataset import COLUMNS, METADATA, ZNEDataset, check_metadata, frame_knot, rows_frame, split_parts
from src.mitigation.fitting import FitResult, normalise_model
from src.mitigation.jones import JonesEstimate, assemble_jones
from src.noise.model import NoiseModel, load_noise
from src.noise.readout import calibrate_readout, mitigate_readout
from src.noise.sampling import sample_shots
from src.potts.evaluation import eval_point, jones_factors
from src.potts.partition import jones_value, partition_bruteforce, partition_contract
from src.utils.errors import ConfigError, TooLarge, UnknownKnot, ValidationError
from src.utils.io import derive_seed, write_json

logger = logging.getLogger(__name__)

ORACLE_QS = (2, 3, 4)
TOLERANCE = 1e-9


def resolve_knot(config: RunConfig) -> Tuple[KnotRecord, Optional[KnotDiagram]]:
    """Builtin name, knot-library JSON file, or PD text file."""
    source = config.knot or DEFAULTS["knot"]
    path = Path(source)
    if path.suffix == ".json" and path.exists():
        record = load_knot_file(path)[0]
    elif path.exists():
        diagram = load_pd_file(path, outer_face=config.outer_face or 0)
        record = record_from_diagram(path.stem, diagram)
    else:
        record = get_knot(source)
    diagram = record.diagram()
    if diagram is not None and config.outer_face is not None and config.outer_face != diagram.outer_face:
        diagram = orient_and_sign(record.pd, outer_face=config.outer_face)
        record = record_from_diagram(record.name, diagram, record.exact_jones_at_i)
    return record, diagram


def knot_graph(record: KnotRecord, diagram: Optional[KnotDiagram], colouring: str = "default") -> TaitGraph:
    if diagram is None or colouring == "default":
        return record.tait_graph
    return tait_graph_for(diagram, colouring)


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) <= TOLERANCE * max(1.0, abs(b))


# exact evaluation


def cmd_exact(config: RunConfig) -> Dict:
    record, diagram = resolve_knot(config)
    graph = knot_graph(record, diagram, config.colouring)
    point = eval_point(config.q)
    factors = jones_factors(point.t, graph.tau, record.writhe, graph.n)
    z_contract = partition_contract(graph, config.q)
    try:
        z_brute: Optional[complex] = partition_bruteforce(graph, config.q)
    except TooLarge:
        z_brute = None
    report: Dict = {
        "knot": record.name,
        "q": config.q,
        "t": point.t,
        "on_lattice": point.on_lattice,
        "n": graph.n,
        "tau": graph.tau,
        "w": record.writhe,
        "A": factors.A,
        "Z_bruteforce": z_brute,
        "Z_contract": z_contract,
        "V": factors.A * z_contract,
    }
    if diagram is not None:
        report["V_kauffman"] = kauffman_jones(diagram, point.t)
    if config.q == 2 and graph.n <= DEFAULTS["unitary_max_qubits"]:
        report["Z_circuit"] = 2 ** graph.n * amplitude(iqp_from_graph(graph))
    logger.info("%s at q=%d: V = %s", record.name, config.q, report["V"])
    if config.out:
        write_json(config.out_dir() / "exact.json", report)
    return report


def cmd_info(config: RunConfig) -> Dict:
    record, diagram = resolve_knot(config)
    info: Dict = {"record": record.to_json()}
    if diagram is not None:
        info.update(
            {
                "pd": str(diagram.pd),
                "crossings": diagram.n_crossings,
                "writhe": diagram.writhe,
                "crossing_signs": list(diagram.crossing_signs),
                "outer_face": diagram.outer_face,
                "face_sizes": [len(f.boundary) for f in faces(diagram)],
                "tait_default": tait_graph_for(diagram, "default").to_json(),
                "tait_dual": tait_graph_for(diagram, "dual").to_json(),
            }
        )
    return info


# noisy pipeline


def compiled_htests(graph: TaitGraph, parts) -> Dict[str, Circuit]:
    base = iqp_from_graph(graph)
    return {part: compile_controlled_diagonal(htest(base, part)) for part in parts}


def simulate_frame(graph: TaitGraph, knot: str, writhe: int, colouring: str, config: RunConfig, nm: NoiseModel, seed: int) -> pd.DataFrame:
    if config.q != 2:
        raise ConfigError(f"circuit simulation needs q = 2, got q = {config.q}")
    compiled = compiled_htests(graph, config.parts)
    circuits = {(part, c): stretch_cnots(compiled[part], c) for part in config.parts for c in config.stretch}
    widest = max(circuit.n_qubits for circuit in circuits.values())
    if config.method == "channel" and widest > DEFAULTS["density_max_qubits"]:
        logger.info("%s needs %d qubits, beyond the density-matrix oracle; sampling trajectories", knot, widest)
    rows: List[Dict] = []
    for run in tqdm(range(1, config.runs + 1), desc=f"simulate {knot}", disable=None):
        nm_run = nm.with_jitter(np.random.default_rng(derive_seed(seed, run, "jitter")))
        confusion = calibrate_readout(nm_run, config.calibration_shots, derive_seed(seed, run, "calibration"))
        for part in config.parts:
            for c in config.stretch:
                child = derive_seed(seed, run, part, c)
                counts = sample_shots(circuits[(part, c)], nm_run, config.shots, child, method=config.method)
                estimate = mitigate_readout(counts, confusion, seed=child)
                rows.append(
                    {
                        "knot": knot,
                        "backend_label": nm.name,
                        "part": part,
                        "stretch": c,
                        "run_index": run,
                        "value": estimate.value,
                        "std": estimate.std,
                        "shots": estimate.shots,
                        "seed": str(child),
                        "colouring": colouring,
                        "n": graph.n,
                        "tau": graph.tau,
                        "writhe": writhe,
                    }
                )
    return rows_frame(rows, COLUMNS + METADATA)


def noise_for(config: RunConfig) -> NoiseModel:
    nm = load_noise(config.noise)
    if config.jitter_pct is not None:
        nm = NoiseModel(nm.p_cnot, nm.p_1q, nm.readout, config.jitter_pct, nm.name)
    return nm


def cmd_simulate(config: RunConfig) -> pd.DataFrame:
    record, diagram = resolve_knot(config)
    graph = knot_graph(record, diagram, config.colouring)
    df = simulate_frame(graph, record.name, record.writhe, config.colouring, config, noise_for(config), config.seed)
    logger.info("simulated %d rows for %s", len(df), record.name)
    if config.out:
        export_frame(df, config.out_dir(), "dataset", config.formats)
    return df


def zne_from_frame(df: pd.DataFrame, graph: TaitGraph, writhe: int, config: RunConfig, metadata: Dict) -> Tuple[Dict[str, JonesEstimate], Dict[str, Dict[str, FitResult]], Dict[str, ZNEDataset]]:
    datasets = split_parts(df)
    model = normalise_model(config.fit)
    factors = jones_factors(eval_point(2).t, graph.tau, writhe, graph.n)
    exact = jones_value(graph, writhe, 2)
    fits: Dict[str, Dict[str, FitResult]] = {}
    for part, ds in datasets.items():
        fits[part] = {
            model: bootstrap(ds, model, config.cs, config.resamples, config.seed, config.scheme),
            "raw": bootstrap(ds, "raw", None, config.resamples, config.seed, config.scheme),
        }
    estimates = {
        "zne": assemble_jones(fits["real"][model], fits["imag"][model], factors, exact, metadata),
        "raw": assemble_jones(fits["real"]["raw"], fits["imag"]["raw"], factors, exact, metadata),
    }
    return estimates, fits, datasets


def dataset_graph(df: pd.DataFrame, config: RunConfig) -> Tuple[KnotRecord, TaitGraph]:
    """The knot and Tait graph a dataset was simulated from.

    Without --knot the dataset's own knot column names the source. The
    recorded colouring, n, tau and writhe must match what config resolves to.
    """
    name = frame_knot(df)
    if config.knot is None:
        logger.info("taking knot %r from the dataset", name)
        try:
            record, diagram = resolve_knot(replace(config, knot=name))
        except UnknownKnot as exc:
            raise UnknownKnot(f"{exc}; pass --knot with the source the dataset was simulated from") from exc
    else:
        record, diagram = resolve_knot(config)
        if record.name != name:
            raise ValidationError(f"dataset holds knot {name!r} but --knot resolves to {record.name!r}")
    graph = knot_graph(record, diagram, config.colouring)
    check_metadata(df, {"colouring": config.colouring, "n": graph.n, "tau": graph.tau, "writhe": record.writhe})
    return record, graph


def cmd_zne(df: pd.DataFrame, config: RunConfig) -> Dict:
    record, graph = dataset_graph(df, config)
    backend = str(df["backend_label"].iloc[0]) if len(df) else ""
    metadata = {"knot": record.name, "backend": backend, "scheme": config.scheme}
    estimates, fits, datasets = zne_from_frame(df, graph, record.writhe, config, metadata)
    result = {
        "estimates": {name: e.to_json() for name, e in estimates.items()},
        "fits": {part: {m: f.to_json() for m, f in by_model.items()} for part, by_model in fits.items()},
    }
    logger.info("%s: zne %s (distance %.4f), raw %s", record.name, estimates["zne"].value, estimates["zne"].distance_to_exact, estimates["raw"].value)
    if config.out:
        out = config.out_dir()
        write_json(out / "jones_estimate.json", result)
        write_json(out / "plot_data.json", plot_data(datasets, fits, estimates))
        export_frame(timeline(df), out, "timeline", ("csv",))
    return {**result, "jones": estimates}


# benchmark


def invariance_check(diagram: KnotDiagram, reference: Dict[int, complex]) -> bool:
    """Both classical oracles on `diagram` against the seed knot's values."""
    graph = tait_graph_for(diagram, "default")
    for q in ORACLE_QS:
        t = eval_point(q).t
        if not _close(kauffman_jones(diagram, t), reference[q]):
            return False
        if not _close(jones_value(graph, diagram.writhe, q), reference[q]):
            return False
    return True


def benchmark_variants(diagram: KnotDiagram, config: RunConfig) -> List[KnotDiagram]:
    if config.moves == 0:
        return [diagram]
    return [
        random_moves(diagram, config.moves, np.random.default_rng(derive_seed(config.seed, "variant", i)))
        for i in range(config.variants)
    ]


def cmd_benchmark(config: RunConfig) -> BenchmarkReport:
    record, diagram = resolve_knot(config)
    if diagram is None:
        raise ValidationError(f"benchmark needs a knot with a PD code; {record.name!r} has none")
    reference = {q: kauffman_jones(diagram, eval_point(q).t) for q in ORACLE_QS}
    report = BenchmarkReport(exact=reference[2])
    nm = noise_for(config)
    for i, variant in enumerate(benchmark_variants(diagram, config)):
        graph = tait_graph_for(variant, "smallest")
        ok = invariance_check(variant, reference)
        if not ok:
            logger.error("variant %d of %s fails the classical invariance check", i, record.name)
        label = f"{record.name}-v{i}"
        report.entries.append(
            {
                "name": label,
                "pd": str(variant.pd),
                "crossings": variant.n_crossings,
                "writhe": variant.writhe,
                "n": graph.n,
                "tau": graph.tau,
                "invariance_ok": ok,
            }
        )
        df = simulate_frame(graph, label, variant.writhe, "smallest", config, nm, derive_seed(config.seed, "variant", i, "runs"))
        estimates, _, _ = zne_from_frame(df, graph, variant.writhe, config, {"knot": label, "backend": nm.name})
        report.estimates.append(estimates["zne"])
        report.raw_estimates.append(estimates["raw"])
    logger.info("benchmark %s: %s", record.name, report.summary())
    if config.out:
        write_json(config.out_dir() / "benchmark.json", report.to_json())
    return report
