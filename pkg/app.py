"""Command-line entry point: exact, simulate, zne, benchmark and knot info.

Exit codes: 0 success, 2 validation error, 3 numerical failure.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional

from src.bench.commands import cmd_benchmark, cmd_exact, cmd_info, cmd_simulate, cmd_zne
from src.bench.run_config import build_config
from src.config import ensure_directories, get_paths, setup_logging
from src.dataset.exporter import read_frame
from src.utils.errors import JonesBenchError
from src.utils.io import dumps_json

logger = logging.getLogger("app")


def _shared(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON run-config file; flags override it")
    parser.add_argument("--knot", help="builtin name, knot-library JSON file or PD text file (default trefoil; zne reads it from the dataset)")
    parser.add_argument("--outer-face", dest="outer_face", type=int)
    parser.add_argument("--colouring", choices=["default", "dual", "smallest"])
    parser.add_argument("--q", type=int)
    parser.add_argument("--parts", help="comma list of real,imag")
    parser.add_argument("--noise", help="noise profile name or noise-model JSON file")
    parser.add_argument("--jitter", dest="jitter_pct", type=float, help="per-run p_cnot drift in percent")
    parser.add_argument("--method", choices=["channel", "trajectory"])
    parser.add_argument("--seed", type=int)
    parser.add_argument("--runs", type=int)
    parser.add_argument("--shots", type=int)
    parser.add_argument("--calibration-shots", dest="calibration_shots", type=int)
    parser.add_argument("--stretch", help="odd stretch factors, e.g. 1,3,5,7")
    parser.add_argument("--fit", choices=["linear", "exp", "exponential", "raw"])
    parser.add_argument("--cs", help="stretch factors used by the fit, e.g. 1,3")
    parser.add_argument("--resamples", type=int)
    parser.add_argument("--scheme", choices=["independent", "tuple"])
    parser.add_argument("--variants", type=int)
    parser.add_argument("--moves", type=int)
    parser.add_argument("--formats", help="dataset formats, comma list of csv,json,parquet")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jonesbench", description="Jones polynomial estimation from knot diagrams")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("exact", "classical evaluation: t(q), Z, A and V"),
        ("simulate", "noisy H-test executions to a dataset file"),
        ("zne", "zero-noise extrapolation and Jones estimate from a dataset"),
        ("benchmark", "random Reidemeister variants through the full pipeline"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _shared(p)
        if name == "zne":
            p.add_argument("--dataset", help="dataset CSV/JSON/Parquet (default: <results>/dataset.csv)")
    knot = sub.add_parser("knot", help="knot inspection")
    knot_sub = knot.add_subparsers(dest="knot_command", required=True)
    _shared(knot_sub.add_parser("info", help="diagram summary and both Tait graphs"))
    return parser


def _overrides(args: argparse.Namespace) -> Dict:
    return {k: v for k, v in vars(args).items() if k not in ("command", "knot_command", "config", "verbose", "dataset")}


def run(args: argparse.Namespace):
    config = build_config(_overrides(args), args.config)
    if args.command == "exact":
        return cmd_exact(config)
    if args.command == "knot":
        return cmd_info(config)
    if args.command == "simulate":
        if config.out is None:
            ensure_directories()
            config = build_config({**_overrides(args), "out": str(get_paths()["results"])}, args.config)
        df = cmd_simulate(config)
        return {"rows": len(df), "out": str(config.out_dir())}
    if args.command == "zne":
        dataset = args.dataset or str(get_paths()["results"] / "dataset.csv")
        result = cmd_zne(read_frame(dataset), config)
        result.pop("jones")
        return result
    report = cmd_benchmark(config)
    return report.to_json()


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(logging.DEBUG if args.verbose else logging.INFO)
    try:
        result = run(args)
    except JonesBenchError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return exc.exit_code
    sys.stdout.write(dumps_json(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
