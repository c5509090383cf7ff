import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict

from dotenv import load_dotenv

BASE = Path(__file__).resolve().parent.parent

load_dotenv(BASE / ".env")

DEFAULTS: Dict[str, Any] = {
    "knot": "trefoil",
    "q": 2,
    "stretch": (1, 3, 5, 7),
    "shots": 8192,
    "runs": 150,
    "fit": "linear",
    "cs": (1, 3),
    "resamples": 50_000,
    "scheme": "independent",
    "seed": 0,
    "noise": "default",
    "variants": 4,
    "moves": 2,
    "kauffman_max_crossings": 20,
    "bruteforce_max_configs": 2 ** 24,
    "density_max_qubits": 7,
    "unitary_max_qubits": 11,
}

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def get_paths() -> Dict[str, Path]:
    data_dir = Path(os.environ.get("JONES_DATA_DIR", BASE / "data"))
    return {
        "base": BASE,
        "data": data_dir,
        "datasets": data_dir / "datasets",
        "results": data_dir / "results",
        "plots": data_dir / "plots",
    }


def ensure_directories() -> None:
    paths = get_paths()
    for key in ["data", "datasets", "results", "plots"]:
        paths[key].mkdir(parents=True, exist_ok=True)


def setup_logging(level: int = logging.INFO) -> None:
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
