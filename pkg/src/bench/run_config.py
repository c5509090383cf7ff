"""Run configuration: DEFAULTS, then an optional JSON config file, then command-line flags."""

import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from src.config import DEFAULTS, get_paths
from src.mitigation.bootstrap import SCHEMES
from src.mitigation.fitting import normalise_model
from src.noise.sampling import METHODS
from src.utils.errors import ConfigError
from src.utils.io import read_json

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    knot: Optional[str] = None
    outer_face: Optional[int] = None
    colouring: str = "default"
    q: int = DEFAULTS["q"]
    parts: Tuple[str, ...] = ("real", "imag")
    stretch: Tuple[int, ...] = DEFAULTS["stretch"]
    shots: int = DEFAULTS["shots"]
    calibration_shots: int = DEFAULTS["shots"]
    runs: int = DEFAULTS["runs"]
    noise: str = DEFAULTS["noise"]
    jitter_pct: Optional[float] = None
    method: str = "channel"
    fit: str = DEFAULTS["fit"]
    cs: Tuple[int, ...] = DEFAULTS["cs"]
    resamples: int = DEFAULTS["resamples"]
    scheme: str = DEFAULTS["scheme"]
    seed: int = DEFAULTS["seed"]
    variants: int = DEFAULTS["variants"]
    moves: int = DEFAULTS["moves"]
    formats: Tuple[str, ...] = ("csv",)
    out: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.stretch or any(c < 1 or c % 2 == 0 for c in self.stretch):
            raise ConfigError(f"stretch factors must be odd integers >= 1, got {self.stretch}")
        if self.runs < 1 or self.shots < 1 or self.calibration_shots < 1:
            raise ConfigError("runs, shots and calibration_shots must be >= 1")
        if self.q < 2:
            raise ConfigError(f"q must be >= 2, got {self.q}")
        if self.method not in METHODS:
            raise ConfigError(f"unknown sampling method {self.method!r}; choose from {METHODS}")
        if self.scheme not in SCHEMES:
            raise ConfigError(f"unknown resampling scheme {self.scheme!r}; choose from {SCHEMES}")
        if self.colouring not in ("default", "dual", "smallest"):
            raise ConfigError(f"unknown colouring {self.colouring!r}")
        bad = [p for p in self.parts if p not in ("real", "imag")]
        if bad:
            raise ConfigError(f"unknown parts {bad}")
        if self.variants < 1 or self.moves < 0:
            raise ConfigError("variants must be >= 1 and moves >= 0")
        normalise_model(self.fit)

    def out_dir(self) -> Path:
        return Path(self.out) if self.out else get_paths()["results"]

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)


_TUPLES = {"parts", "stretch", "cs", "formats"}


def _coerce(key: str, value: Any) -> Any:
    if key in _TUPLES:
        if isinstance(value, str):
            value = [v for v in value.split(",") if v.strip()]
        items = tuple(value)
        return tuple(str(v).strip() for v in items) if key in ("parts", "formats") else tuple(int(v) for v in items)
    return value


def build_config(overrides: Optional[Mapping[str, Any]] = None, config_file: Optional[Union[str, Path]] = None) -> RunConfig:
    """Later sources win; None-valued overrides are ignored."""
    known = {f.name for f in fields(RunConfig)}
    merged: Dict[str, Any] = {}
    if config_file:
        data = read_json(config_file)
        if not isinstance(data, dict):
            raise ConfigError(f"config file {config_file} must hold a JSON object")
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys {unknown}")
        merged.update(data)
    for key, value in (overrides or {}).items():
        if key in known and value is not None:
            merged[key] = value
    try:
        config = RunConfig(**{k: _coerce(k, v) for k, v in merged.items()})
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad configuration: {exc}") from exc
    logger.debug("run config: %s", config)
    return config
