import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Dict, Tuple, Union

import numpy as np

from src.utils.errors import ConfigError
from src.utils.io import read_json

logger = logging.getLogger(__name__)

Confusion = Tuple[Tuple[float, float], Tuple[float, float]]

DEFAULT_READOUT: Confusion = ((0.98, 0.03), (0.02, 0.97))
IDEAL_READOUT: Confusion = ((1.0, 0.0), (0.0, 1.0))


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing gate noise plus a readout confusion matrix M[r][s] = P(read r | true s)."""

    p_cnot: float = 0.0
    p_1q: float = 0.0
    readout: Confusion = IDEAL_READOUT
    jitter_pct: float = 0.0
    name: str = "custom"

    def __post_init__(self) -> None:
        for key in ("p_cnot", "p_1q"):
            value = getattr(self, key)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{key} must lie in [0, 1], got {value}")
        m = np.asarray(self.readout, dtype=float)
        if m.shape != (2, 2) or (m < 0).any() or not np.allclose(m.sum(axis=0), 1.0, atol=1e-9):
            raise ConfigError(f"readout must be a column-stochastic 2x2 matrix, got {self.readout}")
        if not 0.0 <= self.jitter_pct < 100.0:
            raise ConfigError(f"jitter_pct must lie in [0, 100), got {self.jitter_pct}")

    @property
    def confusion(self) -> np.ndarray:
        return np.asarray(self.readout, dtype=float)

    def with_jitter(self, rng: np.random.Generator) -> "NoiseModel":
        """Per-run drift: p_cnot scaled uniformly within +/- jitter_pct percent."""
        if not self.jitter_pct:
            return self
        scale = 1.0 + rng.uniform(-1.0, 1.0) * self.jitter_pct / 100.0
        return replace(self, p_cnot=float(min(1.0, max(0.0, self.p_cnot * scale))))

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "p_cnot": self.p_cnot,
            "p_1q": self.p_1q,
            "readout": [list(r) for r in self.readout],
            "jitter_pct": self.jitter_pct,
        }

    @classmethod
    def from_json(cls, obj: Dict) -> "NoiseModel":
        try:
            readout = tuple(tuple(float(x) for x in row) for row in obj.get("readout", IDEAL_READOUT))
            return cls(
                p_cnot=float(obj["p_cnot"]),
                p_1q=float(obj.get("p_1q", 0.0)),
                readout=readout,
                jitter_pct=float(obj.get("jitter_pct", 0.0)),
                name=str(obj.get("name", "custom")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad noise model: {exc}") from exc


# stand-ins for devices of increasing quantum volume
PROFILES: Dict[str, NoiseModel] = {
    "ideal": NoiseModel(name="ideal"),
    "default": NoiseModel(0.01, 0.001, DEFAULT_READOUT, name="default"),
    "qv8": NoiseModel(0.03, 0.003, DEFAULT_READOUT, name="qv8"),
    "qv16": NoiseModel(0.02, 0.002, DEFAULT_READOUT, name="qv16"),
    "qv32": NoiseModel(0.015, 0.0015, DEFAULT_READOUT, name="qv32"),
    "qv128": NoiseModel(0.008, 0.0008, DEFAULT_READOUT, name="qv128"),
}


def load_noise(source: Union[str, Path]) -> NoiseModel:
    """A profile name or a path to a noise-model JSON file."""
    if str(source) in PROFILES:
        return PROFILES[str(source)]
    path = Path(source)
    if not path.exists():
        raise ConfigError(f"unknown noise profile or file {source!r}; profiles: {sorted(PROFILES)}")
    return NoiseModel.from_json(read_json(path))
