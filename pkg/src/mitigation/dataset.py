import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
import pandas as pd

from src.utils.errors import MissingPart, ValidationError

logger = logging.getLogger(__name__)

COLUMNS = ["knot", "backend_label", "part", "stretch", "run_index", "value", "std", "shots", "seed"]
# recorded by the simulator so a dataset can be matched to the graph it came from
METADATA = ["colouring", "n", "tau", "writhe"]
PARTS = ("real", "imag")


@dataclass(frozen=True)
class ZNEDataset:
    """Pooled estimates y[c][t] of one H-test part, keyed by stretch factor c."""

    part: str
    samples: Dict[int, Tuple[float, ...]]
    knot: str = ""
    backend_label: str = ""

    def __post_init__(self) -> None:
        if not self.samples or any(len(v) == 0 for v in self.samples.values()):
            raise ValidationError(f"{self.part} dataset needs at least one sample per stretch factor")

    @property
    def stretches(self) -> List[int]:
        return sorted(self.samples)

    def restrict(self, cs_used: Iterable[int]) -> "ZNEDataset":
        cs = sorted(set(int(c) for c in cs_used))
        missing = [c for c in cs if c not in self.samples]
        if missing:
            raise ValidationError(f"{self.part} dataset has no samples at stretch {missing}")
        return ZNEDataset(self.part, {c: self.samples[c] for c in cs}, self.knot, self.backend_label)

    def arrays(self) -> Dict[int, np.ndarray]:
        return {c: np.asarray(self.samples[c], dtype=float) for c in self.stretches}

    def pooled(self) -> Tuple[np.ndarray, np.ndarray]:
        """All (c, y) points, stretch-major."""
        cs, ys = [], []
        for c, values in self.arrays().items():
            cs.append(np.full(len(values), c, dtype=float))
            ys.append(values)
        return np.concatenate(cs), np.concatenate(ys)

    def means(self) -> Dict[int, float]:
        return {c: float(v.mean()) for c, v in self.arrays().items()}


def from_frame(df: pd.DataFrame, part: str) -> ZNEDataset:
    rows = df[df["part"] == part]
    if rows.empty:
        raise MissingPart(f"dataset has no rows for the {part} part")
    rows = rows.sort_values(["stretch", "run_index"])
    samples = {int(c): tuple(float(v) for v in g["value"]) for c, g in rows.groupby("stretch")}
    knot = str(rows["knot"].iloc[0]) if "knot" in rows else ""
    backend = str(rows["backend_label"].iloc[0]) if "backend_label" in rows else ""
    return ZNEDataset(part, samples, knot, backend)


def split_parts(df: pd.DataFrame, parts: Sequence[str] = PARTS) -> Dict[str, ZNEDataset]:
    missing = [c for c in COLUMNS if c not in df.columns]
    if missing:
        raise ValidationError(f"dataset is missing columns {missing}")
    return {part: from_frame(df, part) for part in parts}


def rows_frame(rows: List[Dict], columns: Sequence[str] = COLUMNS) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=list(columns))


def frame_knot(df: pd.DataFrame) -> str:
    names = sorted(set(df["knot"].dropna().astype(str))) if "knot" in df.columns else []
    if len(names) != 1:
        raise ValidationError(f"dataset must hold exactly one knot, found {names}")
    return names[0]


def _same(recorded: Any, expected: Any) -> bool:
    if isinstance(expected, (int, np.integer)):
        try:
            return float(recorded) == float(expected)
        except (TypeError, ValueError):
            return False
    return str(recorded) == str(expected)


def check_metadata(df: pd.DataFrame, expected: Mapping[str, Any]) -> None:
    """Raise ValidationError where a recorded METADATA column disagrees with `expected`.

    Columns missing from `df`, or holding only nulls, are not checked.
    """
    for column, want in expected.items():
        if column not in df.columns:
            continue
        seen = list(df[column].dropna().unique())
        if not seen:
            continue
        if len(seen) > 1 or not _same(seen[0], want):
            raise ValidationError(f"dataset was simulated with {column} {[str(s) for s in seen]}, not {want!r}")
