import io
import logging
import os
import tempfile
from pathlib import Path
from typing import Dict, Iterable, Union

import pandas as pd

from src.utils.errors import ValidationError
from src.utils.io import atomic_write_text, dumps_json

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json", "parquet")


def frame_to_csv(df: pd.DataFrame) -> str:
    buffer = io.StringIO()
    df.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def _write_parquet(df: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=str(path.parent))
    os.close(fd)
    try:
        df.to_parquet(tmp, index=False)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def export_frame(df: pd.DataFrame, out_dir: Union[str, Path], stem: str, formats: Iterable[str] = ("csv",)) -> Dict[str, Path]:
    """Write `df` as <stem>.<format> for each requested format; CSV is the canonical copy."""
    out_dir = Path(out_dir)
    out_paths: Dict[str, Path] = {}
    for fmt in formats:
        if fmt not in FORMATS:
            raise ValidationError(f"unknown export format {fmt!r}; choose from {FORMATS}")
        p = out_dir / f"{stem}.{fmt}"
        if fmt == "csv":
            atomic_write_text(p, frame_to_csv(df))
        elif fmt == "json":
            atomic_write_text(p, dumps_json(df.to_dict(orient="records")))
        else:
            _write_parquet(df, p)
        out_paths[fmt] = p
    logger.info("exported %d rows to %s", len(df), ", ".join(str(p) for p in out_paths.values()))
    return out_paths


def read_frame(path: Union[str, Path]) -> pd.DataFrame:
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"dataset file {path} does not exist")
    if path.suffix == ".parquet":
        return pd.read_parquet(path)
    if path.suffix == ".json":
        return pd.read_json(path, orient="records")
    return pd.read_csv(path)
