"""Run-record and mu-distribution files"""

import json
from pathlib import Path
from typing import Any

import pandas as pd

from qbench.core.exceptions import ConfigurationError, ValidationError
from qbench.solvers.base import RunRecord

RUN_COLUMNS = [
    "class_name",
    "dimension",
    "index",
    "solver",
    "seed",
    "evaluations",
    "normalized_hv",
    "mode",
]

RUNS_FILE = "runs.csv"
MU_FILE = "mu_distributions.json"


def records_frame(records: list[RunRecord]) -> pd.DataFrame:
    """One row per checkpoint, in record order"""
    rows = [row for record in records for row in record.rows()]
    return pd.DataFrame(rows, columns=RUN_COLUMNS)


def write_csv(frame: pd.DataFrame, path: Path | str) -> Path:
    """Write a frame as CSV with a header row and LF line endings"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, lineterminator="\n", float_format="%.17g")
    return path


def write_runs(records: list[RunRecord], path: Path | str) -> Path:
    return write_csv(records_frame(records), path)


def read_runs(path: Path | str) -> pd.DataFrame:
    """Read a run CSV, checking its columns"""
    path = Path(path)
    if path.is_dir():
        path = path / RUNS_FILE
    try:
        frame = pd.read_csv(path, dtype={"class_name": str, "solver": str, "mode": str})
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ConfigurationError(f"Cannot read run records from {path}: {e}") from e
    missing = [column for column in RUN_COLUMNS if column not in frame.columns]
    if missing:
        raise ValidationError(f"{path} lacks columns {missing}")
    return frame


def write_mu_distributions(entries: list[dict[str, Any]], path: Path | str) -> Path:
    """Write mu-distribution records as a JSON array"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(entries, f, indent=2)
        f.write("\n")
    return path


def read_mu_distributions(path: Path | str) -> list[dict[str, Any]]:
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read {path}: {e}") from e
    if not isinstance(data, list):
        raise ValidationError(f"{path} must contain a JSON array")
    return data
