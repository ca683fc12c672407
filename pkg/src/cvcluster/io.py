"""Dataset serialization: CSV with a JSON config header, or plain JSON.

CSV files start with a single ``#``-prefixed line holding the fully
resolved configuration as JSON, then a header row and one data row per
sample. Floats are written with 17 significant digits so files round-trip
exactly and repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .analysis import CurveDataset


def format_float(value: float) -> str:
    return format(float(value), ".17g")


def _header_config(dataset: CurveDataset, config: dict | None) -> dict:
    merged = dict(dataset.meta)
    if config:
        merged.update(config)
    merged["tag"] = dataset.tag
    return merged


def dataset_to_csv(dataset: CurveDataset, config: dict | None = None) -> str:
    lines = ["# " + json.dumps(_header_config(dataset, config), sort_keys=True)]
    lines.append(",".join(dataset.columns))
    for row in dataset.values:
        lines.append(",".join(format_float(v) for v in row))
    return "\n".join(lines) + "\n"


def dataset_to_json(dataset: CurveDataset, config: dict | None = None) -> str:
    doc = {
        "config": _header_config(dataset, config),
        "tag": dataset.tag,
        "columns": list(dataset.columns),
        "rows": [[float(v) for v in row] for row in dataset.values],
    }
    return json.dumps(doc, sort_keys=True) + "\n"


def write_dataset(
    dataset: CurveDataset,
    path: str | Path,
    fmt: str = "csv",
    config: dict | None = None,
) -> Path:
    """Serialize a dataset to ``path``; returns the written path."""
    if fmt == "csv":
        text = dataset_to_csv(dataset, config)
    elif fmt == "json":
        text = dataset_to_json(dataset, config)
    else:
        raise ValueError("fmt must be 'csv' or 'json'")
    target = Path(path)
    target.write_text(text, encoding="utf-8")
    return target
