"""Report serialization: JSON with 12 significant digits and sorted keys, CSV value tables."""

import csv
import json
import math
from collections.abc import Iterable
from typing import Any, TextIO

from pydantic import BaseModel

from .. import __version__
from ..models import Report

SIGNIFICANT_DIGITS = 12
CSV_HEADER = ("graph6", "value")


def round_floats(value: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """Round every float in a nested structure to the given significant digits."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {str(k): round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v, digits) for v in value]
    return value


def as_record(item: BaseModel | dict[str, Any]) -> dict[str, Any]:
    if isinstance(item, BaseModel):
        return item.model_dump(mode="json")
    return item


def build_report(
    command: list[str],
    records: Iterable[BaseModel | dict[str, Any]] = (),
    summary: BaseModel | dict[str, Any] | None = None,
    timing: dict[str, float] | None = None,
) -> Report:
    return Report(
        tool_version=__version__,
        command=command,
        records=[as_record(r) for r in records],
        summary=as_record(summary) if summary is not None else {},
        timing=timing or {},
    )


def render_json(report: Report) -> str:
    """Serialize a report; timing is kept in its own object so it can be ignored when comparing."""
    data = round_floats(report.model_dump(mode="json", by_alias=True))
    return json.dumps(data, sort_keys=True, indent=2)


def write_csv(stream: TextIO, rows: Iterable[tuple[str, int | float]]) -> int:
    """Write "graph6,value" rows under a header line; returns the row count."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for code, value in rows:
        writer.writerow((code, round_floats(value)))
        count += 1
    return count
