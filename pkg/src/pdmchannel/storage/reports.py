"""Write JSON reports and CSV tables with fixed formatting, so reruns are byte-identical."""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import structlog
from pydantic import BaseModel

from pdmchannel.errors import OutputError
from pdmchannel.models.spectrum import BoxState, CylState, DegeneracyGroup, SpectrumEntry

log = structlog.get_logger(__name__)

SPECTRUM_HEADER = ("model", "quantum_numbers", "delta", "energy", "degeneracy_group")


def _plain(value: Any) -> Any:
    """Non-finite floats become strings; JSON has no spelling for them."""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_plain(v) for v in value]
    return value


def render_json(payload: BaseModel | dict[str, Any]) -> str:
    """Sorted keys, two-space indent, floats in shortest round-trip form."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json", by_alias=True)
    return json.dumps(_plain(payload), sort_keys=True, indent=2, allow_nan=False) + "\n"


def format_float(value: float) -> str:
    return f"{value:.12g}"


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def write_text(text: str, output_path: str | Path) -> Path:
    """Write to a file, creating parent directories. Raises OutputError on I/O failure."""
    path = Path(output_path).resolve()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}") from e
    log.info("report_written", path=str(path), bytes=len(text.encode("utf-8")))
    return path


def spectrum2d_rows(entries: Sequence[SpectrumEntry]) -> list[tuple]:
    """One row per state; the level N doubles as the degeneracy group."""
    return [("2d", f"{e.n},{e.l}", float(e.l + 1), e.E, e.N) for e in entries]


def spectrum3d_rows(
    model: str, states: Sequence[BoxState | CylState], groups: Sequence[DegeneracyGroup]
) -> list[tuple]:
    group_of = {qn: g.group_id for g in groups for qn in g.members}
    rows = []
    for st in states:
        if isinstance(st, BoxState):
            qn = (st.n, st.l, st.m)
        else:
            qn = (st.n, st.m, st.s)
        rows.append((model, ",".join(map(str, qn)), st.delta, st.E, group_of[qn]))
    return rows


def field_rows(xs: Sequence[float], ys: Sequence[float], values: Sequence[float]) -> list[tuple]:
    return [(float(x), float(y), float(v)) for x, y, v in zip(xs, ys, values, strict=True)]
