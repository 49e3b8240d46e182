"""JSON/CSV formats for configurations, lines and tau results.

Objects are written with a fixed key order and compact separators so that
output is byte-stable across runs and across a load/dump round trip.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Optional

from .torus import Configuration, TorusDims


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def configuration_to_json(cfg: Configuration) -> dict:
    return {"m": cfg.dims.m, "n": cfg.dims.n, "points": [[p.x, p.y] for p in cfg.points]}


def configuration_from_json(obj: Any, dims: Optional[TorusDims] = None) -> Configuration:
    """Accept either ``[[x, y], ...]`` (needs ``dims``) or ``{"m", "n", "points"}``."""
    if isinstance(obj, dict):
        own = TorusDims(int(obj["m"]), int(obj["n"]))
        if dims is not None and own != dims:
            raise ValueError(f"point file is for T_{own.m}x{own.n}, not T_{dims.m}x{dims.n}")
        return Configuration(own, _pairs(obj["points"]))
    if dims is None:
        raise ValueError("a bare point list needs torus dimensions")
    return Configuration(dims, _pairs(obj))


def _pairs(raw: Iterable) -> list[tuple[int, int]]:
    out = []
    for item in raw:
        if len(item) != 2:
            raise ValueError(f"expected an [x, y] pair, got {item!r}")
        out.append((int(item[0]), int(item[1])))
    return out


def parse_csv_points(text: str) -> list[tuple[int, int]]:
    rows = [row for row in csv.reader(io.StringIO(text)) if row and not row[0].lstrip().startswith("#")]
    return _pairs([[cell.strip() for cell in row] for row in rows])


def load_configuration(path: str | Path, dims: TorusDims, as_csv: bool = False) -> Configuration:
    text = Path(path).read_text()
    if as_csv:
        return Configuration(dims, parse_csv_points(text))
    return configuration_from_json(json.loads(text), dims)


def render_ascii(cfg: Configuration) -> str:
    """Grid picture, row y = n - 1 on top; ``o`` marks a chosen point."""
    chosen = set(cfg.points)
    rows = []
    for y in reversed(range(cfg.dims.n)):
        rows.append(" ".join("o" if (x, y) in chosen else "." for x in range(cfg.dims.m)))
    return "\n".join(rows)
