"""Deterministic JSON reports and CSV scans.

Report files contain only quantities that follow from the configuration;
timestamps, wall time and the kernel backend go to ``<out>.meta.json`` so
repeated runs produce byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
import math
import platform
import time
from pathlib import Path
from typing import Any, Iterable

from . import kernels
from .parallel import thread_cap
from .pseudo_gamma import BoundReport

CSV_HEADER = ["index", "re_s", "im_s", "log_mod", "arg", "extra", "error"]


def _clean(x: Any) -> Any:
    if isinstance(x, float) and not math.isfinite(x):
        return repr(x)
    if isinstance(x, dict):
        return {k: _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, complex):
        return [_clean(x.real), _clean(x.imag)]
    return x


def build_document(suite: str, config: dict, params: dict | None, reports: list[BoundReport]) -> dict:
    asserted = [r for r in reports if r.asserted]
    failures = [r.name for r in asserted if not r.holds]
    return {
        "suite": suite,
        "config": config,
        "params": params,
        "summary": {
            "checks": len(reports),
            "asserted": len(asserted),
            "asserted_failures": len(failures),
            "failed": failures,
            "all_asserted_hold": not failures,
        },
        "checks": [r.to_dict() for r in reports],
    }


def dumps(doc: dict) -> str:
    # repr-based float output is the shortest string that round-trips
    return json.dumps(_clean(doc), indent=2, allow_nan=False) + "\n"


def write_json(path: str | Path, doc: dict) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def write_meta(path: str | Path, started: float, extra: dict | None = None) -> None:
    meta = {
        "created_utc": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "wall_time_s": time.perf_counter() - started,
        "kernel_backend": kernels.BACKEND,
        "threads": thread_cap(),
        "python": platform.python_version(),
    }
    meta.update(extra or {})
    Path(str(path) + ".meta.json").write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")


def fmt(x: float | None) -> str:
    """At least 17 significant digits, so every double survives the text round trip."""
    if x is None:
        return ""
    return format(x, ".17g")


def csv_text(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([
            r["index"],
            fmt(r["re_s"]),
            fmt(r["im_s"]),
            fmt(r.get("log_mod")),
            fmt(r.get("arg")),
            fmt(r.get("extra")),
            r.get("error", ""),
        ])
    return buf.getvalue()
