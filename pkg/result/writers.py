"""
Output writers: JSON, CSV (polars) and plain text.

A handler payload is a dict; when it carries a "rows" list of flat records those become the
CSV table, otherwise the payload itself is flattened into one record.
"""
import io
import os
import sys
import json
from typing import Any, Dict, List, Optional, Sequence

import polars as pl

from logger import logger_access
from utils.constants import FORMAT_CSV, FORMAT_JSON, FORMAT_PLAIN, OUTPUT_FORMATS
from utils.utils_general import to_json


def _cell(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return to_json(value)


def _records(payload: Dict[str, Any]) -> List[Dict[str, Any]]:
    rows = payload.get("rows")
    if isinstance(rows, list) and rows:
        return [{k: _cell(v) for k, v in row.items()} for row in rows]
    return [{k: _cell(v) for k, v in payload.items() if k != "rows"}]


def render_csv(records: Sequence[Dict[str, Any]]) -> str:
    # every column as text keeps mixed int / fraction columns intact
    frame = pl.DataFrame([{k: None if v is None else str(v) for k, v in r.items()} for r in records],
                         infer_schema_length=None)
    buffer = io.StringIO()
    frame.write_csv(buffer)
    return buffer.getvalue()


def render_plain(payload: Dict[str, Any]) -> str:
    lines = []
    for key, value in payload.items():
        if key == "rows":
            continue
        lines.append(f"{key}: {value if isinstance(value, (str, int, float, bool)) else to_json(value)}")
    rows = payload.get("rows")
    if isinstance(rows, list) and rows:
        header = list(rows[0].keys())
        lines.append("\t".join(header))
        for row in rows:
            lines.append("\t".join(str(_cell(row.get(k, ""))) for k in header))
    return "\n".join(lines) + "\n"


def render(payload: Dict[str, Any], fmt: str = FORMAT_JSON) -> str:
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"unknown output format {fmt!r}, expected one of {OUTPUT_FORMATS}")
    if fmt == FORMAT_JSON:
        return to_json(payload) + "\n"
    if fmt == FORMAT_CSV:
        return render_csv(_records(payload))
    return render_plain(payload)


def write_output(payload: Dict[str, Any], fmt: str = FORMAT_JSON, out: Optional[str] = None, stream=None) -> str:
    """
    Render a payload and send it to a file or a stream.

    Args:
        payload (dict): handler result.
        fmt (str, optional): json, csv or plain.
        out (str, optional): file path; the stream is used when omitted.
        stream (optional): text stream, stdout when omitted.

    Returns:
        str: the rendered text.
    """
    text = render(payload, fmt)
    if out:
        directory = os.path.dirname(out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
        logger_access.info(f"💾 output written to {out}")
    else:
        (stream or sys.stdout).write(text)
    return text


def write_reports(reports: Sequence, directory: str, stem: str) -> Dict[str, str]:
    """
    Archive experiment reports as <stem>.json (full) and <stem>.csv (one row per report).

    Returns:
        dict: the paths written.
    """
    os.makedirs(directory, exist_ok=True)
    json_path = os.path.join(directory, f"{stem}.json")
    csv_path = os.path.join(directory, f"{stem}.csv")
    with open(json_path, "w", encoding="utf-8") as f:
        f.write(json.dumps([r.to_dict() for r in reports], ensure_ascii=False, indent=2))
    with open(csv_path, "w", encoding="utf-8") as f:
        f.write(render_csv([r.to_row() for r in reports]) if reports else "")
    logger_access.info(f"💾 {len(reports)} reports archived to {json_path} and {csv_path}")
    return {"json": json_path, "csv": csv_path}
