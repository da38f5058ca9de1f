"""Machine-readable result records and their CSV/JSON emission.

JSON output is a single top-level array of records; CSV output is the
record's tabular projection with a fixed, documented header per subcommand.
Floats are printed with 17 significant digits so parsed values round-trip
bit-identically.  Emission is deterministic: identical records give
identical bytes.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .errors import ConfigError, DomainError

__all__ = ["ResultRecord", "emit", "format_float"]


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise DomainError(f"cannot serialize non-finite float {x}")
    return format(float(x), ".17g")


def _json_escape(s: str) -> str:
    out = ['"']
    escapes = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\r": "\\r", "\t": "\\t"}
    for ch in s:
        if ch in escapes:
            out.append(escapes[ch])
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def _to_json(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, complex):
        return '{"re": %s, "im": %s}' % (format_float(value.real), format_float(value.imag))
    if isinstance(value, str):
        return _json_escape(value)
    if isinstance(value, dict):
        parts = []
        for k, v in value.items():
            if not isinstance(k, str):
                raise DomainError(f"JSON object keys must be strings, got {k!r}")
            parts.append(f"{_json_escape(k)}: {_to_json(v)}")
        return "{" + ", ".join(parts) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in value) + "]"
    raise DomainError(f"cannot serialize {type(value).__name__} to JSON")


@dataclass
class ResultRecord:
    """One subcommand result: echoed inputs, outputs, diagnostics, defaults.

    table_header/table_rows hold the CSV projection of the outputs.
    """

    subcommand: str
    inputs: dict
    outputs: dict
    diagnostics: dict
    defaults: dict
    version: str
    table_header: list = field(default_factory=list)
    table_rows: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "diagnostics": self.diagnostics,
            "defaults": self.defaults,
            "version": self.version,
        }


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, int):
        return str(v)
    return str(v)


def emit(records: list[ResultRecord], fmt: str) -> bytes:
    """Serialize records to bytes in the requested format."""
    if fmt == "json":
        body = "[" + ",\n ".join(_to_json(r.to_dict()) for r in records) + "]\n"
        if not records:
            body = "[]\n"
        return body.encode("utf-8")
    if fmt == "csv":
        if not records:
            return b""
        headers = {tuple(r.table_header) for r in records}
        if len(headers) != 1:
            raise ConfigError("cannot mix subcommand tables in one CSV emission")
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        writer.writerow(records[0].table_header)
        for r in records:
            for row in r.table_rows:
                writer.writerow([_csv_cell(c) for c in row])
        return buf.getvalue().encode("utf-8")
    raise ConfigError(f"unknown output format {fmt!r}")
