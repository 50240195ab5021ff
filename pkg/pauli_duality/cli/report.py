"""Report assembly and CSV / JSON / text rendering."""

from __future__ import annotations

import csv
import io
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import BaseModel

from pauli_duality.cli.config import OutputFormat

logger = logging.getLogger(__name__)


def format_value(value: Any) -> str:
    """Fixed formatting: floats with 17 significant digits, lowercase exponent."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.16e}"
    if isinstance(value, (list, tuple)):
        return ";".join(format_value(v) for v in value)
    return str(getattr(value, "value", value))


class ReportDocument(BaseModel):
    command: str
    columns: list[str]
    rows: list[dict[str, Any]]
    summary: dict[str, Any]


class Report:
    """Ordered table of grid points plus a summary footer."""

    def __init__(self, command: str, columns: Sequence[str]):
        self.command = command
        self.columns = list(columns)
        self.rows: list[dict[str, Any]] = []
        self.summary: dict[str, Any] = {}

    def add_row(self, **values: Any) -> None:
        unknown = set(values) - set(self.columns)
        if unknown:
            raise KeyError(f"unknown report columns: {sorted(unknown)}")
        self.rows.append({column: values.get(column) for column in self.columns})

    def note(self, **values: Any) -> None:
        self.summary.update(values)

    def fail(self, detail: str) -> None:
        self.summary["passed"] = False
        self.summary["error"] = detail

    # rendering ------------------------------------------------------------------

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_value(row[c]) for c in self.columns])
        if self.summary:
            footer = " ".join(f"{k}={format_value(v)}" for k, v in self.summary.items())
            buffer.write(f"# {footer}\n")
        return buffer.getvalue()

    def to_json(self) -> str:
        document = ReportDocument(
            command=self.command,
            columns=self.columns,
            rows=[{k: _plain(v) for k, v in row.items()} for row in self.rows],
            summary={k: _plain(v) for k, v in self.summary.items()},
        )
        return document.model_dump_json(indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command={self.command}"]
        for index, row in enumerate(self.rows, start=1):
            body = " ".join(f"{k}={format_value(v)}" for k, v in row.items())
            lines.append(f"[{index}] {body}")
        for key, value in self.summary.items():
            lines.append(f"{key}={format_value(value)}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: OutputFormat | str = OutputFormat.CSV) -> str:
        fmt = OutputFormat(fmt)
        if fmt is OutputFormat.JSON:
            return self.to_json()
        if fmt is OutputFormat.TEXT:
            return self.to_text()
        return self.to_csv()

    def write(self, out: Path | str | None, fmt: OutputFormat | str = OutputFormat.CSV) -> None:
        text = self.render(fmt)
        if out is None:
            sys.stdout.write(text)
            return
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Report written to {path}")


def _plain(value: Any) -> Any:
    if isinstance(value, tuple):
        return list(value)
    return getattr(value, "value", value)
