"""Render traces as the paper-style table, JSON and CSV."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .config import MachineConfig
from .decimal_value import DecimalValue, from_literal
from .engine import Trace, TraceRow, Write
from .mill import Operation
from .store import StoreSnapshot


@dataclass(frozen=True)
class TableLayout:
    store_columns: tuple[int, ...]
    show_symbolic: bool = True

    def __post_init__(self):
        if not self.store_columns:
            raise ValueError("a table needs at least one store column")
        if len(set(self.store_columns)) != len(self.store_columns):
            raise ValueError("duplicate store columns")


def default_layout(t: Trace) -> TableLayout | None:
    """Every address the trace touches, in address order."""
    addrs = set()
    for r in t.rows:
        addrs.update(r.reads)
        addrs.update(a for a, _ in r.saves)
        if r.write is not None:
            addrs.add(r.write.addr)
    return TableLayout(tuple(sorted(addrs))) if addrs else None


def show(v: DecimalValue) -> str:
    return str(v).replace("-", "−")


def row_cells(r: TraceRow) -> dict[int, str]:
    cells = {a: "0" for a in r.zeroed}
    for a, v in r.saves:
        cells[a] = show(v)
    if r.write is not None:
        cells[r.write.addr] = show(r.write.value)
    return cells


def render_table(t: Trace, layout: TableLayout | None = None) -> str:
    layout = layout or default_layout(t)
    columns = layout.store_columns if layout else ()
    symbolic = layout.show_symbolic if layout else True
    header = ["n", "nature", *(f"v{a}" for a in columns)]
    if symbolic:
        header.append("code")
    body = []
    for r in t.rows:
        cells = row_cells(r)
        line = [f"{r.n} *" if r.result else str(r.n), r.nature.glyph if r.nature else ""]
        line += [cells.get(a, "") for a in columns]
        if symbolic:
            line.append(r.comment)
        body.append(line)
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]

    def fmt(row):
        return " | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()

    lines = [fmt(header), "-+-".join("-" * w for w in widths)]
    lines += [fmt(row) for row in body]
    return "\n".join(lines) + "\n"


def _row_dict(r: TraceRow) -> dict:
    return {
        "n": r.n,
        "nature": r.nature.value if r.nature else None,
        "reads": list(r.reads),
        "saves": [{"to": a, "value": str(v)} for a, v in r.saves],
        "write": (
            {"addr": r.write.addr, "value": str(r.write.value), "prime": r.write.prime}
            if r.write is not None
            else None
        ),
        "comment": r.comment,
        "result": r.result,
    }


def to_json(t: Trace) -> str:
    doc = {
        "digits": t.final_store.digit_width,
        "rows": [_row_dict(r) for r in t.rows],
        "final": t.final_store.to_dict(),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> Trace:
    doc = json.loads(text)
    width = doc["digits"]
    config = MachineConfig(digit_width=width)
    rows = []
    for r in doc["rows"]:
        w = r["write"]
        rows.append(
            TraceRow(
                n=r["n"],
                nature=Operation(r["nature"]) if r["nature"] else None,
                reads=tuple(r["reads"]),
                saves=tuple((s["to"], from_literal(s["value"], config)) for s in r["saves"]),
                write=Write(w["addr"], from_literal(w["value"], config), w["prime"]) if w else None,
                comment=r["comment"],
                result=r.get("result", False),
            )
        )
    return Trace(tuple(rows), StoreSnapshot.from_dict(doc["final"], width))


CSV_COLUMNS = ["n", "nature", "reads", "saves", "write_addr", "write_value", "prime", "comment"]


def to_csv(t: Trace) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in t.rows:
        w.writerow([
            r.n,
            r.nature.value if r.nature else "",
            " ".join(str(a) for a in r.reads),
            " ".join(f"{a}:{v}" for a, v in r.saves),
            r.write.addr if r.write else "",
            str(r.write.value) if r.write else "",
            r.write.prime if r.write else "",
            r.comment,
        ])
    return buf.getvalue()
