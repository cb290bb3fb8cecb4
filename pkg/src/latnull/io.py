"""The ``.lat`` lattice format, CSV operation tables and DOT output.

A ``.lat`` file has one directive per line::

    lattice M3
    elements 0 p a q 1
    bottom 0
    top 1
    zero a          # optional
    cover 0 p       # 0 is covered by p; "cover 0 < p" also accepted

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .axioms import OpTable
from .constructions import UNDETERMINED, PartialOpTable
from .errors import DuplicateElement, ParseError, UnknownLabel
from .lattice import CoverSpec, Lattice, build_from_covers

__all__ = [
    "FIXTURES",
    "LatticeDocument",
    "emit_dot",
    "emit_op_table_csv",
    "format_lattice_file",
    "load_fixture",
    "parse_lattice_file",
    "parse_op_table_csv",
    "read_lattice_file",
]

UNDETERMINED_MARK = "?"
FIXTURES = ("M3", "GRID23", "OBSTRUCT9", "KITE7", "KITE7_DUAL", "LADDER7", "LADDER8", "CHAIN3")


@dataclass(frozen=True)
class LatticeDocument:
    name: str
    spec: CoverSpec
    zero: str | None = None

    def lattice(self) -> Lattice:
        return build_from_covers(self.spec)


def parse_lattice_file(text: str) -> LatticeDocument:
    name = ""
    elements = None
    bottom = top = zero = None
    covers = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *args = line.split()
        if word == "lattice":
            if len(args) != 1:
                raise ParseError("expected 'lattice NAME'", lineno)
            name = args[0]
        elif word == "elements":
            if elements is not None:
                raise ParseError("'elements' given twice", lineno)
            if not args:
                raise ParseError("'elements' needs at least one label", lineno)
            elements = []
            for label in args:
                if label == UNDETERMINED_MARK:
                    raise ParseError(f"{UNDETERMINED_MARK!r} is reserved and cannot be a label", lineno)
                if label in seen:
                    raise DuplicateElement(f"element {label!r} declared twice", lineno)
                seen[label] = len(elements)
                elements.append(label)
        elif word in ("bottom", "top", "zero"):
            if len(args) != 1:
                raise ParseError(f"expected '{word} LABEL'", lineno)
            _known(seen, args[0], lineno)
            if word == "bottom":
                bottom = args[0]
            elif word == "top":
                top = args[0]
            else:
                zero = args[0]
        elif word == "cover":
            if len(args) == 3 and args[1] == "<":
                args = [args[0], args[2]]
            if len(args) != 2:
                raise ParseError("expected 'cover LOWER UPPER'", lineno)
            lo, hi = args
            _known(seen, lo, lineno)
            _known(seen, hi, lineno)
            if lo == hi:
                raise ParseError(f"self-cover {lo!r} < {hi!r}", lineno)
            covers.append((lo, hi))
        else:
            raise ParseError(f"unknown directive {word!r}", lineno)
    if elements is None:
        raise ParseError("missing 'elements' line")
    if bottom is None or top is None:
        raise ParseError("missing 'bottom' or 'top' line")
    if zero is not None and zero in (bottom, top):
        raise ParseError(f"zero {zero!r} must differ from bottom and top")
    return LatticeDocument(name, CoverSpec(tuple(elements), tuple(covers), bottom, top), zero)


def _known(seen, label, lineno):
    if label not in seen:
        raise UnknownLabel(f"unknown element {label!r}", lineno)


def format_lattice_file(doc: LatticeDocument) -> str:
    spec = doc.spec
    lines = []
    if doc.name:
        lines.append(f"lattice {doc.name}")
    lines.append("elements " + " ".join(spec.names))
    lines.append(f"bottom {spec.bottom}")
    lines.append(f"top {spec.top}")
    if doc.zero is not None:
        lines.append(f"zero {doc.zero}")
    lines.extend(f"cover {lo} {hi}" for lo, hi in spec.covers)
    return "\n".join(lines) + "\n"


def read_lattice_file(path) -> LatticeDocument:
    return parse_lattice_file(Path(path).read_text(encoding="utf-8"))


def load_fixture(name: str) -> LatticeDocument:
    """One of the bundled fixtures, e.g. ``load_fixture("M3")``."""
    if name.upper() not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    text = resources.files("latnull").joinpath("data", f"{name.lower()}.lat").read_text("utf-8")
    return parse_lattice_file(text)


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(L: Lattice, name: str = "L") -> str:
    """Hasse diagram as a DOT digraph, edges pointing from lower to upper."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    lines.extend(f"  {_quote(label)};" for label in L.names)
    lines.extend(f"  {_quote(L.names[x])} -> {_quote(L.names[y])};" for x, y in L.covers())
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_op_table_csv(table: OpTable | PartialOpTable) -> str:
    names = table.lattice.names
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["", *names])
    for x, row in enumerate(table.cells):
        writer.writerow([names[x], *(UNDETERMINED_MARK if v == UNDETERMINED else names[v] for v in row)])
    return buf.getvalue()


def parse_op_table_csv(text: str, L: Lattice, a=None):
    """Read a table written by ``emit_op_table_csv``.

    Rows and columns may come in any order but must name every element once.
    Returns an OpTable, or a PartialOpTable (needs ``a``) if any cell is ``?``.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ParseError("empty table")
    header = [c.strip() for c in rows[0][1:]]
    cols = _label_order(L, header, 1, "column")
    row_labels = [r[0].strip() for r in rows[1:]]
    order = _label_order(L, row_labels, None, "row")
    cells = np.full((L.n, L.n), UNDETERMINED, dtype=np.intp)
    for lineno, (x, row) in enumerate(zip(order, rows[1:]), start=2):
        if len(row) != L.n + 1:
            raise ParseError(f"expected {L.n + 1} fields, got {len(row)}", lineno)
        for y, value in zip(cols, row[1:]):
            value = value.strip()
            if value != UNDETERMINED_MARK:
                try:
                    cells[x, y] = L.id(value)
                except UnknownLabel as exc:
                    raise UnknownLabel(str(exc), lineno) from None
    if (cells == UNDETERMINED).any():
        if a is None:
            raise ParseError("table has undetermined cells; a zero element is required")
        return PartialOpTable(L, L.check_zero(a), cells)
    return OpTable(L, cells)


def _label_order(L, labels, lineno, what):
    if sorted(labels) != sorted(L.names) or len(set(labels)) != len(labels):
        raise ParseError(f"table {what} labels {labels} do not match the lattice elements", lineno)
    return [L.id(label) for label in labels]
