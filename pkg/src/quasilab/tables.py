"""Cayley table text format and group spec strings.

Interchange format::

    # optional comments anywhere ('#' to end of line)
    order 3
    0 2 1
    1 0 2
    2 1 0

Group specs are products of cyclic groups: "Z4", "Z2xZ2", "Z3xZ9"
(case-insensitive, 'x' separates factors).
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Optional, Union

from .abelian import AbelianGroup, cyclic, direct_product
from .errors import GroupSpecError, TableFormatError
from .quasigroup import Quasigroup, from_table

__all__ = [
    "parse_table_text",
    "format_table",
    "read_table",
    "write_table",
    "parse_group_spec",
]


def parse_table_text(text: str, label: Optional[str] = None) -> Quasigroup:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise TableFormatError("empty table text")
    head = lines[0].split()
    if len(head) != 2 or head[0].lower() != "order":
        raise TableFormatError(f"first line must be 'order n', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise TableFormatError(f"bad order {head[1]!r}") from None
    if n < 1:
        raise TableFormatError(f"order must be positive, got {n}")
    body = lines[1:]
    if len(body) != n:
        raise TableFormatError(f"expected {n} rows, got {len(body)}")
    rows = []
    for i, line in enumerate(body):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise TableFormatError(f"row {i}: non-integer entry in {line!r}") from None
        if len(row) != n:
            raise TableFormatError(f"row {i}: expected {n} entries, got {len(row)}")
        rows.append(row)
    return from_table(n, rows, label=label)


def format_table(q: Quasigroup, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"order {q.order}")
    out.extend(" ".join(str(int(v)) for v in row) for row in q.table)
    return "\n".join(out) + "\n"


def read_table(path: Union[str, Path]) -> Quasigroup:
    p = Path(path)
    return parse_table_text(p.read_text(), label=p.name)


def write_table(path: Union[str, Path], q: Quasigroup, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_table(q, comments))


_FACTOR_RE = re.compile(r"^z(\d+)$")


def parse_group_spec(spec: str) -> AbelianGroup:
    """Build the abelian group named by a spec like 'Z4' or 'Z2xZ2'."""
    parts = spec.strip().lower().split("x")
    orders = []
    for part in parts:
        m = _FACTOR_RE.match(part.strip())
        if not m:
            raise GroupSpecError(f"bad group spec {spec!r}: factor {part.strip()!r} is not Z<n>")
        k = int(m.group(1))
        if k < 1:
            raise GroupSpecError(f"bad group spec {spec!r}: cyclic order must be >= 1")
        orders.append(k)
    group = direct_product([cyclic(k) for k in orders])
    normalized = "x".join(f"Z{k}" for k in orders)
    return AbelianGroup(group.table, factors=group.factors, label=normalized)
