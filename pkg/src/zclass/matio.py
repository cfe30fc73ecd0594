"""Matrix file format shared by Gram matrices and group elements.

Line 1 is "n p e"; the next n lines hold n whitespace-separated canonical
element indices each.
"""

from __future__ import annotations

import numpy as np

from .ff import FieldSpec, field_make


def parse_matrix(text: str) -> tuple[FieldSpec, np.ndarray]:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("header must be 'n p e'")
    try:
        n, p, e = (int(x) for x in head)
    except ValueError:
        raise ValueError("header must hold three integers") from None
    if n < 1:
        raise ValueError("n must be >= 1")
    spec = field_make(p, e)
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise ValueError(f"expected {n} entries per row")
        row = [int(x) for x in parts]
        if any(not 0 <= x < spec.order for x in row):
            raise ValueError("entry out of range for this field")
        rows.append(row)
    return spec, np.array(rows, dtype=np.int16)


def format_matrix(spec: FieldSpec, m: np.ndarray) -> str:
    n = m.shape[0]
    lines = [f"{n} {spec.p} {spec.e}"]
    for row in m:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def read_matrix_file(path) -> tuple[FieldSpec, np.ndarray]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix(fh.read())
