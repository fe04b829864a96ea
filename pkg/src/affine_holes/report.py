"""Matrix files and report rendering.

A matrix file is a header line ``m n`` followed by ``m`` lines of ``n``
whitespace-separated integers.  Column indices shown to users are 1-based.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .linalg import IntMat
from .semigroup import HoleReport


def _tokens(line):
    """``(token, 1-based column)`` pairs of a line."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _int(tok, lineno, col):
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None


def parse_mat(text: str) -> IntMat:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("missing header 'rows cols'", 1, 1)
    header = _tokens(lines[0])
    if len(header) != 2:
        raise ParseError(f"header must be 'rows cols', got {len(header)} fields", 1, 1)
    m, n = (_int(t, 1, c) for t, c in header)
    if m < 1 or n < 1:
        raise ParseError(f"matrix dimensions must be positive, got {m} x {n}", 1, 1)
    rows = []
    for k in range(m):
        lineno = k + 2
        if lineno > len(lines):
            raise ParseError(f"expected {m} rows, found {k}", lineno)
        toks = _tokens(lines[lineno - 1])
        if len(toks) != n:
            col = toks[n][1] if len(toks) > n else len(lines[lineno - 1]) + 1
            raise ParseError(f"row {k + 1} has {len(toks)} of {n} entries", lineno, col)
        rows.append(tuple(_int(t, lineno, c) for t, c in toks))
    for extra in range(m + 1, len(lines)):
        if lines[extra].strip():
            raise ParseError(f"unexpected content after {m} rows", extra + 1, _tokens(lines[extra])[0][1])
    return IntMat(tuple(rows))


def render_mat(M: IntMat) -> str:
    lines = [f"{M.m} {M.n}"]
    lines += [" ".join(str(v) for v in row) for row in M.rows]
    return "\n".join(lines) + "\n"


def vec(v) -> str:
    return "[" + " ".join(str(x) for x in v) + "]"


def render_report(report: HoleReport, fmt: str = "text") -> str:
    if fmt == "json":
        doc = {
            "matrix_dims": list(report.matrix_dims),
            "saturated": report.saturated,
            "fundamental_holes": [list(f) for f in report.fundamental_holes],
            "families": [
                {
                    "fundamental": list(fam.fundamental),
                    "base": list(fam.base),
                    "free_columns": [j + 1 for j in fam.free_columns],
                }
                for fam in report.families
            ],
        }
        return json.dumps(doc, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = [f"Found {len(report.fundamental_holes)} fundamental holes."]
    by_hole = {}
    for fam in report.families:
        by_hole.setdefault(fam.fundamental, []).append(fam)
    for f in report.fundamental_holes:
        if f not in by_hole:
            continue
        out.append(f"Standard pairs of {vec(f)}:")
        for i, fam in enumerate(by_hole[f], 1):
            free = ", ".join(f"x{j + 1}" for j in fam.free_columns)
            out.append(f"  {i}: root {vec(fam.root)} free {{{free}}}")
    return "\n".join(out) + "\n"
