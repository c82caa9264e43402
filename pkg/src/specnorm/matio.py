"""Plain-text matrix files: a header line "m n" followed by m rows of n numbers."""

import numpy as np

from .errors import ParseError


def _number(tok, line_no):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        val = float(tok)
    except ValueError:
        raise ParseError(f"line {line_no}: cannot parse {tok!r} as a number", line_no) from None
    if not np.isfinite(val):
        raise ParseError(f"line {line_no}: non-finite entry {tok!r}", line_no)
    return val


def parse_matrix(text):
    """Return an int64 array when every entry is an integer literal, else float64."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty matrix file", 0)
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise ParseError(f"header must be 'm n', got {lines[0]!r}", 1)
    m, n = int(head[0]), int(head[1])
    if m < 1 or n < 1:
        raise ParseError("matrix dimensions must be positive", 1)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} rows, found {len(body)}", len(lines))
    rows = []
    for r, ln in enumerate(body, start=2):
        toks = ln.split()
        if len(toks) != n:
            raise ParseError(f"line {r}: expected {n} entries, found {len(toks)}", r)
        rows.append([_number(t, r) for t in toks])
    if all(isinstance(v, int) for row in rows for v in row):
        return np.array(rows, dtype=np.int64)
    return np.array(rows, dtype=float)


def read_matrix(path):
    with open(path) as fh:
        return parse_matrix(fh.read())


def format_matrix(a):
    a = np.asarray(a)
    out = [f"{a.shape[0]} {a.shape[1]}"]
    integral = np.issubdtype(a.dtype, np.integer) or np.all(a == np.rint(a))
    for row in a:
        if integral:
            out.append(" ".join(str(int(v)) for v in row))
        else:
            out.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(out) + "\n"


def write_matrix(path, a):
    with open(path, "w") as fh:
        fh.write(format_matrix(a))
