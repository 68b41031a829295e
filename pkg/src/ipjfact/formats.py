"""Text serializations for matrices and error reports.

CSV and JSON are exact: integers are written as decimal digit strings and
rationals as ``p/q`` in lowest terms. Matrix Market output is lossy; each
entry is the shortest round-trip decimal of its nearest binary64.
"""
from __future__ import annotations

import enum
import json
from fractions import Fraction

from .exact_matrix import IntegerMatrix, Matrix, RationalMatrix


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
    MM = "mm"


MM_HEADER = "%%MatrixMarket matrix array real general"
REPORT_COLUMNS = ["n", "cond_inf", "lu_max_rel_err", "formula_max_rel_err"]


def format_scalar(x) -> str:
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_scalar(s: str):
    x = Fraction(s.strip())
    return x.numerator if x.denominator == 1 else x


def _from_entries(entries) -> Matrix:
    vals = [[parse_scalar(s) for s in row] for row in entries]
    if all(isinstance(v, int) for row in vals for v in row):
        return IntegerMatrix(vals)
    return RationalMatrix(vals)


def matrix_to_csv(a: Matrix) -> str:
    return "".join(",".join(format_scalar(x) for x in row) + "\n" for row in a.rows)


def matrix_from_csv(text: str) -> Matrix:
    return _from_entries(line.split(",") for line in text.splitlines() if line.strip())


def matrix_to_json(a: Matrix, kind: str) -> str:
    doc = {"n": a.n, "kind": kind,
           "entries": [[format_scalar(x) for x in row] for row in a.rows]}
    return json.dumps(doc) + "\n"


def matrix_from_json(text: str) -> Matrix:
    doc = json.loads(text)
    a = _from_entries(doc["entries"])
    if a.n != doc["n"]:
        raise ValueError(f"declared n={doc['n']} but found {a.n} rows")
    return a


def dense_to_mm(rows: list[list[float]]) -> str:
    nrows, ncols = len(rows), len(rows[0])
    lines = [MM_HEADER, f"{nrows} {ncols}"]
    lines += [repr(float(rows[i][j])) for j in range(ncols) for i in range(nrows)]
    return "\n".join(lines) + "\n"


def matrix_to_mm(a: Matrix) -> str:
    return dense_to_mm([[_to_float(x) for x in row] for row in a.rows])


def parse_mm(text: str) -> list[list[float]]:
    """Read a dense ``array real general`` file back into nested lists."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip().lower() != MM_HEADER.lower():
        raise ValueError("not a dense real general Matrix Market file")
    body = [ln for ln in lines[1:] if not ln.startswith("%")]
    nrows, ncols = map(int, body[0].split())
    vals = [float(v) for v in body[1:]]
    if len(vals) != nrows * ncols:
        raise ValueError("entry count does not match declared size")
    return [[vals[j * nrows + i] for j in range(ncols)] for i in range(nrows)]


def _to_float(x) -> float:
    try:
        return float(x)
    except OverflowError:
        return float("inf") if x > 0 else float("-inf")


def _report_rows(reports) -> list[list[str]]:
    return [[str(r.n), format_scalar(r.cond_inf), repr(r.lu_max_rel_err),
             repr(r.formula_max_rel_err)] for r in reports]


def reports_to_text(reports, fmt: OutputFormat) -> str:
    rows = _report_rows(reports)
    if fmt is OutputFormat.CSV:
        return "".join(",".join(r) + "\n" for r in rows)
    if fmt is OutputFormat.JSON:
        doc = {"n": len(rows), "kind": "report", "columns": REPORT_COLUMNS,
               "entries": rows}
        return json.dumps(doc) + "\n"
    return dense_to_mm([[float(r.n), _to_float(r.cond_inf), r.lu_max_rel_err,
                 r.formula_max_rel_err] for r in reports])


def matrix_to_text(a: Matrix, fmt: OutputFormat, kind: str) -> str:
    if fmt is OutputFormat.CSV:
        return matrix_to_csv(a)
    if fmt is OutputFormat.JSON:
        return matrix_to_json(a, kind)
    return matrix_to_mm(a)
