"""Serialization of matrix factorizations and rendering of Betti data.

The matrix-factorization document is canonical JSON (sorted keys, two-space
indent, trailing newline).  Polynomials are lists of
``{"coefficient": "num/den", "exponents": [...]}`` in graded-lex order, so
``encode_mf(decode_mf(doc).mf, ...) == doc`` byte for byte.
"""

import json
from dataclasses import dataclass
from typing import Optional

from .betti import complete_resolution, laurent_text
from .errors import ParseError, VerificationFailedError
from .fields import field_from_descriptor
from .matfac import MatrixFactorization, verify_mf
from .matrix import PolyMatrix
from .poly import MultiPoly

FORMAT_TAG = "cubicmcm-mf/1"


@dataclass
class MFDocument:
    mf: MatrixFactorization
    psi: Optional[object] = None

    @property
    def field(self):
        return self.mf.field

    @property
    def variables(self):
        return self.mf.f.names


def poly_to_struct(p):
    fmt = p.field.format
    return [{"coefficient": fmt(c), "exponents": list(e)} for e, c in p.sorted_terms()]


def poly_from_struct(data, field, names):
    if not isinstance(data, list):
        raise ParseError("polynomial must be a list of terms")
    terms = {}
    for t in data:
        try:
            exps = tuple(int(e) for e in t["exponents"])
            coef = field.parse(str(t["coefficient"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad term {t!r}") from exc
        if len(exps) != len(names):
            raise ParseError(f"term {t!r} has {len(exps)} exponents for {len(names)} variables")
        if exps in terms:
            raise ParseError(f"repeated monomial {list(exps)}")
        terms[exps] = coef
    return MultiPoly(field, len(names), terms, names)


def matrix_to_struct(m):
    return [[poly_to_struct(e) for e in row] for row in m]


def matrix_from_struct(data, field, names):
    if not isinstance(data, list) or not data:
        raise ParseError("matrix must be a nonempty list of rows")
    return PolyMatrix([[poly_from_struct(e, field, names) for e in row] for row in data])


def encode_mf(mf, psi=None):
    fld = mf.field
    doc = {
        "format": FORMAT_TAG,
        "field": fld.descriptor,
        "variables": list(mf.f.names),
        "psi": None if psi is None else fld.format(psi),
        "f": poly_to_struct(mf.f),
        "A": matrix_to_struct(mf.A),
        "B": matrix_to_struct(mf.B),
        "row_degrees": None if mf.row_degrees is None else list(mf.row_degrees),
        "col_degrees": None if mf.col_degrees is None else list(mf.col_degrees),
        "note": mf.note,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def decode_mf(text, verify=True):
    """Parse an MF document; unless ``verify`` is False, re-run :func:`verify_mf`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", 1, 1)
    if doc.get("format") != FORMAT_TAG:
        raise ParseError(f"unsupported format tag {doc.get('format')!r}")
    try:
        fld = field_from_descriptor(doc["field"])
        names = tuple(doc["variables"])
        f = poly_from_struct(doc["f"], fld, names)
        A = matrix_from_struct(doc["A"], fld, names)
        B = matrix_from_struct(doc["B"], fld, names)
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    psi = doc.get("psi")
    psi = None if psi is None else fld.parse(str(psi))
    rows, cols = doc.get("row_degrees"), doc.get("col_degrees")
    mf = MatrixFactorization(
        f, A, B,
        None if rows is None else tuple(rows),
        None if cols is None else tuple(cols),
        doc.get("note", ""),
    )
    if verify:
        report = verify_mf(mf)
        if not report.ok:
            raise VerificationFailedError("; ".join(report.problems))
    return MFDocument(mf, psi)


# rendering


def table_rows(table):
    """Rows ``(l, beta[0, l], beta[1, l + 1])`` in the compact layout, l ascending."""
    ls = [j - i for i, j in table.window] or [0]
    lo, hi = min(min(ls), 0), max(max(ls), 2)
    return [(l, table.at(0, l), table.at(1, l + 1)) for l in range(lo, hi + 1)]


def render_table_text(table, title=None):
    rows = table_rows(table)
    width = max(3, *(len(str(v)) for _, a, b in rows for v in (a, b)))
    lines = [title] if title else []
    lines.append(" " * 5 + f"{'i=0':>{width}}  {'i=1':>{width}}")
    for l, a, b in rows:
        lines.append(f"{l:>3}: {a:>{width}}  {b:>{width}}")
    return "\n".join(lines)


def render_table_tex(table):
    rows = table_rows(table)
    body = " \\\\\n".join(f"{l} & {a} & {b}" for l, a, b in rows)
    return ("\\begin{array}{|r|r|r|}\n\\hline\n"
            "j & i=0 & i=1 \\\\\n\\hline\n" + body + " \\\\\n\\hline\n\\end{array}")


def table_to_json(table):
    return [{"i": i, "j": j, "value": v} for (i, j), v in table.window.items()]


def render_resolution_text(desc, steps):
    lines = []
    for i, degrees in complete_resolution(desc, steps):
        summands = " + ".join(
            f"R({-j})" + (f"^{m}" if m != 1 else "") for j, m in sorted(degrees.items())
        ) or "0"
        lines.append(f"{i:>4}: {summands}")
    return "\n".join(lines)


def render_resolution_tex(desc, steps):
    # one column per homological position, one row per internal degree
    res = complete_resolution(desc, steps)
    js = sorted({j for _, deg in res for j in deg})
    head = " & ".join(f"[{i}]" if i == 0 else str(i) for i, _ in res)
    rows = []
    for j in js:
        rows.append(f"{j} & " + " & ".join(str(deg.get(j, "")) for _, deg in res))
    cols = "r|" + "c" * len(res)
    return (f"\\begin{{array}}{{{cols}}}\nj & {head} \\\\\n\\hline\n"
            + " \\\\\n".join(rows) + "\n\\end{array}")


def hilbert_to_json(data):
    return {
        "B": {str(k): v for k, v in data.B.items()},
        "P": {str(k): v for k, v in data.P.items()},
        "B_text": laurent_text(data.B),
        "P_text": laurent_text(data.P),
        "e": data.e,
        "mu": data.mu,
        "rank": data.rank,
    }


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)

