"""Sequence files and tabular output.

A sequence file is a JSON document with an integer "offset" and "values",
an array of [re, im] number pairs.  All floating-point output (JSON and
CSV alike) is printed with 17 significant digits, which round-trips doubles
bit-faithfully, so identical jobs produce byte-identical artifacts.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import ValidationError
from .sequence import Sequence


def fmt(x: float) -> str:
    """17-significant-digit decimal form of a double.

    Negative zero needs a decimal point: a bare "-0" is an integer token to
    JSON parsers and would come back as +0.0, breaking bit-exact round-trips.
    """
    s = f"{x:.17g}"
    return "-0.0" if s == "-0" else s


def sequence_to_text(seq: Sequence) -> str:
    rows = ",\n".join(
        f"    [{fmt(v.real)}, {fmt(v.imag)}]" for v in seq.values
    )
    body = f"[\n{rows}\n  ]" if len(seq.values) else "[]"
    return f'{{\n  "offset": {seq.offset},\n  "values": {body}\n}}\n'


def sequence_from_text(text: str) -> Sequence:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed sequence file: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"offset", "values"}:
        raise ValidationError('sequence file must have exactly the fields "offset" and "values"')
    offset = doc["offset"]
    if not isinstance(offset, int) or isinstance(offset, bool):
        raise ValidationError("offset must be an integer")
    values = doc["values"]
    if not isinstance(values, list):
        raise ValidationError("values must be an array of [re, im] pairs")
    out = np.zeros(len(values), dtype=np.complex128)
    for i, pair in enumerate(values):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise ValidationError(f"values[{i}] is not an [re, im] number pair")
        out[i] = complex(pair[0], pair[1])
    return Sequence(offset, out)


def read_sequence(path: str) -> Sequence:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return sequence_from_text(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read sequence file {path}: {exc}") from exc


def write_sequence(seq: Sequence, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(sequence_to_text(seq))


def csv_table(header: list[str], rows: list[list]) -> str:
    """CSV text; floats through fmt, everything else through str."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(x) if isinstance(x, float) else str(x) for x in row))
    return "\n".join(lines) + "\n"


def laurent_to_doc(p) -> dict:
    return {
        "min_deg": p.min_deg,
        "coeffs": [[c.real, c.imag] for c in p.coeffs],
    }


def json_text(doc) -> str:
    """Deterministic JSON with 17-significant-digit floats."""

    def render(node, indent):
        pad = "  " * indent
        if isinstance(node, dict):
            items = [
                f'{pad}  "{k}": {render(v, indent + 1).lstrip()}' for k, v in node.items()
            ]
            return "{\n" + ",\n".join(items) + f"\n{pad}}}"
        if isinstance(node, list):
            if all(not isinstance(x, (dict, list)) for x in node):
                return "[" + ", ".join(render(x, 0) for x in node) + "]"
            items = [f"{pad}  {render(x, indent + 1)}" for x in node]
            return "[\n" + ",\n".join(items) + f"\n{pad}]"
        if isinstance(node, bool):
            return "true" if node else "false"
        if isinstance(node, float):
            return fmt(node)
        if isinstance(node, int):
            return str(node)
        return json.dumps(node)

    return render(doc, 0) + "\n"
