"""Sequence file format shared by the library and the CLI.

JSON layout: {"name": str, "mode": "exact"|"float", "n": int,
"values": [...]} where an exact value is a two-element array of decimal
strings [numerator, denominator] (arbitrary precision) and a float value
is a plain JSON number.  The values array holds indices 1..n in order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .ring import ArithFunc, EXACT, FLOAT


def to_json_obj(f: ArithFunc, name: str = "sequence") -> dict:
    if f.mode == EXACT:
        values = [[str(v.numerator), str(v.denominator)] for v in f.values]
    else:
        values = list(f.values)
    return {"name": name, "mode": f.mode, "n": len(f), "values": values}


def to_json(f: ArithFunc, name: str = "sequence") -> str:
    return json.dumps(to_json_obj(f, name), indent=2) + "\n"


def from_json_obj(obj: dict) -> tuple[str, ArithFunc]:
    try:
        name = obj["name"]
        mode = obj["mode"]
        n = obj["n"]
        raw = obj["values"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"sequence object is missing field {exc}") from None
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown mode {mode!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if len(raw) != n:
        raise ValueError(f"declared n = {n} but {len(raw)} values present")
    if mode == EXACT:
        values = []
        for item in raw:
            num, den = item
            values.append(Fraction(int(num), int(den)))
    else:
        values = [float(v) for v in raw]
    return name, ArithFunc(values, mode)


def load(path: str | Path) -> tuple[str, ArithFunc]:
    with open(path, "r", encoding="utf-8") as handle:
        return from_json_obj(json.load(handle))


def save(f: ArithFunc, path: str | Path, name: str = "sequence") -> None:
    Path(path).write_text(to_json(f, name), encoding="utf-8")


def scalar_str(v) -> str:
    """Render one scalar: integers bare, other rationals as num/den."""
    return str(v)


def to_csv(f: ArithFunc) -> str:
    """One comma-separated row of scalars in index order."""
    return ",".join(scalar_str(v) for v in f.values) + "\n"


def to_table(f: ArithFunc, name: str = "sequence") -> str:
    width = len(str(len(f)))
    lines = [f"# {name} (mode={f.mode}, n={len(f)})"]
    for i, v in enumerate(f.values, start=1):
        lines.append(f"{i:>{width}}  {scalar_str(v)}")
    return "\n".join(lines) + "\n"


def render(f: ArithFunc, fmt: str, name: str = "sequence") -> str:
    if fmt == "json":
        return to_json(f, name)
    if fmt == "csv":
        return to_csv(f)
    if fmt == "table":
        return to_table(f, name)
    raise ValueError(f"unknown format {fmt!r}")
