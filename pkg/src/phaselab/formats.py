"""JSON file formats for frames and arrangements.

Frame::

    {"dim": 3, "scalars": "rational", "vectors": [["1", "0", "1/2"], ...]}

Arrangement::

    {"dim": 3, "scalars": "rational",
     "subspaces": [{"normal": ["1", "-1", "0"]}, {"basis": [["0", "1", "0"], ["0", "0", "1"]]}]}

Rational entries are strings "p/q" or "p" (JSON integers are accepted too).
Float entries are JSON numbers. ``scalars`` defaults to "rational".
"""

from __future__ import annotations

import json
from fractions import Fraction

from .frames import Frame
from .linalg import EXACT, FLOAT
from .subspaces import Arrangement, Subspace

SCALARS = {"rational": EXACT, "float": FLOAT}
_NAMES = {v: k for k, v in SCALARS.items()}


class FormatError(ValueError):
    """Malformed input file; the message names the offending field."""


def _scalar(value, backend: str, where: str):
    if backend == EXACT:
        if isinstance(value, bool) or isinstance(value, float):
            raise FormatError(f"{where}: rational entries must be strings 'p/q' or integers, got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"{where}: cannot parse {value!r} as a rational") from None
        raise FormatError(f"{where}: expected a rational, got {type(value).__name__}")
    if isinstance(value, bool):
        raise FormatError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{where}: cannot parse {value!r} as a number") from None
    raise FormatError(f"{where}: expected a number, got {type(value).__name__}")


def _vector(raw, backend: str, dim: int, where: str) -> list:
    if not isinstance(raw, list):
        raise FormatError(f"{where}: expected a list of {dim} entries")
    if len(raw) != dim:
        raise FormatError(f"{where}: expected {dim} entries, got {len(raw)}")
    return [_scalar(v, backend, f"{where}[{j}]") for j, v in enumerate(raw)]


def _header(doc) -> tuple[int, str]:
    if not isinstance(doc, dict):
        raise FormatError("top level: expected a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError(f"dim: expected a positive integer, got {dim!r}")
    name = doc.get("scalars", "rational")
    if name not in SCALARS:
        raise FormatError(f"scalars: expected 'rational' or 'float', got {name!r}")
    return dim, SCALARS[name]


def parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def frame_from_dict(doc, backend: str | None = None) -> Frame:
    dim, declared = _header(doc)
    vectors = doc.get("vectors")
    if not isinstance(vectors, list) or not vectors:
        raise FormatError("vectors: expected a nonempty list of vectors")
    rows = [_vector(v, declared, dim, f"vectors[{i}]") for i, v in enumerate(vectors)]
    try:
        frame = Frame(rows, declared)
    except ValueError as exc:
        raise FormatError(f"vectors: {exc}") from None
    return frame.as_backend(backend) if backend else frame


def arrangement_from_dict(doc, backend: str | None = None) -> Arrangement:
    dim, declared = _header(doc)
    subs = doc.get("subspaces")
    if not isinstance(subs, list) or not subs:
        raise FormatError("subspaces: expected a nonempty list")
    out = []
    for i, s in enumerate(subs):
        where = f"subspaces[{i}]"
        if not isinstance(s, dict) or len(set(s) & {"normal", "basis"}) != 1:
            raise FormatError(f"{where}: expected exactly one of 'normal' or 'basis'")
        try:
            if "normal" in s:
                out.append(Subspace(normal=_vector(s["normal"], declared, dim, f"{where}.normal"), backend=declared))
            else:
                basis = s["basis"]
                if not isinstance(basis, list) or not basis:
                    raise FormatError(f"{where}.basis: expected a nonempty list of vectors")
                rows = [_vector(v, declared, dim, f"{where}.basis[{j}]") for j, v in enumerate(basis)]
                out.append(Subspace(basis=rows, backend=declared))
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from None
    arr = Arrangement(tuple(out))
    return arr.as_backend(backend) if backend else arr


def load_frame(text: str, backend: str | None = None) -> Frame:
    return frame_from_dict(parse_json(text), backend)


def load_arrangement(text: str, backend: str | None = None) -> Arrangement:
    return arrangement_from_dict(parse_json(text), backend)


def _out(v, backend: str):
    return str(v) if backend == EXACT else float(v)


def frame_to_dict(frame: Frame) -> dict:
    return {
        "dim": frame.dim,
        "scalars": _NAMES[frame.backend],
        "vectors": [[_out(v, frame.backend) for v in row] for row in frame.vectors],
    }


def arrangement_to_dict(arr: Arrangement) -> dict:
    subs = []
    for s in arr:
        if s.normal is not None:
            subs.append({"normal": [_out(v, arr.backend) for v in s.normal]})
        else:
            subs.append({"basis": [[_out(v, arr.backend) for v in row] for row in s.basis]})
    return {"dim": arr.dim, "scalars": _NAMES[arr.backend], "subspaces": subs}


def dumps(doc: dict) -> str:
    return json.dumps(doc)
