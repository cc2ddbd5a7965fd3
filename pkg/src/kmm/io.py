"""File formats: state vectors, generator lists, symmetric states, CSV dumps.

State-vector JSON: {"n": int, "amplitudes": [[re, im], ...]} in
computational-basis order with qubit 1 as the most significant bit.

Symmetric-state JSON: {"n": int, "format": "dicke" | "majorana_roots" |
"majorana_xyz", "data": ...}; xyz rows are unit 3-vectors converted by
stereographic projection, north pole = root at infinity.

Group files are plain text with one Pauli literal per line;
"#" starts a comment.
"""

from __future__ import annotations

import csv
import json
from typing import IO

import numpy as np

from .bloch import BlochVector, StateVector
from .errors import ParseError, ValidationError
from .pauli import PauliOperator, key_lambda, key_to_index_string
from .symmetric import (
    LambdaComponentTable,
    MajoranaSpec,
    SymmetricState,
    dicke_from_majorana,
    majorana_from_xyz,
)


def _load_json(fh: IO[str]) -> dict:
    try:
        data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    return data


def _complex_pairs(raw, what: str) -> np.ndarray:
    try:
        arr = np.asarray(raw, dtype=float)
    except (TypeError, ValueError):
        raise ParseError(f"{what} must be an array of [re, im] pairs") from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ParseError(f"{what} must be an array of [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def load_state(fh: IO[str]) -> StateVector:
    data = _load_json(fh)
    if "n" not in data or "amplitudes" not in data:
        raise ParseError('state file needs "n" and "amplitudes" fields')
    amps = _complex_pairs(data["amplitudes"], "amplitudes")
    try:
        return StateVector(int(data["n"]), amps)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def save_state(psi: StateVector, fh: IO[str]):
    payload = {
        "n": psi.n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in psi.amplitudes],
    }
    json.dump(payload, fh, indent=2)
    fh.write("\n")


def load_group(fh: IO[str]) -> list[PauliOperator]:
    """Generator list from a text file, one literal per line."""
    ops = []
    for lineno, raw in enumerate(fh, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            ops.append(PauliOperator.from_literal(text))
        except ValidationError as exc:
            raise ParseError(str(exc), line=lineno) from None
    if not ops:
        raise ParseError("no generators found in group file")
    return ops


def load_symmetric(fh: IO[str]) -> SymmetricState:
    data = _load_json(fh)
    for field in ("n", "format", "data"):
        if field not in data:
            raise ParseError(f'symmetric-state file needs a "{field}" field')
    n = int(data["n"])
    fmt = data["format"]
    raw = data["data"]
    try:
        if fmt == "dicke":
            d = _complex_pairs(raw, "dicke data")
            if d.size != n + 1:
                raise ParseError(f"expected {n + 1} Dicke coefficients, got {d.size}")
            return SymmetricState(n, d)
        if fmt == "majorana_roots":
            if not isinstance(raw, dict) or "finite" not in raw:
                raise ParseError('majorana_roots data needs a "finite" field')
            finite = _complex_pairs(raw["finite"], "finite roots")
            at_inf = int(raw.get("at_infinity", n - finite.size))
            spec = MajoranaSpec(n, tuple(complex(z) for z in finite), at_inf)
            return dicke_from_majorana(spec)
        if fmt == "majorana_xyz":
            spec = majorana_from_xyz(raw)
            if spec.n != n:
                raise ParseError(f"expected {n} Majorana points, got {spec.n}")
            return dicke_from_majorana(spec)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown symmetric-state format {fmt!r}")


def write_bloch_csv(r: BlochVector, fh: IO[str]):
    """Component dump: index_string, lambda, weight, parity, value."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["index_string", "lambda", "weight", "parity", "value"])
    for key in sorted(r.components):
        lam = key_lambda(key, r.n)
        writer.writerow([
            key_to_index_string(key, r.n),
            ",".join(str(v) for v in lam),
            lam.weight,
            lam.parity.value,
            repr(r.components[key]),
        ])


def write_lambda_csv(table: LambdaComponentTable, fh: IO[str]):
    """Distinct-component dump: lambda, multiplicity, parity, weight, value."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["lambda", "multiplicity", "parity", "weight", "value"])
    for lam in sorted(table.entries):
        entry = table.entries[lam]
        writer.writerow([
            ",".join(str(v) for v in lam),
            entry.multiplicity,
            entry.parity.value,
            entry.weight,
            repr(entry.value.real),
        ])


def dump_json(payload: dict, fh: IO[str]):
    json.dump(payload, fh, indent=2)
    fh.write("\n")
