"""Existence bounds for k-MM states from quantum coding theory.

The finite-n quantum Hamming and Gilbert-Varshamov inequalities are
evaluated with exact integers; the asymptotic classification uses the
rate function f(x) = 1 - x log2(3) + x log2(x) + (1-x) log2(1-x) and
its root x0 ~ 0.18929.  At finite n the GV side guarantees nothing
(n=4, k=2 satisfies both inequalities yet no such state exists), so
finite verdicts never claim existence; only the asymptotic classifier
returns EXISTS.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, TextIO

from .bloch import subspace_dim
from .errors import ParseError, ValidationError


class Region(str, Enum):
    EXISTS = "exists"
    IMPOSSIBLE = "impossible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class BoundVerdict:
    n: int
    k: int
    hamming_ok: bool
    gv_ok: bool
    region: Region


def finite_bounds(n: int, k: int) -> BoundVerdict:
    """Exact-integer check of D_floor(k/2) + 1 <= 2**n <= D_k + 1."""
    if not 1 <= k <= n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}, n={n}")
    hamming_ok = subspace_dim(n, k // 2) + 1 <= 2 ** n
    gv_ok = 2 ** n <= subspace_dim(n, k) + 1
    if k > n // 2 or not hamming_ok:
        region = Region.IMPOSSIBLE
    else:
        region = Region.UNKNOWN
    return BoundVerdict(n, k, hamming_ok, gv_ok, region)


def rate_function(x: float) -> float:
    """Asymptotic rate function; strictly decreasing on (0, 3/4), f(0) = 1."""
    if x == 0:
        return 1.0
    if x <= 0 or x >= 1:
        raise ValidationError(f"rate function defined on [0, 1), got {x}")
    return 1.0 - x * math.log2(3.0) + x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x)


def root_x0(tol: float = 1e-10) -> float:
    """Root of the rate function, by bisection on (0.1, 0.3)."""
    if tol < 1e-12:
        raise ValidationError("tolerance below 1e-12 is not resolvable in double")
    lo, hi = 0.1, 0.3
    while True:
        mid = 0.5 * (lo + hi)
        val = rate_function(mid)
        if abs(val) < tol or hi - lo < 1e-16:
            return mid
        if val > 0:
            lo = mid
        else:
            hi = mid


def asymptotic_region(ratio: float) -> Region:
    """Classify k/n in the large-n limit.

    Below the rate-function root a state always exists; above twice the
    root the Hamming side forbids it; in between the question is open.
    """
    if not 0 < ratio <= 0.5:
        raise ValidationError(
            f"ratio must lie in (0, 1/2] (Schmidt bound), got {ratio}")
    x0 = root_x0()
    if ratio < x0:
        return Region.EXISTS
    if ratio > 2 * x0:
        return Region.IMPOSSIBLE
    return Region.UNKNOWN


@dataclass(frozen=True)
class CodeTableEntry:
    n: int
    k_lower: int
    k_upper: int


def parse_code_table(lines: Iterable[str] | TextIO) -> list[CodeTableEntry]:
    """CSV with columns n, k_lower, k_upper; an optional header is skipped."""
    entries = []
    for lineno, row in enumerate(csv.reader(lines), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if lineno == 1 and not row[0].strip().lstrip("-").isdigit():
            continue  # header
        if len(row) != 3:
            raise ParseError(f"expected 3 columns, got {len(row)}", line=lineno)
        try:
            n, k_lower, k_upper = (int(cell.strip()) for cell in row)
        except ValueError as exc:
            raise ParseError(f"non-integer field ({exc})", line=lineno) from None
        if n < 1:
            raise ParseError(f"invalid qubit count {n}", line=lineno)
        if not 0 <= k_lower <= k_upper <= n // 2:
            raise ParseError(
                f"need 0 <= k_lower <= k_upper <= floor(n/2), got {row}", line=lineno)
        entries.append(CodeTableEntry(n, k_lower, k_upper))
    return entries


def chart_data(n_max: int, entries: list[CodeTableEntry] | None = None) -> dict:
    """Plot-ready series: the two asymptote lines plus constructive bounds."""
    if n_max < 1:
        raise ValidationError("n_max must be positive")
    x0 = root_x0()
    ns = list(range(1, n_max + 1))
    series = [
        {"name": "gv_asymptote", "points": [[n, x0 * n] for n in ns]},
        {"name": "hamming_asymptote", "points": [[n, 2 * x0 * n] for n in ns]},
    ]
    if entries:
        rows = sorted(entries, key=lambda e: e.n)
        series.append({"name": "constructive_lower",
                       "points": [[e.n, e.k_lower] for e in rows]})
        series.append({"name": "constructive_upper",
                       "points": [[e.n, e.k_upper] for e in rows]})
    return {"series": series}


def ingest_code_table(lines: Iterable[str] | TextIO,
                      n_max: int | None = None) -> tuple[list[CodeTableEntry], dict]:
    """Validated entries plus the chart built over their range (or n_max)."""
    entries = parse_code_table(lines)
    top = n_max or max((e.n for e in entries), default=1)
    return entries, chart_data(top, entries)
