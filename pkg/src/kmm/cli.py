"""Command-line surface: check, balanced, symcensus, bounds, structure.

All reports are JSON on stdout unless --out is given; CSV is available
for the component-table dumps.  Exit codes: 0 ok, 2 validation or parse
failure, 3 resource cap exceeded.  Reports are assembled fully before
anything is written, so a failing run produces no partial output.
"""

from __future__ import annotations

import argparse
import sys
import time
from io import StringIO

import numpy as np

from . import balanced, bloch, bounds, dense, io, symmetric
from .errors import (
    KmmError,
    NotAvailableError,
    ResourceCapError,
    ValidationError,
)

DEFAULT_TOL = 1e-10


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmm",
        description="Generalized Bloch-vector analysis of n-qubit pure states")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="purity residuals and the k-MM ladder")
    check.add_argument("state", nargs="?", help="state-vector JSON file")
    check.add_argument("--fixture", help="named catalog state instead of a file")
    check.add_argument("--kmax", type=int, default=None,
                       help="largest k to test (default floor(n/2))")
    check.add_argument("--tol", type=float, default=DEFAULT_TOL)
    fmt = check.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true",
                     help="dump the Bloch components as CSV instead")
    check.add_argument("--census", action="store_true",
                       help="include the odd-component census (symmetric states)")
    check.add_argument("--timings", action="store_true",
                       help="include wall-clock timings in the report")
    check.add_argument("--out", help="write to this file instead of stdout")

    bal = sub.add_parser("balanced", help="validate a Pauli subgroup and its state")
    bal.add_argument("group", help="text file with one generator literal per line")
    bal.add_argument("--out")

    cen = sub.add_parser("symcensus", help="vanishing-odd-component census")
    cen.add_argument("state", nargs="?", help="symmetric-state JSON file")
    cen.add_argument("--fixture", help="psi4..psi10 or psi12")
    cen.add_argument("--tol", type=float, default=DEFAULT_TOL)
    cen.add_argument("--rotate", metavar="A,B,C",
                     help="apply the Euler rotation U(a,b,c) to every qubit first")
    cen.add_argument("--out")

    bnd = sub.add_parser("bounds", help="existence-bound chart data")
    bnd.add_argument("--n-max", type=int, required=True)
    bnd.add_argument("--table", help="constructive code table CSV (n,k_lower,k_upper)")
    bnd.add_argument("--out", help="chart JSON output file (default stdout)")

    struct = sub.add_parser("structure", help="dump the distinct lambda components")
    struct.add_argument("state", nargs="?", help="symmetric-state JSON file")
    struct.add_argument("--fixture", help="psi4..psi10 or psi12")
    struct.add_argument("--out")
    return parser


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_state_arg(args) -> tuple[str, bloch.StateVector]:
    if bool(args.state) == bool(args.fixture):
        raise ValidationError("give exactly one of a state file or --fixture")
    if args.fixture:
        return f"fixture:{args.fixture}", balanced.fixture_state(args.fixture)
    with open(args.state) as fh:
        return f"file:{args.state}", io.load_state(fh)


def _load_symmetric_arg(args) -> tuple[str, symmetric.SymmetricState]:
    if bool(args.state) == bool(args.fixture):
        raise ValidationError("give exactly one of a state file or --fixture")
    if args.fixture:
        name = args.fixture.strip().lower()
        table = symmetric.table1_states()
        if not name.startswith("psi") or not name[3:].isdigit():
            raise ValidationError(f"unknown symmetric fixture {name!r}")
        n = int(name[3:])
        if n not in table:
            raise NotAvailableError(
                f"no built-in maximizer for n={n}"
                + (" (needs a coordinates file)" if n == 20 else ""))
        return f"fixture:{name}", table[n]
    with open(args.state) as fh:
        return f"file:{args.state}", io.load_symmetric(fh)


def _dicke_projection(psi: bloch.StateVector,
                      tol: float = 1e-8) -> symmetric.SymmetricState:
    """Project onto the symmetric subspace; reject non-symmetric states."""
    d = np.array([complex(np.vdot(dense.dicke_vector(psi.n, k).amplitudes,
                                  psi.amplitudes))
                  for k in range(psi.n + 1)])
    leak = 1.0 - float(np.sum(np.abs(d) ** 2))
    if leak > tol:
        raise ValidationError(
            f"state is not permutation symmetric (weight outside the "
            f"symmetric subspace: {leak:.3e})")
    return symmetric.SymmetricState.normalized(d)


def _census_payload(state: symmetric.SymmetricState, tol: float) -> dict:
    census = symmetric.odd_census(state, tol)
    witness = symmetric.theorem2_witness(state)
    return {
        "n": census.n,
        "zero_odd": census.zero_odd,
        "total_odd": census.total_odd,
        "ratio": census.ratio,
        "threshold": census.threshold,
        "witness_lambda": list(witness.witness_lambda),
    }


def cmd_check(args) -> str:
    started = time.perf_counter()
    descriptor, psi = _load_state_arg(args)
    vec = bloch.bloch_from_state(psi, zero_tolerance=args.tol)
    expanded = time.perf_counter()
    if args.csv:
        buf = StringIO()
        io.write_bloch_csv(vec, buf)
        return buf.getvalue()
    residuals = bloch.purity_residuals(vec)
    kmax = args.kmax if args.kmax is not None else psi.n // 2
    if kmax < 0:
        raise ValidationError("--kmax must be non-negative")
    ladder = []
    for k in range(1, kmax + 1):
        report = bloch.is_k_mm(vec, k, tol=args.tol)
        ladder.append({
            "k": k,
            "verdict": report.verdict,
            "max_violation": report.max_violation,
            "violating_indices": report.violating_indices,
        })
    payload = {
        "input": descriptor,
        "n": psi.n,
        "tolerance": args.tol,
        "purity": {
            "norm_residual": residuals.norm_residual,
            "orientation_residual": residuals.orientation_residual,
        },
        "ladder": ladder,
    }
    if args.census:
        payload["census"] = _census_payload(_dicke_projection(psi), args.tol)
    if args.timings:
        payload["timings"] = {
            "expand_s": expanded - started,
            "total_s": time.perf_counter() - started,
        }
    buf = StringIO()
    io.dump_json(payload, buf)
    return buf.getvalue()


def cmd_balanced(args) -> str:
    with open(args.group) as fh:
        generators = io.load_group(fh)
    group = balanced.close(generators)
    check = balanced.validate_balanced(group)
    try:
        min_weight = group.min_nonidentity_weight()
    except ValidationError:
        min_weight = None
    payload = {
        "n": group.n,
        "order": group.order,
        "flags": {
            "is_closed": group.flags.is_closed,
            "is_abelian": group.flags.is_abelian,
            "is_involutive": group.flags.is_involutive,
            "is_hermitian": group.flags.is_hermitian,
        },
        "min_nonidentity_weight": min_weight,
        "mm_level": None if min_weight is None else min_weight - 1,
        "pure": check.pure,
        "reasons": list(check.reasons),
    }
    buf = StringIO()
    io.dump_json(payload, buf)
    return buf.getvalue()


def cmd_symcensus(args) -> str:
    descriptor, state = _load_symmetric_arg(args)
    if args.rotate:
        try:
            angles = [float(v) for v in args.rotate.split(",")]
        except ValueError:
            raise ValidationError("--rotate expects three comma-separated angles")
        if len(angles) != 3:
            raise ValidationError("--rotate expects three comma-separated angles")
        state = symmetric.rotate_symmetric(state, *angles)
    payload = {"input": descriptor}
    payload.update(_census_payload(state, args.tol))
    buf = StringIO()
    io.dump_json(payload, buf)
    return buf.getvalue()


def cmd_bounds(args) -> str:
    entries = None
    if args.table:
        with open(args.table) as fh:
            entries = bounds.parse_code_table(fh)
    chart = bounds.chart_data(args.n_max, entries)
    buf = StringIO()
    io.dump_json(chart, buf)
    return buf.getvalue()


def cmd_structure(args) -> str:
    _, state = _load_symmetric_arg(args)
    table = symmetric.lambda_components(state)
    buf = StringIO()
    io.write_lambda_csv(table, buf)
    return buf.getvalue()


_COMMANDS = {
    "check": cmd_check,
    "balanced": cmd_balanced,
    "symcensus": cmd_symcensus,
    "bounds": cmd_bounds,
    "structure": cmd_structure,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text = _COMMANDS[args.command](args)
    except ResourceCapError as exc:
        print(f"kmm {args.command}: resource cap: {exc}", file=sys.stderr)
        return 3
    except (KmmError, FileNotFoundError) as exc:
        print(f"kmm {args.command}: error: {exc}", file=sys.stderr)
        return 2
    _emit(text, getattr(args, "out", None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
