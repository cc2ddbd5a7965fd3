"""Balanced pure states built from Pauli subgroups isomorphic to Z_2^n.

A balanced state is rho_S = 2**-n sum_{sigma in S} sigma.  It is pure
exactly when S is an abelian subgroup of order 2**n whose elements all
square to +identity and that contains no +-i phases and no -identity.
The minimum non-identity weight of S then fixes the k-MM level.

Also hosts the catalog of small reference states: Bell, GHZ, W, the
4-qubit L and HS states, the 5-qubit code logical states and the four
6-qubit logical Bell states, as state vectors and (where they exist)
as stabilizer-style groups.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bloch import BlochVector, StateVector, apply_pauli, tensor
from .errors import ResourceCapError, ValidationError
from .pauli import PauliOperator, commutes, multiply, weight

ORDER_CAP = 2 ** 20

FIVE_QUBIT_STABILIZERS = ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")
FIVE_QUBIT_LOGICAL_Z = "ZZZZZ"
FIVE_QUBIT_LOGICAL_X = "XXXXX"


@dataclass(frozen=True)
class GroupFlags:
    is_closed: bool
    is_abelian: bool
    is_involutive: bool
    is_hermitian: bool
    order: int


@dataclass(frozen=True, eq=False)
class PauliSubgroup:
    n: int
    generators: tuple[PauliOperator, ...]
    elements: frozenset[PauliOperator]
    flags: GroupFlags

    @property
    def order(self) -> int:
        return self.flags.order

    def min_nonidentity_weight(self) -> int:
        weights = [weight(e) for e in self.elements if not e.has_identity_masks]
        if not weights:
            raise ValidationError("group has no non-identity element")
        return min(weights)


def close(generators) -> PauliSubgroup:
    """Closure of the generators under multiplication, phases tracked."""
    gens = tuple(generators)
    if not gens:
        raise ValidationError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValidationError("generators act on different qubit counts")
    elements = {PauliOperator.identity(n)}
    queue = [PauliOperator.identity(n)]
    while queue:
        elem = queue.pop()
        for g in gens:
            prod = multiply(elem, g)
            if prod not in elements:
                if len(elements) >= ORDER_CAP:
                    raise ResourceCapError(f"group order exceeds {ORDER_CAP}")
                elements.add(prod)
                queue.append(prod)
    is_abelian = all(commutes(a, b) for i, a in enumerate(gens) for b in gens[i + 1:])
    is_involutive = all(multiply(e, e).phase_exp == 0 for e in elements)
    minus_identity = PauliOperator(n, 0, 0, 2)
    is_hermitian = (all(e.phase_exp % 2 == 0 for e in elements)
                    and minus_identity not in elements)
    flags = GroupFlags(True, is_abelian, is_involutive, is_hermitian, len(elements))
    return PauliSubgroup(n, gens, frozenset(elements), flags)


def group_from_literals(literals) -> PauliSubgroup:
    return close(PauliOperator.from_literal(s) for s in literals)


@dataclass(frozen=True)
class BalancedCheck:
    pure: bool
    reasons: tuple[str, ...]


def validate_balanced(group: PauliSubgroup) -> BalancedCheck:
    """Purity test of Theorem-style balanced states; reasons name each failure."""
    if not group.flags.is_closed:
        raise ValidationError("group must be closed before validation")
    reasons = []
    if group.order != 2 ** group.n:
        reasons.append(f"order {group.order} != 2^n = {2 ** group.n}")
    if not group.flags.is_abelian:
        reasons.append("group is not abelian")
    if not group.flags.is_involutive:
        reasons.append("an element squares to -identity")
    if not group.flags.is_hermitian:
        reasons.append("group contains -identity or a +-i phase")
    return BalancedCheck(not reasons, tuple(reasons))


def mm_level(group: PauliSubgroup) -> int:
    """Minimum non-identity weight minus one."""
    if not group.flags.is_closed:
        raise ValidationError("group must be closed")
    return group.min_nonidentity_weight() - 1


@dataclass(frozen=True, eq=False)
class BalancedState:
    group: PauliSubgroup
    bloch: BlochVector
    mm_level: int


def build_state(group: PauliSubgroup) -> BalancedState:
    """Bloch vector of rho_S with each element's sign folded into the value."""
    check = validate_balanced(group)
    if not check.pure:
        raise ValidationError("group does not define a pure balanced state: "
                              + "; ".join(check.reasons))
    scale = 2.0 ** -group.n
    comps = {}
    for elem in group.elements:
        sign = 1.0 if elem.phase_exp == 0 else -1.0
        comps[elem.key] = sign * scale
    bloch = BlochVector(group.n, comps)
    return BalancedState(group, bloch, mm_level(group))


def state_from_group(group: PauliSubgroup, seed_bits: str | None = None) -> StateVector:
    """Pure state vector fixed by the group: normalized sum_sigma sigma|seed>."""
    check = validate_balanced(group)
    if not check.pure:
        raise ValidationError("group does not define a pure state: "
                              + "; ".join(check.reasons))
    seed = StateVector.basis_state(seed_bits or "0" * group.n)
    acc = np.zeros_like(seed.amplitudes)
    for elem in sorted(group.elements, key=lambda e: (e.key, e.phase_exp)):
        acc = acc + apply_pauli(elem, seed).amplitudes
    norm = math.sqrt(float(np.sum(np.abs(acc) ** 2)))
    if norm < 1e-9:
        raise ValidationError(f"projector annihilates seed |{seed_bits}>")
    return StateVector(group.n, acc / norm)


# ---------------------------------------------------------------------------
# reference states
# ---------------------------------------------------------------------------

_OMEGA = np.exp(2j * np.pi / 3)


def bell_state(kind: str) -> StateVector:
    amps = np.zeros(4, dtype=np.complex128)
    s = 1.0 / math.sqrt(2)
    if kind == "phi_plus":
        amps[0b00], amps[0b11] = s, s
    elif kind == "phi_minus":
        amps[0b00], amps[0b11] = s, -s
    elif kind == "psi_plus":
        amps[0b01], amps[0b10] = s, s
    elif kind == "psi_minus":
        amps[0b01], amps[0b10] = s, -s
    else:
        raise ValidationError(f"unknown Bell state {kind!r}")
    return StateVector(2, amps)


def ghz_state(n: int) -> StateVector:
    if n < 2:
        raise ValidationError("GHZ needs n >= 2")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2)
    return StateVector(n, amps)


def w_state() -> StateVector:
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b001] = amps[0b010] = amps[0b100] = 1.0 / math.sqrt(3)
    return StateVector(3, amps)


def l_state() -> StateVector:
    """4-qubit L state; omega = exp(2 pi i / 3)."""
    w = _OMEGA
    amps = np.zeros(16, dtype=np.complex128)
    amps[0b0011] = amps[0b1100] = (1 - w)
    for b in (0b0101, 0b0110, 0b1001, 0b1010):
        amps[b] = w ** 2
    amps[0b0000] = amps[0b1111] = -w ** 2
    return StateVector(4, amps / (2 * math.sqrt(3)))


def hs_state() -> StateVector:
    """4-qubit Higuchi-Sudbery state; omega = exp(2 pi i / 3)."""
    w = _OMEGA
    amps = np.zeros(16, dtype=np.complex128)
    amps[0b0011] = amps[0b1100] = 1.0
    amps[0b0101] = amps[0b1010] = w
    amps[0b0110] = amps[0b1001] = w ** 2
    return StateVector(4, amps / math.sqrt(6))


def bell_group(kind: str) -> PauliSubgroup:
    signs = {"phi_plus": ("", ""), "phi_minus": ("-", ""),
             "psi_plus": ("", "-"), "psi_minus": ("-", "-")}
    if kind not in signs:
        raise ValidationError(f"unknown Bell state {kind!r}")
    sx, sz = signs[kind]
    return group_from_literals([sx + "XX", sz + "ZZ"])


def ghz_group(n: int) -> PauliSubgroup:
    gens = ["X" * n]
    for i in range(n - 1):
        gens.append("I" * i + "ZZ" + "I" * (n - 2 - i))
    return group_from_literals(gens)


def zero_group(n: int) -> PauliSubgroup:
    gens = ["I" * i + "Z" + "I" * (n - 1 - i) for i in range(n)]
    return group_from_literals(gens)


@lru_cache(maxsize=None)
def five_qubit_group(logical: int) -> PauliSubgroup:
    """Stabilizer group of |0>_L (logical=0) or |1>_L (logical=1)."""
    sign = "" if logical == 0 else "-"
    return group_from_literals(list(FIVE_QUBIT_STABILIZERS)
                               + [sign + FIVE_QUBIT_LOGICAL_Z])


@lru_cache(maxsize=None)
def logical_state(logical: int) -> StateVector:
    """Logical basis states of the 5-qubit code, |1>_L = XXXXX |0>_L."""
    zero = state_from_group(five_qubit_group(0))
    if logical == 0:
        return zero
    return apply_pauli(PauliOperator.from_literal(FIVE_QUBIT_LOGICAL_X), zero)


def m6_state(kind: str) -> StateVector:
    """6-qubit logical Bell states over {physical qubit} x {5-qubit code}."""
    zero_l = logical_state(0)
    one_l = logical_state(1)
    q0 = StateVector.basis_state("0")
    q1 = StateVector.basis_state("1")
    s = 1.0 / math.sqrt(2)
    pairs = {
        "phi_plus": (tensor(q0, zero_l), tensor(q1, one_l), 1.0),
        "phi_minus": (tensor(q0, zero_l), tensor(q1, one_l), -1.0),
        "psi_plus": (tensor(q0, one_l), tensor(q1, zero_l), 1.0),
        "psi_minus": (tensor(q0, one_l), tensor(q1, zero_l), -1.0),
    }
    if kind not in pairs:
        raise ValidationError(f"unknown logical Bell state {kind!r}")
    a, b, sign = pairs[kind]
    return StateVector(6, s * (a.amplitudes + sign * b.amplitudes))


def m6_group(kind: str) -> PauliSubgroup:
    signs = {"phi_plus": ("", ""), "phi_minus": ("-", ""),
             "psi_plus": ("", "-"), "psi_minus": ("-", "-")}
    if kind not in signs:
        raise ValidationError(f"unknown logical Bell state {kind!r}")
    sx, sz = signs[kind]
    gens = ["I" + g for g in FIVE_QUBIT_STABILIZERS]
    gens.append(sx + "X" + FIVE_QUBIT_LOGICAL_X)
    gens.append(sz + "Z" + FIVE_QUBIT_LOGICAL_Z)
    return group_from_literals(gens)


_BELL_KINDS = ("phi_plus", "phi_minus", "psi_plus", "psi_minus")


def fixture_states() -> dict[str, StateVector]:
    """Every catalog state by name (GHZ provided for n = 2..8)."""
    states = {kind: bell_state(kind) for kind in _BELL_KINDS}
    for n in range(2, 9):
        states[f"ghz{n}"] = ghz_state(n)
    states["w3"] = w_state()
    states["l"] = l_state()
    states["hs"] = hs_state()
    states["logical_zero"] = logical_state(0)
    states["logical_one"] = logical_state(1)
    for kind in _BELL_KINDS:
        states[f"m6_{kind}"] = m6_state(kind)
    return states


def fixture_groups() -> dict[str, PauliSubgroup]:
    """Stabilizer-style groups for the catalog states that have one."""
    groups = {kind: bell_group(kind) for kind in _BELL_KINDS}
    for n in range(2, 7):
        groups[f"ghz{n}"] = ghz_group(n)
        groups[f"zero{n}"] = zero_group(n)
    groups["logical_zero"] = five_qubit_group(0)
    groups["logical_one"] = five_qubit_group(1)
    for kind in _BELL_KINDS:
        groups[f"m6_{kind}"] = m6_group(kind)
    return groups


def fixture_state(name: str) -> StateVector:
    """Resolve a fixture by name; ghzN and zeroN accept any reasonable N."""
    key = name.strip().lower()
    match = re.fullmatch(r"(ghz|zero)(\d+)", key)
    if match:
        n = int(match.group(2))
        if n < 2 or n > 12:
            raise ValidationError(f"fixture {name!r}: n out of range 2..12")
        if match.group(1) == "ghz":
            return ghz_state(n)
        return StateVector.basis_state("0" * n)
    simple = {
        "phi_plus": lambda: bell_state("phi_plus"),
        "phi_minus": lambda: bell_state("phi_minus"),
        "psi_plus": lambda: bell_state("psi_plus"),
        "psi_minus": lambda: bell_state("psi_minus"),
        "w3": w_state,
        "l": l_state,
        "hs": hs_state,
        "logical_zero": lambda: logical_state(0),
        "logical_one": lambda: logical_state(1),
        "m6_phi_plus": lambda: m6_state("phi_plus"),
        "m6_phi_minus": lambda: m6_state("phi_minus"),
        "m6_psi_plus": lambda: m6_state("psi_plus"),
        "m6_psi_minus": lambda: m6_state("psi_minus"),
    }
    if key not in simple:
        raise ValidationError(f"unknown fixture state {name!r}; known: "
                              + ", ".join(sorted(simple)) + ", ghzN, zeroN")
    return simple[key]()
