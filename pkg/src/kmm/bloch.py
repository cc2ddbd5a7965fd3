"""Generalized Bloch vectors: expansion, partial trace, purity, k-MM tests.

A density operator rho = sum_alpha r_alpha sigma_alpha is stored as the
sparse real map alpha -> r_alpha = Tr(sigma_alpha rho) / 2**n, keyed by
the packed index of kmm.pauli.  Tracing out qubits only drops components,
so every reduction question becomes a question about index weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import kernels
from .errors import ResourceCapError, ValidationError
from .pauli import (
    PauliOperator,
    even_bit_mask,
    key_to_index_string,
    key_weight,
)

NORM_TOL = 1e-12
EXPAND_CAP = 12    # full 4**n enumeration
STAR_DENSE_CAP = 10  # dense accumulator for the orientation residual

_I_POW = (1, 1j, -1, -1j)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Pure n-qubit state; amplitudes in computational-basis order, qubit 1 = MSB."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise ValidationError(
                f"expected {1 << self.n} amplitudes for n={self.n}, got {amps.shape}")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"state is not normalized: |psi|^2 = {norm!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, values) -> "StateVector":
        amps = np.asarray(values, dtype=np.complex128).ravel()
        n = amps.size.bit_length() - 1
        if 1 << n != amps.size:
            raise ValidationError(f"amplitude count {amps.size} is not a power of two")
        return cls(n, amps)

    @classmethod
    def basis_state(cls, bits: str) -> "StateVector":
        """Computational basis state from a bit string, qubit 1 leftmost."""
        n = len(bits)
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[int(bits, 2)] = 1.0
        return cls(n, amps)


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Tensor product with a's qubits first (most significant)."""
    return StateVector(a.n + b.n, np.kron(a.amplitudes, b.amplitudes))


def _rev_mask(mask: int, n: int) -> int:
    """Qubit-space mask (qubit 1 = bit 0) to state-space mask (qubit 1 = MSB)."""
    out = 0
    for i in range(n):
        out |= ((mask >> i) & 1) << (n - 1 - i)
    return out


def apply_pauli(op: PauliOperator, psi: StateVector) -> StateVector:
    """sigma |psi> via bit operations; never builds a dense matrix."""
    if op.n != psi.n:
        raise ValidationError(f"operator on {op.n} qubits applied to n={psi.n} state")
    x = _rev_mask(op.x_mask, psi.n)
    z = _rev_mask(op.z_mask, psi.n)
    js = np.arange(1 << psi.n, dtype=np.int64)
    signs = 1.0 - 2.0 * (np.bitwise_count(np.int64(z) & (js ^ x)) & 1)
    phase = _I_POW[(op.phase_exp + int(op.x_mask & op.z_mask).bit_count()) % 4]
    return StateVector(psi.n, phase * signs * psi.amplitudes[js ^ x])


def expectation(psi: StateVector, op: PauliOperator) -> complex:
    """<psi| op |psi> via the bitwise kernel."""
    if op.n != psi.n:
        raise ValidationError(f"operator on {op.n} qubits applied to n={psi.n} state")
    xs = np.array([_rev_mask(op.x_mask, psi.n)], dtype=np.int64)
    zs = np.array([_rev_mask(op.z_mask, psi.n)], dtype=np.int64)
    val = kernels.expectations(psi.amplitudes, xs, zs)[0]
    return complex(val * _I_POW[op.phase_exp])


@dataclass(frozen=True)
class BlochVector:
    """Sparse real component map of a density operator over packed Pauli keys."""

    n: int
    components: Mapping[int, float]
    zero_tolerance: float = 1e-10

    def __post_init__(self):
        ident = self.components.get(0)
        if ident != 2.0 ** -self.n:
            raise ValidationError(
                f"identity component must be exactly 2**-{self.n}, got {ident!r}")

    def get(self, key: int) -> float:
        return self.components.get(key, 0.0)

    def support(self) -> list[int]:
        """Sorted non-identity keys carrying a stored component."""
        return sorted(k for k in self.components if k != 0)

    def __len__(self):
        return len(self.components)


def bloch_from_state(psi: StateVector, zero_tolerance: float = 1e-10) -> BlochVector:
    """Expand a pure state into its full generalized Bloch vector.

    Components with |r_alpha| <= zero_tolerance are dropped; the identity
    component is pinned to exactly 1/2**n.
    """
    if psi.n > EXPAND_CAP:
        raise ResourceCapError(f"full expansion capped at n <= {EXPAND_CAP}")
    dense = kernels.expand_pure(psi.amplitudes, psi.n)
    keys = np.nonzero(np.abs(dense) > zero_tolerance)[0]
    comps = {int(k): float(dense[k]) for k in keys}
    comps[0] = 2.0 ** -psi.n
    return BlochVector(psi.n, comps, zero_tolerance)


def _validate_subset(n: int, keep: Iterable[int]) -> list[int]:
    subset = sorted(set(int(q) for q in keep))
    if not subset:
        raise ValidationError("kept subset must not be empty")
    if subset[0] < 1 or subset[-1] > n:
        raise ValidationError(f"qubit labels must lie in 1..{n}, got {subset}")
    return subset


def reduce(r: BlochVector, keep: Iterable[int]) -> BlochVector:
    """Bloch vector of the reduced state on the (1-based) qubit subset.

    A component survives iff its index is identity on every traced-out
    qubit; surviving values are rescaled by 2**(n-k).
    """
    subset = _validate_subset(r.n, keep)
    k = len(subset)
    keep_fields = 0
    for q in subset:
        keep_fields |= 3 << (2 * (q - 1))
    drop_fields = (4 ** r.n - 1) ^ keep_fields
    scale = 2.0 ** (r.n - k)
    out: dict[int, float] = {}
    for key, val in r.components.items():
        if key & drop_fields:
            continue
        packed = 0
        for new_pos, q in enumerate(subset):
            packed |= ((key >> (2 * (q - 1))) & 3) << (2 * new_pos)
        out[packed] = val * scale
    return BlochVector(k, out, r.zero_tolerance)


def linear_entropy(r: BlochVector, keep: Iterable[int]) -> float:
    """1 - Tr(rho_A^2) computed from the surviving components only."""
    reduced = reduce(r, keep)
    k = reduced.n
    return 1.0 - (2.0 ** k) * sum(v * v for v in reduced.components.values())


def subspace_dim(n: int, k: int) -> int:
    """Number of indices with weight in 1..k (exact integer)."""
    if not 0 <= k <= n:
        raise ValidationError(f"need 0 <= k <= n, got k={k}, n={n}")
    return sum(math.comb(n, l) * 3 ** l for l in range(1, k + 1))


@dataclass(frozen=True)
class KmmReport:
    """Outcome of the k-MM test for one k."""

    k: int
    verdict: bool
    max_violation: float
    violating_indices: list[str] = field(default_factory=list)


def is_k_mm(r: BlochVector, k: int, tol: float = 1e-10,
            max_listed: int = 20) -> KmmReport:
    """Decide whether every component with weight in 1..k vanishes.

    k above floor(n/2) is allowed but the verdict is then forced false
    (no more than half of the qubits can be maximally mixed).
    """
    if not 0 <= k <= r.n:
        raise ValidationError(f"need 0 <= k <= n, got k={k}, n={r.n}")
    hits = []
    max_violation = 0.0
    for key, val in r.components.items():
        if 0 < key_weight(key) <= k:
            mag = abs(val)
            max_violation = max(max_violation, mag)
            if mag > tol:
                hits.append((mag, key))
    hits.sort(reverse=True)
    verdict = not hits and k <= r.n // 2
    listed = [key_to_index_string(key, r.n) for _, key in hits[:max_listed]]
    return KmmReport(k, verdict, max_violation, listed)


@dataclass(frozen=True)
class PurityResiduals:
    norm_residual: float
    orientation_residual: float


def purity_residuals(r: BlochVector) -> PurityResiduals:
    """How far the component map is from describing a pure state.

    The norm residual measures the distance of the traceless part from
    the pure-state sphere radius R**2 = (2**n - 1)/2**(n+1) (components
    rescaled by 2**(n-1) to match that normalization).  The orientation
    residual is the worst deviation from the star-product alignment
    sum_jk g_gamma(jk) r_j r_k = (2**n - 2)/2**n * r_gamma, with the
    structure constants evaluated over the sparse support only.
    """
    n = r.n
    traceless = {k: v for k, v in r.components.items() if k != 0}
    sq = sum(v * v for v in traceless.values())
    radius_sq = (2.0 ** n - 1.0) / 2.0 ** (n + 1)
    norm_residual = abs(2.0 ** (n - 1) * sq - radius_sq)

    if not traceless:
        return PurityResiduals(norm_residual, 0.0)
    keys = np.fromiter(traceless.keys(), dtype=np.int64, count=len(traceless))
    vals = np.fromiter(traceless.values(), dtype=np.float64, count=len(traceless))
    coeff = (2.0 ** n - 2.0) / 2.0 ** n
    if n <= STAR_DENSE_CAP:
        acc = kernels.star_accumulate(keys, vals, n)
        acc[keys] -= coeff * vals
        acc[0] = 0.0
        orientation = float(np.max(np.abs(acc)))
    else:
        acc_map = kernels.star_accumulate_sparse(keys, vals, n)
        acc_map.pop(0, None)
        for key, val in traceless.items():
            acc_map[key] = acc_map.get(key, 0.0) - coeff * val
        orientation = max((abs(v) for v in acc_map.values()), default=0.0)
    return PurityResiduals(norm_residual, orientation)


def permute_qubits(r: BlochVector, perm: Iterable[int]) -> BlochVector:
    """Relabel qubits; perm maps old position i (1-based) to perm[i-1]."""
    table = list(perm)
    if sorted(table) != list(range(1, r.n + 1)):
        raise ValidationError("perm must be a permutation of 1..n")
    out: dict[int, float] = {}
    for key, val in r.components.items():
        packed = 0
        for i in range(r.n):
            packed |= ((key >> (2 * i)) & 3) << (2 * (table[i] - 1))
        out[packed] = val
    return BlochVector(r.n, out, r.zero_tolerance)


def mask_weight_keys(n: int, wmax: int) -> list[int]:
    """All packed keys with weight in 1..wmax (enumeration helper)."""
    if n > EXPAND_CAP:
        raise ResourceCapError(f"enumeration capped at n <= {EXPAND_CAP}")
    mask = even_bit_mask(n)
    keys = np.arange(4 ** n, dtype=np.int64)
    w = np.bitwise_count((keys | (keys >> 1)) & mask)
    sel = (w > 0) & (w <= wmax)
    return [int(k) for k in keys[sel]]
