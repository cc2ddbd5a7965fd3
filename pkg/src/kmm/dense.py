"""Brute-force dense linear algebra used as ground truth for small n.

Everything here builds explicit 2**n-dimensional objects: density
matrices, computational-basis partial traces, Dicke vectors and the
symmetric-subspace projection of Pauli words.  Size caps keep memory
at desk scale; the fast modules are tested against these routines.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .bloch import BlochVector, StateVector
from .errors import ResourceCapError, ValidationError
from .pauli import PauliOperator, to_dense

MATRIX_CAP = 12
VECTOR_CAP = 20
PROJECT_CAP = 10


def state_density(psi: StateVector) -> np.ndarray:
    """Rank-one projector |psi><psi|."""
    if psi.n > MATRIX_CAP:
        raise ResourceCapError(f"dense density matrix capped at n <= {MATRIX_CAP}")
    return np.outer(psi.amplitudes, psi.amplitudes.conj())


def partial_trace(rho: np.ndarray, trace_out: Iterable[int], n: int) -> np.ndarray:
    """Trace out the given 1-based qubits in the computational basis."""
    if n > MATRIX_CAP:
        raise ResourceCapError(f"partial trace capped at n <= {MATRIX_CAP}")
    if rho.shape != (1 << n, 1 << n):
        raise ValidationError(f"expected a {1 << n} x {1 << n} matrix")
    dropped = sorted(set(int(q) for q in trace_out))
    if dropped and (dropped[0] < 1 or dropped[-1] > n):
        raise ValidationError(f"qubit labels must lie in 1..{n}, got {dropped}")
    if len(dropped) >= n:
        raise ValidationError("cannot trace out every qubit")
    kept = [q for q in range(1, n + 1) if q not in dropped]
    tensor = rho.reshape((2,) * (2 * n))
    # row axis of qubit q is q-1, column axis is n+q-1; traced qubits share labels
    labels_row = []
    labels_col = []
    out_labels = []
    next_label = 0
    col_label = {}
    for q in range(1, n + 1):
        labels_row.append(next_label)
        if q in dropped:
            col_label[q] = next_label
        next_label += 1
    for q in range(1, n + 1):
        if q in dropped:
            labels_col.append(col_label[q])
        else:
            labels_col.append(next_label)
            col_label[q] = next_label
            next_label += 1
    for q in kept:
        out_labels.append(q - 1)
    for q in kept:
        out_labels.append(col_label[q])
    reduced = np.einsum(tensor, labels_row + labels_col, out_labels)
    dim = 1 << len(kept)
    return reduced.reshape(dim, dim)


def reduced_density(psi: StateVector, keep: Iterable[int]) -> np.ndarray:
    """Density matrix of the kept (1-based) qubits of a pure state."""
    kept = sorted(set(int(q) for q in keep))
    dropped = [q for q in range(1, psi.n + 1) if q not in kept]
    return partial_trace(state_density(psi), dropped, psi.n)


def purity(rho: np.ndarray) -> float:
    return float(np.real(np.trace(rho @ rho)))


def dicke_vector(n: int, k: int) -> StateVector:
    """Uniform superposition of all weight-k basis states."""
    if n > VECTOR_CAP:
        raise ResourceCapError(f"Dicke vectors capped at n <= {VECTOR_CAP}")
    if not 0 <= k <= n:
        raise ValidationError(f"need 0 <= k <= n, got k={k}, n={n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    idx = np.arange(1 << n, dtype=np.int64)
    amps[np.bitwise_count(idx) == k] = 1.0 / math.sqrt(math.comb(n, k))
    return StateVector(n, amps)


def dicke_basis(n: int) -> np.ndarray:
    """2**n x (n+1) matrix whose columns are the Dicke vectors."""
    return np.column_stack([dicke_vector(n, k).amplitudes for k in range(n + 1)])


def project_symmetric(op: PauliOperator) -> np.ndarray:
    """(n+1) x (n+1) matrix of <S_k| op |S_k'> via dense application."""
    if op.n > PROJECT_CAP:
        raise ResourceCapError(f"symmetric projection capped at n <= {PROJECT_CAP}")
    basis = dicke_basis(op.n)
    return basis.conj().T @ to_dense(op) @ basis


def bloch_to_dense(r: BlochVector) -> np.ndarray:
    """Reassemble sum_alpha r_alpha sigma_alpha as a dense matrix."""
    if r.n > MATRIX_CAP:
        raise ResourceCapError(f"dense reassembly capped at n <= {MATRIX_CAP}")
    dim = 1 << r.n
    out = np.zeros((dim, dim), dtype=complex)
    for key, val in r.components.items():
        out += val * to_dense(PauliOperator.from_key(key, r.n))
    return out


def dense_bloch_components(rho: np.ndarray, n: int) -> dict[int, float]:
    """All r_alpha = Tr(sigma_alpha rho)/2**n by explicit traces (slow oracle)."""
    comps = {}
    for key in range(4 ** n):
        val = np.trace(to_dense(PauliOperator.from_key(key, n)) @ rho) / 2 ** n
        comps[key] = complex(val).real
    return comps
