import numpy as np
import pytest

from kmm.bloch import StateVector
from kmm.symmetric import SymmetricState

SEED = 20260808


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def random_pure_state(n, rng) -> StateVector:
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    amps /= np.linalg.norm(amps)
    return StateVector(n, amps)


def random_symmetric_state(n, rng) -> SymmetricState:
    d = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    return SymmetricState.normalized(d)


def permute_state(psi: StateVector, perm) -> StateVector:
    """Relabel qubits of a state vector; perm[i-1] is the new 1-based label."""
    n = psi.n
    amps = np.empty_like(psi.amplitudes)
    for b in range(1 << n):
        target = 0
        for q in range(1, n + 1):
            bit = (b >> (n - q)) & 1
            target |= bit << (n - perm[q - 1])
        amps[target] = psi.amplitudes[b]
    return StateVector(n, amps)
