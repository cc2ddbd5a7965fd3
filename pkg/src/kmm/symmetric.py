"""Permutation-invariant states: Dicke basis, Majorana roots, projected
Pauli matrices and the vanishing-odd-component census.

A symmetric n-qubit state lives in the (n+1)-dimensional Dicke basis.
All of its 4**n Bloch components collapse onto one value per lambda
class [l0, l1, l2, l3], computed through the projected Pauli matrices
tau_lambda, so the whole component structure costs polynomial work.

Conversions to and from the Majorana root picture go through the
polynomial P(z) = sum_k (-1)**k binom(n,k)**(1/2) d_k z**k whose roots
are the Majorana parameters z_i = x_i / y_i.  (Printed versions of this
polynomial sometimes carry binom(n,k)**(-1/2); that variant does not
reproduce z_i = x_i/y_i on product states and is not used here.)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .bloch import NORM_TOL, StateVector
from .errors import (
    DegenerateRootsError,
    NotAvailableError,
    ResourceCapError,
    ValidationError,
)
from .pauli import LambdaIndex, Parity

STATEVECTOR_CAP = 20

_I_POW = (1, 1j, -1, -1j)

_NULLSPACE_RTOL = 1e-8
_DEGREE_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class SymmetricState:
    """n-qubit permutation-invariant pure state as n+1 Dicke coefficients."""

    n: int
    dicke: np.ndarray

    def __post_init__(self):
        d = np.ascontiguousarray(self.dicke, dtype=np.complex128)
        if d.shape != (self.n + 1,):
            raise ValidationError(
                f"expected {self.n + 1} Dicke coefficients for n={self.n}")
        norm = float(np.sum(np.abs(d) ** 2))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"Dicke coefficients not normalized: {norm!r}")
        d.flags.writeable = False
        object.__setattr__(self, "dicke", d)

    @classmethod
    def from_dicke(cls, values) -> "SymmetricState":
        d = np.asarray(values, dtype=np.complex128).ravel()
        return cls(d.size - 1, d)

    @classmethod
    def normalized(cls, values) -> "SymmetricState":
        d = np.asarray(values, dtype=np.complex128).ravel()
        norm = math.sqrt(float(np.sum(np.abs(d) ** 2)))
        if norm == 0.0:
            raise ValidationError("cannot normalize the zero vector")
        return cls(d.size - 1, d / norm)

    def to_state_vector(self) -> StateVector:
        """Expand into the full 2**n computational-basis amplitudes."""
        if self.n > STATEVECTOR_CAP:
            raise ResourceCapError(f"expansion capped at n <= {STATEVECTOR_CAP}")
        idx = np.arange(1 << self.n, dtype=np.int64)
        k = np.bitwise_count(idx).astype(np.int64)
        scales = np.array([1.0 / math.sqrt(math.comb(self.n, kk))
                           for kk in range(self.n + 1)])
        return StateVector(self.n, self.dicke[k] * scales[k])


@dataclass(frozen=True)
class MajoranaSpec:
    """Multiset of Bloch-sphere points: finite roots plus roots at infinity."""

    n: int
    finite_roots: tuple[complex, ...]
    roots_at_infinity: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("need n >= 1")
        if len(self.finite_roots) + self.roots_at_infinity != self.n:
            raise ValidationError("finite roots plus roots at infinity must equal n")
        if self.roots_at_infinity < 0:
            raise ValidationError("negative count of roots at infinity")


def _poly_coefficients(state: SymmetricState) -> np.ndarray:
    k = np.arange(state.n + 1)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    binom = np.array([math.sqrt(math.comb(state.n, kk)) for kk in range(state.n + 1)])
    return signs * binom * state.dicke


def majorana_polynomial(state: SymmetricState) -> np.ndarray:
    """Coefficients c_k of P(z) = sum_k c_k z**k, index = power of z."""
    return _poly_coefficients(state)


def majorana_from_dicke(state: SymmetricState) -> MajoranaSpec:
    """Roots of the Majorana polynomial; the degree deficit goes to infinity."""
    coeff = _poly_coefficients(state)
    cutoff = float(np.max(np.abs(coeff))) * _DEGREE_RTOL
    degree = max(k for k in range(state.n + 1) if abs(coeff[k]) > cutoff)
    if degree == 0:
        return MajoranaSpec(state.n, (), state.n)
    roots = np.roots(coeff[degree::-1])
    return MajoranaSpec(state.n, tuple(complex(z) for z in roots),
                        state.n - degree)


def dicke_from_majorana(spec: MajoranaSpec) -> SymmetricState:
    """Recover the Dicke coefficients from the root multiset.

    Each finite root z contributes the linear constraint P(z) = 0; each
    root at infinity forces the highest remaining coefficient to vanish.
    The unique unit-norm null vector (up to phase) is returned with its
    largest coefficient made real positive.
    """
    n = spec.n
    cols = n + 1
    binom = np.array([math.sqrt(math.comb(n, k)) for k in range(cols)])
    signs = np.where(np.arange(cols) % 2 == 0, 1.0, -1.0)
    rows = []
    for z in spec.finite_roots:
        powers = np.power(complex(z), np.arange(cols))
        row = signs * binom * powers
        rows.append(row / np.linalg.norm(row))
    for j in range(spec.roots_at_infinity):
        row = np.zeros(cols, dtype=complex)
        row[n - j] = 1.0
        rows.append(row)
    matrix = np.array(rows)
    _, svals, vh = np.linalg.svd(matrix)
    tol = float(svals[0]) * _NULLSPACE_RTOL if svals.size else 1.0
    null_dim = cols - matrix.shape[0] + int(np.sum(svals < tol))
    if null_dim != 1:
        raise DegenerateRootsError(
            f"null space has dimension {null_dim}; repeated roots make the "
            "linear recovery ill-conditioned")
    d = vh[-1].conj()
    pivot = int(np.argmax(np.abs(d)))
    phase = d[pivot] / abs(d[pivot])
    d = d / phase
    return SymmetricState.from_dicke(d / np.linalg.norm(d))


# ---------------------------------------------------------------------------
# stereographic conversion for Majorana points given as unit 3-vectors
# ---------------------------------------------------------------------------

def xyz_to_root(point: Sequence[float], tol: float = 1e-6) -> complex | None:
    """z = (x + iy)/(1 - w); the north pole maps to a root at infinity (None)."""
    x, y, w = (float(c) for c in point)
    norm = math.sqrt(x * x + y * y + w * w)
    if abs(norm - 1.0) > tol:
        raise ValidationError(f"Majorana point {point!r} is not a unit vector")
    x, y, w = x / norm, y / norm, w / norm
    if 1.0 - w < 1e-12:
        return None
    return complex(x, y) / (1.0 - w)


def root_to_xyz(z: complex | None) -> tuple[float, float, float]:
    """Inverse stereographic map; None stands for the north pole."""
    if z is None:
        return (0.0, 0.0, 1.0)
    mag2 = abs(z) ** 2
    denom = 1.0 + mag2
    return (2.0 * z.real / denom, 2.0 * z.imag / denom, (mag2 - 1.0) / denom)


def majorana_from_xyz(points: Iterable[Sequence[float]]) -> MajoranaSpec:
    roots = [xyz_to_root(p) for p in points]
    finite = tuple(z for z in roots if z is not None)
    return MajoranaSpec(len(roots), finite, len(roots) - len(finite))


# ---------------------------------------------------------------------------
# projected Pauli matrices and lambda components
# ---------------------------------------------------------------------------

def iter_lambda(n: int) -> Iterator[LambdaIndex]:
    """All (n+3 choose 3) lambda classes in a fixed deterministic order."""
    for l1 in range(n + 1):
        for l2 in range(n + 1 - l1):
            for l3 in range(n + 1 - l1 - l2):
                yield LambdaIndex(n - l1 - l2 - l3, l1, l2, l3)


def tau_matrix(lam) -> np.ndarray:
    """Projection of any Pauli word of class lambda onto the Dicke basis.

    Entry (k, k') sums i**(2 k3 + 3 l2 - 2 k2) times the four binomials
    over the split occupations k0..k3, divided by sqrt(C(n,k) C(n,k')).
    """
    l0, l1, l2, l3 = (int(v) for v in lam)
    if min(l0, l1, l2, l3) < 0:
        raise ValidationError(f"negative lambda entry in {lam!r}")
    n = l0 + l1 + l2 + l3
    if n < 1:
        raise ValidationError("lambda must describe at least one qubit")
    out = np.zeros((n + 1, n + 1), dtype=complex)
    for k0 in range(l0 + 1):
        c0 = math.comb(l0, k0)
        for k1 in range(l1 + 1):
            c01 = c0 * math.comb(l1, k1)
            for k2 in range(l2 + 1):
                c012 = c01 * math.comb(l2, k2)
                phase_base = (3 * l2 - 2 * k2) % 4
                for k3 in range(l3 + 1):
                    k = k0 + k1 + k2 + k3
                    kp = k0 + (l1 - k1) + (l2 - k2) + k3
                    coeff = c012 * math.comb(l3, k3)
                    out[k, kp] += _I_POW[(phase_base + 2 * k3) % 4] * coeff
    root = np.array([math.sqrt(math.comb(n, k)) for k in range(n + 1)])
    return out / np.outer(root, root)


@dataclass(frozen=True)
class LambdaEntry:
    value: complex
    multiplicity: int
    parity: Parity
    weight: int


@dataclass(frozen=True, eq=False)
class LambdaComponentTable:
    n: int
    entries: dict[LambdaIndex, LambdaEntry]

    def value(self, lam) -> complex:
        return self.entries[LambdaIndex(*lam)].value


def lambda_components(state: SymmetricState) -> LambdaComponentTable:
    """One Bloch component per lambda class, r = 2**-n <psi|tau|psi>."""
    n = state.n
    d = state.dicke
    scale = 2.0 ** -n
    entries: dict[LambdaIndex, LambdaEntry] = {}
    for lam in iter_lambda(n):
        if lam.weight == 0:
            value = complex(scale)
        else:
            value = scale * complex(d.conj() @ (tau_matrix(lam) @ d))
        entries[lam] = LambdaEntry(value, lam.multiplicity, lam.parity, lam.weight)
    return LambdaComponentTable(n, entries)


@dataclass(frozen=True)
class LambdaCounts:
    total: int
    odd: int
    even: int


def count_lambda(n: int) -> LambdaCounts:
    """Distinct lambda classes and their parity split (closed form)."""
    if n < 1:
        raise ValidationError("need n >= 1")
    total = math.comb(n + 3, 3)
    even = math.comb(n // 2 + 3, 3)
    return LambdaCounts(total, total - even, even)


@dataclass(frozen=True)
class CensusReport:
    n: int
    zero_odd: int
    total_odd: int
    ratio: float
    threshold: float


def odd_census(state: SymmetricState, tol: float = 1e-10) -> CensusReport:
    """How many odd-parity lambda components vanish at the given threshold."""
    table = lambda_components(state)
    total = zero = 0
    for entry in table.entries.values():
        if entry.parity is Parity.ODD:
            total += 1
            if abs(entry.value) <= tol:
                zero += 1
    return CensusReport(state.n, zero, total, zero / total, tol)


@dataclass(frozen=True)
class ConstraintReport:
    n: int
    t_max: int
    even_sum_residuals: dict[int, float]
    three_cycle_residual: float

    @property
    def max_residual(self) -> float:
        worst = max(self.even_sum_residuals.values(), default=0.0)
        return max(worst, self.three_cycle_residual)


def check_symmetry_constraints(state: SymmetricState, t_max: int) -> ConstraintReport:
    """Verify the transposition-derived component constraints.

    For every t <= t_max the multinomial-weighted sum of the components
    at [n-2t, 2c1, 2c2, 2c3] must equal 1/2**n.  The 3-cycle relation
    sums the antisymmetric symbol against components that are fully
    symmetric in their lower indices, so its coefficients cancel per
    lambda class and the residual is identically zero.
    """
    n = state.n
    if not 1 <= t_max <= n // 2:
        raise ValidationError(f"need 1 <= t_max <= floor(n/2), got {t_max}")
    table = lambda_components(state)
    target = 2.0 ** -n
    residuals: dict[int, float] = {}
    for t in range(1, t_max + 1):
        total = 0.0
        for c1 in range(t + 1):
            for c2 in range(t + 1 - c1):
                c3 = t - c1 - c2
                mult = (math.factorial(t) // math.factorial(c1)
                        // math.factorial(c2) // math.factorial(c3))
                lam = LambdaIndex(n - 2 * t, 2 * c1, 2 * c2, 2 * c3)
                total += mult * table.entries[lam].value.real
        residuals[t] = abs(total - target)

    three_cycle = 0.0
    if n >= 3:
        coeffs: dict[LambdaIndex, int] = {}
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                for c in (1, 2, 3):
                    eps = _levi_civita(a, b, c)
                    if eps == 0:
                        continue
                    counts = [n - 3, 0, 0, 0]
                    for idx in (a, c, b):
                        counts[idx] += 1
                    lam = LambdaIndex(*counts)
                    coeffs[lam] = coeffs.get(lam, 0) + eps
        acc = sum(coeff * table.entries[lam].value
                  for lam, coeff in coeffs.items())
        three_cycle = abs(acc)
    return ConstraintReport(n, t_max, residuals, three_cycle)


def _levi_civita(a: int, b: int, c: int) -> int:
    if (a, b, c) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        return 1
    if (a, b, c) in ((1, 3, 2), (3, 2, 1), (2, 1, 3)):
        return -1
    return 0


@dataclass(frozen=True)
class WitnessReport:
    is_2mm: bool
    witness_lambda: LambdaIndex
    witness_value: float


def theorem2_witness(state: SymmetricState) -> WitnessReport:
    """A weight-2 component that cannot vanish for a symmetric state.

    The three weight-2 classes sum to 1/2**n, so the largest is at least
    1/(3 2**n); no symmetric state is 2-MM.
    """
    n = state.n
    if n < 2:
        raise ValidationError("the witness needs n >= 2")
    d = state.dicke
    scale = 2.0 ** -n
    best_lam = None
    best_val = -math.inf
    for axis in (1, 2, 3):
        counts = [n - 2, 0, 0, 0]
        counts[axis] = 2
        lam = LambdaIndex(*counts)
        val = (scale * complex(d.conj() @ (tau_matrix(lam) @ d))).real
        if val > best_val:
            best_lam, best_val = lam, val
    return WitnessReport(False, best_lam, best_val)


# ---------------------------------------------------------------------------
# rotations U^(x)n restricted to the symmetric subspace
# ---------------------------------------------------------------------------

def euler_unitary(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Single-qubit Rz(alpha) Ry(beta) Rz(gamma)."""
    def rz(t):
        return np.array([[cmath.exp(-0.5j * t), 0], [0, cmath.exp(0.5j * t)]])

    def ry(t):
        return np.array([[math.cos(t / 2), -math.sin(t / 2)],
                         [math.sin(t / 2), math.cos(t / 2)]], dtype=complex)

    return rz(alpha) @ ry(beta) @ rz(gamma)


def symmetric_unitary(u: np.ndarray, n: int) -> np.ndarray:
    """(n+1) x (n+1) action of U^(x)n on the Dicke basis.

    Column k is read off the binomial expansion of
    (a x + b y)**(n-k') (c x + d y)**k', the image of the degree-n
    coherent polynomial under the single-qubit map.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValidationError("expected a 2x2 matrix")
    a, b = u[0, 0], u[0, 1]
    c, d = u[1, 0], u[1, 1]
    out = np.zeros((n + 1, n + 1), dtype=complex)
    root = np.array([math.sqrt(math.comb(n, k)) for k in range(n + 1)])
    for kp in range(n + 1):
        p1 = np.array([math.comb(n - kp, j) * a ** (n - kp - j) * b ** j
                       for j in range(n - kp + 1)])
        p2 = np.array([math.comb(kp, i) * c ** (kp - i) * d ** i
                       for i in range(kp + 1)])
        conv = np.convolve(p1, p2)
        out[kp, :] = root[kp] * conv / root
    return out


def rotate_symmetric(state: SymmetricState, alpha: float, beta: float,
                     gamma: float) -> SymmetricState:
    """Apply the same single-qubit Euler rotation to every qubit."""
    matrix = symmetric_unitary(euler_unitary(alpha, beta, gamma), state.n)
    return SymmetricState.from_dicke(matrix @ state.dicke)


# ---------------------------------------------------------------------------
# catalog of geometric-entanglement maximizers
# ---------------------------------------------------------------------------

def table1_states() -> dict[int, SymmetricState]:
    """The printed maximizer states for n = 4..10 and 12.

    The n = 5 and n = 8 rows are printed to three decimals and are
    renormalized here.  The n = 12 source row repeats the n = 10 kets;
    it is read as (|S_2> + |S_8>)/sqrt(2) on 12 qubits and its census is
    reported as diagnostic only.
    """
    def two_level(n, i, j, wi=1.0, wj=1.0):
        d = np.zeros(n + 1, dtype=complex)
        d[i] = wi
        d[j] = wj
        return SymmetricState.normalized(d)

    states = {
        4: two_level(4, 0, 3, 1.0 / math.sqrt(3), math.sqrt(2.0 / 3.0)),
        5: two_level(5, 0, 4, 0.547, 0.837),
        6: two_level(6, 1, 5),
        7: two_level(7, 1, 6),
        8: two_level(8, 1, 6, 0.672, 0.741),
        9: two_level(9, 2, 7),
        10: two_level(10, 2, 8),
        12: two_level(12, 2, 8),
    }
    return states


def tetrahedron_state() -> SymmetricState:
    """The 4-qubit maximizer with its Majorana tetrahedron along the
    +-(1,1,1) axes.

    This orientation is the one whose component table is the clean
    {1, +-1/3, 1/sqrt(3)}/2**4 pattern with a single non-vanishing odd
    class [1,1,1,1]; the printed Dicke form of the same state (see
    table1_states) is a U^(x)n rotation of it with census 18/25.
    """
    s = 1.0 / math.sqrt(3.0)
    points = [(-s, -s, -s), (-s, s, s), (s, -s, s), (s, s, -s)]
    return dicke_from_majorana(majorana_from_xyz(points))


def icosahedron_state() -> SymmetricState:
    """The 12-qubit icosahedron maximizer with 2-fold axes along x, y, z.

    In this orientation every odd component vanishes (census 371/371)
    and the low-weight classes carry {1, +-1/3, 2/10, +-1/15}/2**12.
    """
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    norm = math.sqrt(1.0 + phi * phi)
    points = []
    for a, b in ((1, phi), (1, -phi), (-1, phi), (-1, -phi)):
        points.append((0.0, a / norm, b / norm))
        points.append((a / norm, b / norm, 0.0))
        points.append((b / norm, 0.0, a / norm))
    return dicke_from_majorana(majorana_from_xyz(points))


def dodecahedron_state(points: Iterable[Sequence[float]] | None) -> SymmetricState:
    """n = 20 maximizer from externally supplied Majorana coordinates."""
    if points is None:
        raise NotAvailableError(
            "the n=20 dodecahedron state needs a Majorana coordinates file")
    spec = majorana_from_xyz(points)
    if spec.n != 20:
        raise ValidationError(f"expected 20 Majorana points, got {spec.n}")
    return dicke_from_majorana(spec)
