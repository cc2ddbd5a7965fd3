"""Exact arithmetic on n-qubit Pauli operators in binary symplectic form.

An operator is ``i**phase_exp * (P_1 (x) P_2 (x) ... (x) P_n)`` where
qubit ``i`` carries an X factor iff bit ``i-1`` of ``x_mask`` is set and
a Z factor iff bit ``i-1`` of ``z_mask`` is set; both bits set means Y.
Products, commutation, weight and parity then reduce to XOR/AND plus
popcounts, so everything in this module is exact integer arithmetic.

For sparse maps each operator's index is packed into a single integer
key with 2 bits per qubit, little-endian by qubit position (qubit 1 in
the lowest bits).  The per-qubit field is ``x + 2*z``, so multiplying
two operators XORs their keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatchError, ResourceCapError, ValidationError

DENSE_CAP = 12  # 4096 x 4096 complex entries is the desk-scale limit

# per-qubit field value x + 2z: 0 = I, 1 = X, 2 = Z, 3 = Y
_FIELD_CHARS = "IXZY"
_CHAR_FIELDS = {c: v for v, c in enumerate(_FIELD_CHARS)}
# paper-style digits 0123 = I, X, Y, Z; the map to/from fields is an involution
_FIELD_TO_DIGIT = (0, 1, 3, 2)

_PHASE_PREFIXES = {"": 0, "+": 0, "+i": 1, "i": 1, "-": 2, "-i": 3}
_PHASE_STRINGS = {0: "", 1: "+i", 2: "-", 3: "-i"}

_SINGLE_DENSE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_I_POW = (1, 1j, -1, -1j)


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class LambdaIndex(NamedTuple):
    """Counts [l0, l1, l2, l3] of subindices 0, 1, 2, 3 in a Pauli index."""

    l0: int
    l1: int
    l2: int
    l3: int

    @property
    def n(self) -> int:
        return self.l0 + self.l1 + self.l2 + self.l3

    @property
    def weight(self) -> int:
        return self.n - self.l0

    @property
    def parity(self) -> Parity:
        even = self.l1 % 2 == 0 and self.l2 % 2 == 0 and self.l3 % 2 == 0
        return Parity.EVEN if even else Parity.ODD

    @property
    def multiplicity(self) -> int:
        """Number of distinct Pauli indices in this permutation class."""
        return (math.factorial(self.n) // math.factorial(self.l0)
                // math.factorial(self.l1) // math.factorial(self.l2)
                // math.factorial(self.l3))


def even_bit_mask(n: int) -> int:
    """0b0101...01 with n set bits, selecting the x bit of every field."""
    return (4 ** n - 1) // 3


def pack_key(x_mask: int, z_mask: int, n: int) -> int:
    """Interleave x/z masks into the packed 2-bit-per-qubit key."""
    key = 0
    for i in range(n):
        key |= (((x_mask >> i) & 1) | (((z_mask >> i) & 1) << 1)) << (2 * i)
    return key


def unpack_key(key: int, n: int) -> tuple[int, int]:
    x = z = 0
    for i in range(n):
        field = (key >> (2 * i)) & 3
        x |= (field & 1) << i
        z |= (field >> 1) << i
    return x, z


def key_weight(key: int) -> int:
    """Number of non-identity tensor factors in a packed index."""
    w = 0
    while key:
        if key & 3:
            w += 1
        key >>= 2
    return w


def key_lambda(key: int, n: int) -> LambdaIndex:
    mask = even_bit_mask(n)
    x = key & mask
    z = (key >> 1) & mask
    l1 = (x & (mask ^ z)).bit_count()
    l2 = (x & z).bit_count()
    l3 = (z & (mask ^ x)).bit_count()
    return LambdaIndex(n - l1 - l2 - l3, l1, l2, l3)


def key_parity(key: int, n: int) -> Parity:
    return key_lambda(key, n).parity


def key_to_index_string(key: int, n: int) -> str:
    """Digit string like "0113" (position 1 leftmost, digits 0123 = I,X,Y,Z)."""
    return "".join(str(_FIELD_TO_DIGIT[(key >> (2 * i)) & 3]) for i in range(n))


def key_from_index_string(digits: str) -> int:
    key = 0
    for i, c in enumerate(digits):
        if c not in "0123":
            raise ValidationError(f"invalid Pauli index digit {c!r} in {digits!r}")
        key |= _FIELD_TO_DIGIT[int(c)] << (2 * i)
    return key


@dataclass(frozen=True)
class PauliOperator:
    """One element of the n-qubit Pauli group, i**phase_exp times a tensor word."""

    n: int
    x_mask: int
    z_mask: int
    phase_exp: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("qubit count must be positive")
        top = 1 << self.n
        if not (0 <= self.x_mask < top and 0 <= self.z_mask < top):
            raise ValidationError("mask has bits beyond the qubit count")
        if self.phase_exp not in (0, 1, 2, 3):
            raise ValidationError("phase exponent must be 0..3 (power of i)")

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_literal(cls, text: str) -> "PauliOperator":
        """Parse e.g. "-iXZIZY"; the optional prefix is +, -, +i or -i."""
        s = text.strip()
        prefix = ""
        while s and s[0] in "+-i":
            prefix += s[0]
            s = s[1:]
        if prefix not in _PHASE_PREFIXES:
            raise ValidationError(f"invalid phase prefix {prefix!r} in {text!r}")
        if not s:
            raise ValidationError(f"no Pauli letters in {text!r}")
        x = z = 0
        for i, c in enumerate(s.upper()):
            if c not in _CHAR_FIELDS:
                raise ValidationError(f"invalid Pauli letter {c!r} in {text!r}")
            field = _CHAR_FIELDS[c]
            x |= (field & 1) << i
            z |= (field >> 1) << i
        return cls(len(s), x, z, _PHASE_PREFIXES[prefix])

    @classmethod
    def from_index_string(cls, digits: str, phase_exp: int = 0) -> "PauliOperator":
        key = key_from_index_string(digits)
        x, z = unpack_key(key, len(digits))
        return cls(len(digits), x, z, phase_exp)

    @classmethod
    def from_key(cls, key: int, n: int, phase_exp: int = 0) -> "PauliOperator":
        x, z = unpack_key(key, n)
        return cls(n, x, z, phase_exp)

    @property
    def key(self) -> int:
        return pack_key(self.x_mask, self.z_mask, self.n)

    @property
    def index_string(self) -> str:
        return key_to_index_string(self.key, self.n)

    @property
    def literal(self) -> str:
        word = "".join(
            _FIELD_CHARS[((self.x_mask >> i) & 1) | (((self.z_mask >> i) & 1) << 1)]
            for i in range(self.n))
        return _PHASE_STRINGS[self.phase_exp] + word

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0 and self.phase_exp == 0

    @property
    def has_identity_masks(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __repr__(self):
        return f"PauliOperator({self.literal!r})"


def _check_same_n(a: PauliOperator, b: PauliOperator):
    if a.n != b.n:
        raise DimensionMismatchError(f"operands act on {a.n} vs {b.n} qubits")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Product a*b as a single Pauli operator with the phase tracked mod 4.

    Per qubit, sigma_(x,z) = i**(x&z) X**x Z**z; commuting the Z part of a
    past the X part of b contributes (-1)**(z_a & x_b).
    """
    _check_same_n(a, b)
    x = a.x_mask ^ b.x_mask
    z = a.z_mask ^ b.z_mask
    phase = (a.phase_exp + b.phase_exp
             + (a.x_mask & a.z_mask).bit_count()
             + (b.x_mask & b.z_mask).bit_count()
             + 2 * (a.z_mask & b.x_mask).bit_count()
             + 3 * (x & z).bit_count()) % 4
    return PauliOperator(a.n, x, z, phase)


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    """True iff the symplectic inner product of the two words is even."""
    _check_same_n(a, b)
    return ((a.x_mask & b.z_mask).bit_count()
            + (a.z_mask & b.x_mask).bit_count()) % 2 == 0


def weight(a: PauliOperator) -> int:
    """Number of non-identity tensor factors."""
    return (a.x_mask | a.z_mask).bit_count()


def lambda_of(a: PauliOperator) -> LambdaIndex:
    l2 = (a.x_mask & a.z_mask).bit_count()
    l1 = a.x_mask.bit_count() - l2
    l3 = a.z_mask.bit_count() - l2
    return LambdaIndex(a.n - l1 - l2 - l3, l1, l2, l3)


def parity(a: PauliOperator) -> Parity:
    return lambda_of(a).parity


def to_dense(a: PauliOperator) -> np.ndarray:
    """Dense 2^n x 2^n matrix, i**phase_exp times the Kronecker word."""
    if a.n > DENSE_CAP:
        raise ResourceCapError(f"dense realization capped at n <= {DENSE_CAP}")
    out = np.array([[_I_POW[a.phase_exp]]], dtype=complex)
    for i in range(a.n):
        field = ((a.x_mask >> i) & 1) | (((a.z_mask >> i) & 1) << 1)
        out = np.kron(out, _SINGLE_DENSE[_FIELD_CHARS[field]])
    return out
