import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kmm import pauli
from kmm.errors import DimensionMismatchError, ResourceCapError, ValidationError
from kmm.pauli import LambdaIndex, Parity, PauliOperator


def op(text):
    return PauliOperator.from_literal(text)


@st.composite
def pauli_ops(draw, max_n=4, n=None):
    nn = n if n is not None else draw(st.integers(1, max_n))
    x = draw(st.integers(0, (1 << nn) - 1))
    z = draw(st.integers(0, (1 << nn) - 1))
    phase = draw(st.integers(0, 3))
    return PauliOperator(nn, x, z, phase)


class TestLiterals:
    def test_parse_plain(self):
        p = op("XZIZY")
        assert p.n == 5 and p.phase_exp == 0
        assert p.literal == "XZIZY"

    def test_parse_phases(self):
        assert op("-iXZIZY").phase_exp == 3
        assert op("+iY").phase_exp == 1
        assert op("-ZZ").phase_exp == 2
        assert op("+X").phase_exp == 0

    def test_position_one_is_leftmost(self):
        p = op("XI")
        assert p.x_mask == 0b01  # qubit 1 = bit 0

    @pytest.mark.parametrize("bad", ["", "-i", "XQ", "iiX", "X Z"])
    def test_rejects(self, bad):
        with pytest.raises(ValidationError):
            op(bad)

    @given(pauli_ops())
    def test_round_trip(self, p):
        assert PauliOperator.from_literal(p.literal) == p

    @given(pauli_ops())
    def test_index_string_round_trip(self, p):
        q = PauliOperator.from_index_string(p.index_string, p.phase_exp)
        assert q == p


class TestMultiply:
    def test_xy_is_iz(self):
        prod = pauli.multiply(op("X"), op("Y"))
        assert prod == op("+iZ")

    def test_disjoint_supports_commute(self):
        assert pauli.multiply(op("IZ"), op("ZI")) == op("ZZ")

    @given(pauli_ops())
    def test_self_square_has_identity_masks(self, p):
        sq = pauli.multiply(p, p)
        assert sq.x_mask == 0 and sq.z_mask == 0
        assert sq.phase_exp in (0, 2)
        if p.is_hermitian:
            assert sq.phase_exp == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            pauli.multiply(op("X"), op("XX"))

    @given(pauli_ops(max_n=3), pauli_ops(max_n=3), pauli_ops(max_n=3))
    @settings(max_examples=60)
    def test_associative(self, a, b, c):
        n = max(a.n, b.n, c.n)
        a, b, c = (PauliOperator(n, p.x_mask, p.z_mask, p.phase_exp)
                   for p in (a, b, c))
        lhs = pauli.multiply(pauli.multiply(a, b), c)
        rhs = pauli.multiply(a, pauli.multiply(b, c))
        assert lhs == rhs

    @given(pauli_ops(n=3), pauli_ops(n=3))
    @settings(max_examples=60)
    def test_matches_dense_product(self, a, b):
        got = pauli.to_dense(pauli.multiply(a, b))
        want = pauli.to_dense(a) @ pauli.to_dense(b)
        assert np.array_equal(got, want)

    @given(pauli_ops(n=3), pauli_ops(n=3))
    @settings(max_examples=60)
    def test_phase_antisymmetry(self, a, b):
        ab = pauli.multiply(a, b).phase_exp
        ba = pauli.multiply(b, a).phase_exp
        if pauli.commutes(a, b):
            assert ab == ba
        else:
            assert (ab - ba) % 4 == 2


class TestCommutes:
    def test_examples(self):
        assert not pauli.commutes(op("X"), op("Z"))
        assert pauli.commutes(op("XX"), op("ZZ"))
        assert pauli.commutes(op("XYZ"), op("III"))

    @given(pauli_ops(n=3), pauli_ops(n=3))
    @settings(max_examples=60)
    def test_matches_dense_commutator(self, a, b):
        comm = (pauli.to_dense(a) @ pauli.to_dense(b)
                - pauli.to_dense(b) @ pauli.to_dense(a))
        assert pauli.commutes(a, b) == not_nonzero(comm)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            pauli.commutes(op("X"), op("XX"))


def not_nonzero(mat):
    return bool(np.all(mat == 0))


class TestWeightParityLambda:
    def test_weight_examples(self):
        assert pauli.weight(PauliOperator.from_index_string("0113")) == 3
        assert pauli.weight(PauliOperator.identity(4)) == 0
        assert pauli.weight(PauliOperator.from_index_string("3" * 7)) == 7

    def test_parity_examples(self):
        assert pauli.parity(PauliOperator.from_index_string("011")) is Parity.EVEN
        assert pauli.parity(PauliOperator.from_index_string("1122")) is Parity.EVEN
        for digits in ("122", "0123", "1123"):
            assert pauli.parity(PauliOperator.from_index_string(digits)) is Parity.ODD

    @given(pauli_ops(max_n=6))
    def test_odd_weight_implies_odd_parity(self, p):
        if pauli.weight(p) % 2 == 1:
            assert pauli.parity(p) is Parity.ODD

    def test_lambda_examples(self):
        assert pauli.lambda_of(PauliOperator.from_index_string("0113")) == (1, 2, 0, 1)
        assert pauli.lambda_of(PauliOperator.identity(5)) == (5, 0, 0, 0)
        assert pauli.lambda_of(PauliOperator.from_index_string("1231")) == (0, 2, 1, 1)

    @given(pauli_ops(max_n=6), st.permutations(range(6)))
    @settings(max_examples=60)
    def test_permutation_invariance(self, p, perm):
        digits = p.index_string
        order = [i for i in perm if i < p.n]
        shuffled = "".join(digits[i] for i in order)
        q = PauliOperator.from_index_string(shuffled)
        assert pauli.weight(q) == pauli.weight(p)
        assert pauli.parity(q) is pauli.parity(p)
        assert sorted(pauli.lambda_of(q)) == sorted(pauli.lambda_of(p))

    def test_lambda_index_fields(self):
        lam = LambdaIndex(1, 2, 0, 1)
        assert lam.n == 4 and lam.weight == 3 and lam.parity is Parity.ODD
        assert lam.multiplicity == 12
        assert LambdaIndex(2, 2, 0, 0).multiplicity == 6


class TestDense:
    def test_identity_trace(self):
        mat = pauli.to_dense(PauliOperator.identity(2))
        assert np.array_equal(mat, np.eye(4))
        assert mat.trace() == 4

    def test_single_z(self):
        assert np.array_equal(pauli.to_dense(op("Z")), np.diag([1, -1]))

    @given(pauli_ops(n=3))
    @settings(max_examples=30)
    def test_traceless_unless_identity(self, p):
        tr = pauli.to_dense(p).trace()
        if p.has_identity_masks:
            assert abs(tr - 8 * (1j ** p.phase_exp)) < 1e-12
        else:
            assert abs(tr) < 1e-12

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            pauli.to_dense(PauliOperator.identity(13))


class TestKeys:
    @given(pauli_ops(max_n=8))
    def test_pack_unpack(self, p):
        key = p.key
        assert pauli.unpack_key(key, p.n) == (p.x_mask, p.z_mask)
        assert pauli.key_weight(key) == pauli.weight(p)
        assert pauli.key_lambda(key, p.n) == pauli.lambda_of(p)

    @given(pauli_ops(n=4), pauli_ops(n=4))
    def test_product_key_is_xor(self, a, b):
        assert pauli.multiply(a, b).key == a.key ^ b.key

    def test_index_string_digits(self):
        p = PauliOperator.from_literal("IXYZ")
        assert p.index_string == "0123"
        assert pauli.key_from_index_string("0123") == p.key
