import random
from fractions import Fraction

import pytest

from amplecones import (
    AlgebraMatrix,
    ConeSpec,
    GaussianRational,
    HermitianMatrix,
    InvalidInput,
    LorentzBlock,
    LorentzVector,
    PDBlock,
    RationalQuaternion,
    ScalarKind,
    ShapeMismatch,
    SingularMatrix,
    Unsupported,
    act,
    cone_member,
    hermitian_basis,
    hermitian_dimension,
    is_positive_definite,
    is_positive_semidefinite,
    ldl_witness,
    lorentz_member,
    negative_certificate,
    quadratic_value,
    trace_inner_product,
)
from support import (
    MATRIX_KINDS,
    flatten_hermitian,
    random_hermitian_matrix,
    random_invertible_matrix,
    random_pd_matrix,
    rank_one_plus_shift,
    rational_rank,
)

R, C, H = ScalarKind.REAL, ScalarKind.COMPLEX, ScalarKind.QUATERNION
j_unit = RationalQuaternion(0, 0, 1, 0)


class TestConstruction:
    def test_rejects_non_hermitian(self):
        with pytest.raises(InvalidInput):
            HermitianMatrix(R, [[1, 2], [3, 1]])
        with pytest.raises(InvalidInput):
            HermitianMatrix(C, [[GaussianRational(0, 1), 0], [0, 0]])
        with pytest.raises(InvalidInput):
            # off-diagonal pair must be conjugate, not equal
            HermitianMatrix(C, [[1, GaussianRational(1, 1)], [GaussianRational(1, 1), 1]])

    def test_entry_kind_enforced(self):
        with pytest.raises(ShapeMismatch):
            AlgebraMatrix(R, [[GaussianRational(1, 0)]])

    def test_octonion_entries_rejected(self):
        with pytest.raises(Unsupported):
            AlgebraMatrix(ScalarKind.OCTONION, [[1]])


class TestTraceInnerProduct:
    def test_examples(self):
        eye = HermitianMatrix.identity(R, 2)
        assert trace_inner_product(eye, eye) == 2
        e1 = HermitianMatrix.diagonal(R, [1, 0])
        e2 = HermitianMatrix.diagonal(R, [0, 1])
        assert trace_inner_product(e1, e2) == 0
        x = HermitianMatrix(H, [[1, j_unit], [-j_unit, 1]])
        assert trace_inner_product(x, x) == 4

    def test_symmetric_and_positive(self):
        rng = random.Random(23)
        for kind in MATRIX_KINDS:
            for _ in range(30):
                x = random_hermitian_matrix(rng, kind, rng.randint(1, 3))
                y = random_hermitian_matrix(rng, kind, x.size)
                assert trace_inner_product(x, y) == trace_inner_product(y, x)
                if any(any(v for v in row) for row in x.entries):
                    assert trace_inner_product(x, x) > 0

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            trace_inner_product(
                HermitianMatrix.identity(R, 2), HermitianMatrix.identity(R, 3)
            )
        with pytest.raises(ShapeMismatch):
            trace_inner_product(
                HermitianMatrix.identity(R, 2), HermitianMatrix.identity(C, 2)
            )


class TestPositiveDefinite:
    def test_examples(self):
        for kind in MATRIX_KINDS:
            assert is_positive_definite(HermitianMatrix.identity(kind, 3))
        assert not is_positive_definite(HermitianMatrix(R, [[1, 2], [2, 1]]))
        assert is_positive_definite(HermitianMatrix(R, [[2, -1], [-1, 2]]))

    def test_boundary(self):
        d = HermitianMatrix.diagonal(R, [1, 0])
        assert not is_positive_definite(d)
        assert is_positive_semidefinite(d)
        off = HermitianMatrix(R, [[0, 1], [1, 0]])
        assert not is_positive_semidefinite(off)

    def test_quaternionic(self):
        x = HermitianMatrix(H, [[2, j_unit], [-j_unit, 2]])
        assert is_positive_definite(x)
        y = HermitianMatrix(H, [[1, 2 * j_unit], [-2 * j_unit, 1]])
        assert not is_positive_definite(y)


class TestLdlWitness:
    def test_examples(self):
        eye = HermitianMatrix.identity(R, 3)
        lower, delta = ldl_witness(eye)
        assert lower == AlgebraMatrix.identity(R, 3)
        assert delta == (1, 1, 1)

        lower, delta = ldl_witness(HermitianMatrix.diagonal(R, [4, 9]))
        assert lower == AlgebraMatrix.identity(R, 2)
        assert delta == (4, 9)

        lower, delta = ldl_witness(HermitianMatrix(R, [[2, -1], [-1, 2]]))
        assert lower == AlgebraMatrix(R, [[1, 0], [Fraction(-1, 2), 1]])
        assert delta == (2, Fraction(3, 2))

    def test_recomposition_random(self):
        rng = random.Random(29)
        for kind in MATRIX_KINDS:
            for _ in range(40):
                d = random_pd_matrix(rng, kind, rng.randint(1, 3))
                lower, delta = ldl_witness(d)
                recomposed = act(lower.star(), HermitianMatrix.diagonal(kind, delta))
                assert recomposed == d
                assert all(p > 0 for p in delta)

    def test_rejects_indefinite(self):
        from amplecones import NotPositiveDefinite

        with pytest.raises(NotPositiveDefinite):
            ldl_witness(HermitianMatrix(R, [[1, 2], [2, 1]]))


class TestAction:
    def test_examples(self):
        eye = HermitianMatrix.identity(R, 2)
        assert act(AlgebraMatrix.identity(R, 2), eye) == eye
        shear = AlgebraMatrix(R, [[1, 1], [0, 1]])
        assert act(shear, eye) == HermitianMatrix(R, [[1, 1], [1, 2]])
        stretch = AlgebraMatrix.diagonal(R, [2, 1])
        assert act(stretch, eye) == HermitianMatrix.diagonal(R, [4, 1])

    def test_composition_and_preservation(self):
        rng = random.Random(31)
        for kind in MATRIX_KINDS:
            for _ in range(40):
                size = rng.randint(1, 3)
                m1 = random_invertible_matrix(rng, kind, size)
                m2 = random_invertible_matrix(rng, kind, size)
                d = random_pd_matrix(rng, kind, size)
                assert act(m1 * m2, d) == act(m2, act(m1, d))
                assert is_positive_definite(act(m1, d))

    def test_errors(self):
        eye = HermitianMatrix.identity(R, 2)
        with pytest.raises(SingularMatrix):
            act(AlgebraMatrix(R, [[1, 1], [1, 1]]), eye)
        with pytest.raises(ShapeMismatch):
            act(AlgebraMatrix.identity(R, 3), eye)


class TestSelfDuality:
    def test_in_cone_pairs_pair_positively(self):
        rng = random.Random(37)
        for kind in MATRIX_KINDS:
            for _ in range(60):
                size = rng.randint(1, 3)
                x = random_pd_matrix(rng, kind, size)
                y = random_pd_matrix(rng, kind, size)
                assert trace_inner_product(x, y) > 0

    def test_outside_points_are_separated(self):
        rng = random.Random(41)
        for kind in MATRIX_KINDS:
            found = 0
            while found < 25:
                x = random_hermitian_matrix(rng, kind, rng.randint(2, 3))
                if is_positive_semidefinite(x):
                    continue
                found += 1
                v = negative_certificate(x)
                assert v is not None
                value = quadratic_value(x, v)
                assert value < 0
                trace = trace_inner_product(x, HermitianMatrix.identity(kind, x.size))
                shift = -value / (2 * (abs(trace) + 1))
                y = rank_one_plus_shift(v, kind, shift)
                assert is_positive_definite(y)
                assert trace_inner_product(x, y) < 0

    def test_certificate_absent_for_psd(self):
        rng = random.Random(43)
        for kind in MATRIX_KINDS:
            for _ in range(20):
                d = random_pd_matrix(rng, kind, rng.randint(1, 3))
                assert negative_certificate(d) is None

    def test_certificate_zero_pivot_branch(self):
        # zero diagonal with a nonzero off-diagonal entry is never psd
        hyperbolic = HermitianMatrix(R, [[0, 1], [1, 0]])
        v = negative_certificate(hyperbolic)
        assert quadratic_value(hyperbolic, v) < 0

        i_unit = GaussianRational(0, 1)
        skew = HermitianMatrix(C, [[0, i_unit], [-i_unit, 3]])
        v = negative_certificate(skew)
        assert quadratic_value(skew, v) < 0

        quat = HermitianMatrix(H, [[0, j_unit], [-j_unit, -2]])
        v = negative_certificate(quat)
        assert quadratic_value(quat, v) < 0

    def test_psd_zero_leading_block(self):
        assert is_positive_semidefinite(HermitianMatrix(R, [[0, 0], [0, 1]]))
        assert is_positive_semidefinite(HermitianMatrix.diagonal(R, [0, 0, 2]))
        assert not is_positive_semidefinite(HermitianMatrix(R, [[0, 0], [0, -1]]))


class TestLorentz:
    def test_examples(self):
        assert lorentz_member(LorentzVector([2, 1, 1]))
        assert not lorentz_member(LorentzVector([1, 1, 0]))
        assert not lorentz_member(LorentzVector([-3, 1, 1]))

    def test_closed(self):
        assert lorentz_member(LorentzVector([1, 1, 0]), closed=True)
        assert not lorentz_member(LorentzVector([-1, 1, 0]), closed=True)

    def test_p2_lorentz_correspondence(self):
        # [[p, q], [q, s]] is PD iff (p+s, p-s, 2q) lies in the Lorentz cone
        grid = [Fraction(n, 2) for n in range(-6, 7)]
        for p in grid:
            for q in grid:
                for s in grid:
                    m = HermitianMatrix(R, [[p, q], [q, s]])
                    v = LorentzVector([p + s, p - s, 2 * q])
                    assert is_positive_definite(m) == lorentz_member(v)


class TestConeSpec:
    def test_direct_sum_membership(self):
        spec = ConeSpec([PDBlock(R, 1), PDBlock(R, 1)])
        one_two = [HermitianMatrix(R, [[1]]), HermitianMatrix(R, [[2]])]
        assert cone_member(spec, one_two)
        one_zero = [HermitianMatrix(R, [[1]]), HermitianMatrix(R, [[0]])]
        assert not cone_member(spec, one_zero)  # open cone excludes boundary
        assert cone_member(spec, one_zero, closed=True)

        pd2 = ConeSpec([PDBlock(R, 2)])
        assert cone_member(pd2, [HermitianMatrix(R, [[2, -1], [-1, 2]])])

    def test_mixed_blocks(self):
        spec = ConeSpec([PDBlock(C, 1), LorentzBlock(2)])
        parts = [HermitianMatrix.identity(C, 1), LorentzVector([2, 1, 1])]
        assert cone_member(spec, parts)
        parts = [HermitianMatrix.identity(C, 1), LorentzVector([1, 1, 1])]
        assert not cone_member(spec, parts)

    def test_dimension(self):
        spec = ConeSpec([PDBlock(R, 2), PDBlock(C, 2), PDBlock(H, 2), LorentzBlock(3)])
        assert spec.dimension == 3 + 4 + 6 + 4

    def test_shape_errors(self):
        spec = ConeSpec([PDBlock(R, 2)])
        with pytest.raises(ShapeMismatch):
            cone_member(spec, [HermitianMatrix.identity(R, 3)])
        with pytest.raises(ShapeMismatch):
            cone_member(spec, [HermitianMatrix.identity(C, 2)])
        with pytest.raises(ShapeMismatch):
            cone_member(spec, [])

    def test_octonion_block_is_tag_only(self):
        block = PDBlock(ScalarKind.OCTONION, 3)
        assert block.dimension == 27
        spec = ConeSpec([block])
        assert spec.dimension == 27
        with pytest.raises(Unsupported):
            cone_member(spec, [HermitianMatrix.identity(R, 3)])
        with pytest.raises(Unsupported):
            PDBlock(ScalarKind.OCTONION, 2)


class TestDimensions:
    def test_formulas(self):
        for r in range(1, 5):
            assert hermitian_dimension(R, r) == r * (r + 1) // 2
            assert hermitian_dimension(C, r) == r * r
            assert hermitian_dimension(H, r) == r * (2 * r - 1)

    def test_basis_enumeration(self):
        for kind in MATRIX_KINDS:
            for r in range(1, 5):
                basis = hermitian_basis(kind, r)
                assert len(basis) == hermitian_dimension(kind, r)
                flat = [flatten_hermitian(b) for b in basis]
                assert rational_rank(flat) == len(basis)
