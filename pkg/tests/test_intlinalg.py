import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kgraph_k import (
    AbelianGroupPresentation as AG,
    IntMatrix,
    SubgroupNotContained,
    cokernel_invariants,
    det,
    kernel_basis,
    quotient_presentation,
    snf,
)

from _oracles import invariant_factors_oracle, laplace_det

# differentials of the Z/2 skew product over three 3-bouquets, used as reference values
CUBE_D1 = [[-1, -1, -1, -1, 1, -3], [-1, -1, -1, -1, -3, 1]]
CUBE_D2 = [
    [1, 1, -1, 3, 0, 0],
    [1, 1, 3, -1, 0, 0],
    [-1, -1, 0, 0, -1, 3],
    [-1, -1, 0, 0, 3, -1],
    [0, 0, -1, -1, -1, -1],
    [0, 0, -1, -1, -1, -1],
]
CUBE_D3 = [[1, -3], [-3, 1], [1, 1], [1, 1], [-1, -1], [-1, -1]]

# same construction over bouquets of sizes 2, 3, 3
MIXED_D1 = [[0, -1, 0, -2, 1, -3], [-1, 0, -2, 0, -3, 1]]
MIXED_D2 = [
    [0, 2, -1, 3, 0, 0],
    [2, 0, 3, -1, 0, 0],
    [0, -1, 0, 0, -1, 3],
    [-1, 0, 0, 0, 3, -1],
    [0, 0, 0, -1, 0, -2],
    [0, 0, -1, 0, -2, 0],
]
MIXED_D3 = [[1, -3], [-3, 1], [0, 2], [2, 0], [0, -1], [-1, 0]]

M = IntMatrix.from_rows

matrices = st.integers(0, 5).flatmap(
    lambda r: st.integers(0, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=r, max_size=r
        ).map(lambda rows: IntMatrix.from_rows(rows, c))
    )
)


def check_smith(a: IntMatrix):
    d = snf(a)
    assert d.u @ a @ d.v == d.s
    assert abs(det(d.u)) == 1 and abs(det(d.v)) == 1
    assert d.u @ d.u_inv == IntMatrix.identity(a.rows)
    assert d.v @ d.v_inv == IntMatrix.identity(a.cols)
    r = d.rank
    for i in range(a.rows):
        for j in range(a.cols):
            if i != j or i >= r:
                assert d.s[i, j] == 0
    diag = [d.s[i, i] for i in range(r)]
    assert tuple(diag) == d.invariant_factors
    assert all(x >= 1 for x in diag)
    assert all(b % a_ == 0 for a_, b in zip(diag, diag[1:]))
    return d


class TestIntMatrix:
    def test_shape_checks(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))
        with pytest.raises(TypeError):
            IntMatrix(1, 1, (1.0,))
        with pytest.raises(TypeError):
            IntMatrix(1, 1, (True,))

    def test_empty(self):
        z = IntMatrix.zeros(0, 3)
        assert z.shape == (0, 3)
        assert (IntMatrix.zeros(2, 0) @ z) == IntMatrix.zeros(2, 3)

    def test_numpy_ints_accepted(self):
        a = IntMatrix.from_rows(np.array([[1, 2]], dtype=np.int64).tolist())
        b = IntMatrix(1, 2, tuple(np.array([1, 2], dtype=np.int64)))
        assert a == b

    def test_block_and_transpose(self):
        a = M([[1, 2], [3, 4]])
        b = IntMatrix.block([[a, -a], [a.T, IntMatrix.identity(2)]])
        assert b.tolist() == [[1, 2, -1, -2], [3, 4, -3, -4], [1, 3, 1, 0], [2, 4, 0, 1]]

    def test_big_integers(self):
        big = 10**40
        a = M([[big, 0], [0, big * 3]])
        assert snf(a).invariant_factors == (big, 3 * big)

    @given(matrices)
    @settings(max_examples=40, deadline=None)
    def test_det_matches_laplace(self, a):
        if a.rows == a.cols:
            assert det(a) == laplace_det(a.tolist())


class TestSnf:
    def test_already_diagonal(self):
        d = check_smith(M([[1, 0], [0, 4]]))
        assert d.invariant_factors == (1, 4)
        assert d.u == IntMatrix.identity(2) and d.v == IntMatrix.identity(2)

    def test_two_by_two(self):
        # gcd of entries 2, |det| = 8
        assert check_smith(M([[2, 4], [6, 8]])).invariant_factors == (2, 4)

    def test_cube_d2(self):
        d = check_smith(M(CUBE_D2))
        assert [d.s[i, i] for i in range(6)] == [1, 1, 4, 4, 0, 0]

    def test_cube_d1_d3(self):
        assert check_smith(M(CUBE_D1)).invariant_factors == (1, 4)
        assert check_smith(M(CUBE_D3)).invariant_factors == (1, 4)

    def test_mixed(self):
        assert check_smith(M(MIXED_D1)).invariant_factors == (1, 1)
        assert check_smith(M(MIXED_D2)).invariant_factors == (1, 1, 1, 1)
        assert check_smith(M(MIXED_D3)).invariant_factors == (1, 1)

    @pytest.mark.parametrize("shape", [(0, 0), (0, 3), (3, 0)])
    def test_empty_shapes(self, shape):
        d = check_smith(IntMatrix.zeros(*shape))
        assert d.invariant_factors == ()

    def test_deterministic(self):
        a = M(CUBE_D2)
        assert snf(a) == snf(a)

    @given(matrices)
    @settings(max_examples=150, deadline=None)
    def test_invariants_hold(self, a):
        d = check_smith(a)
        assert d.invariant_factors == invariant_factors_oracle(a.tolist())

    def test_against_sympy(self):
        from sympy import Matrix, ZZ
        from sympy.matrices.normalforms import smith_normal_form

        rng = np.random.default_rng(7)
        for _ in range(30):
            r, c = rng.integers(1, 6, size=2)
            a = rng.integers(-9, 10, size=(r, c)).tolist()
            ours = snf(M(a)).invariant_factors
            s = smith_normal_form(Matrix(a), domain=ZZ)
            theirs = tuple(abs(int(s[i, i])) for i in range(min(r, c)) if s[i, i] != 0)
            assert ours == theirs


class TestKernel:
    def test_zero_one_by_one(self):
        assert kernel_basis(M([[0]])) == M([[1]])

    def test_cube_d3_trivial(self):
        assert kernel_basis(M(CUBE_D3)).cols == 0

    def test_row_vector(self):
        k = kernel_basis(M([[-2, -4]]))
        assert k.cols == 1
        col = k.col(0)
        assert col in ((2, -1), (-2, 1))

    @given(matrices)
    @settings(max_examples=80, deadline=None)
    def test_basis_properties(self, a):
        k = kernel_basis(a)
        assert k.rows == a.cols
        assert (a @ k).is_zero()
        assert k.cols + snf(a).rank == a.cols
        # saturated: the columns extend to a basis of Z^cols
        assert all(x == 1 for x in snf(k).invariant_factors)
        assert snf(k).rank == k.cols


class TestCokernel:
    def test_z2(self):
        assert cokernel_invariants(M([[2]])) == AG(0, (2,))

    def test_cube_d1(self):
        assert cokernel_invariants(M(CUBE_D1)) == AG(0, (4,))

    def test_row_vector(self):
        assert cokernel_invariants(M([[-2, -4]])) == AG(0, (2,))

    def test_zero_map(self):
        assert cokernel_invariants(IntMatrix.zeros(3, 0)) == AG(3, ())

    @given(matrices, st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_permutation_and_unimodular_invariance(self, a, rnd):
        base = cokernel_invariants(a)
        rows = list(range(a.rows))
        cols = list(range(a.cols))
        rnd.shuffle(rows)
        rnd.shuffle(cols)
        assert cokernel_invariants(a.submatrix(rows, cols)) == base
        if a.rows >= 2:
            e = IntMatrix.identity(a.rows).tolist()
            e[0][1] = rnd.randint(-5, 5)
            assert cokernel_invariants(M(e) @ a) == base
        if a.cols >= 2:
            e = IntMatrix.identity(a.cols).tolist()
            e[1][0] = rnd.randint(-5, 5)
            assert cokernel_invariants(a @ M(e)) == base


class TestQuotient:
    def test_h0_of_doubling(self):
        assert quotient_presentation(M([[2]]), IntMatrix.zeros(0, 1)) == AG(0, (2,))

    def test_cube_h1(self):
        assert quotient_presentation(M(CUBE_D2), M(CUBE_D1)) == AG(0, (4, 4))

    def test_mixed_trivial(self):
        assert quotient_presentation(M(MIXED_D2), M(MIXED_D1)).is_trivial
        assert quotient_presentation(M(MIXED_D3), M(MIXED_D2)).is_trivial

    def test_not_contained(self):
        with pytest.raises(SubgroupNotContained):
            quotient_presentation(M([[1], [0]]), M([[1, 1]]))

    def test_zero_differentials(self):
        assert quotient_presentation(IntMatrix.zeros(4, 2), IntMatrix.zeros(3, 4)) == AG(4, ())


class TestPresentation:
    def test_canonical(self):
        assert AG.from_cyclic_orders(0, [2, 3]) == AG(0, (6,))
        assert AG.from_cyclic_orders(1, [4, 6, 1, 0]) == AG(2, (2, 12))

    def test_rejects_noncanonical(self):
        with pytest.raises(ValueError):
            AG(0, (4, 2))
        with pytest.raises(ValueError):
            AG(0, (1,))

    def test_direct_sum_and_str(self):
        g = AG(1, (2,)) + AG(0, (3,))
        assert g == AG(1, (6,))
        assert str(g) == "Z ⊕ Z/6"
        assert str(AG()) == "0"
        assert AG(0, (4, 4)).order == 16
        assert AG(2).order is None
