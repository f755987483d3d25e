"""Tests for the exact determinant and solver oracles."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lgvcramer import (
    LinearSystem,
    Matrix,
    det_bareiss,
    det_leibniz,
    permutation_sign,
    replace_column,
    solve_gauss,
)
from lgvcramer.errors import (
    IndexOutOfRange,
    SingularMatrix,
    SizeMismatch,
    SizeTooLarge,
)

from randgen import random_matrix, random_nonsingular, random_vector

entry = st.integers(min_value=-9, max_value=9)


def square(n):
    return st.lists(
        st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(Matrix.from_rows)


any_square = st.integers(min_value=1, max_value=5).flatmap(square)


def identity(n):
    return Matrix.from_rows(
        [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    )


class TestDetLeibniz:
    def test_2x2(self):
        assert det_leibniz(Matrix.from_rows([[1, 2], [3, 4]])) == -2

    def test_identity(self):
        assert det_leibniz(identity(3)) == 1

    def test_3x3_cofactor_value(self):
        assert det_leibniz(Matrix.from_rows([[2, 0, 1], [1, 1, 0], [0, 3, 1]])) == 5

    def test_size_guard(self):
        with pytest.raises(SizeTooLarge):
            det_leibniz(identity(9))
        assert det_leibniz(identity(8)) == 1


class TestDetBareiss:
    def test_matches_known_values(self):
        assert det_bareiss(Matrix.from_rows([[1, 2], [3, 4]])) == -2
        assert det_bareiss(Matrix.from_rows([[2, 0, 1], [1, 1, 0], [0, 3, 1]])) == 5

    def test_singular(self):
        assert det_bareiss(Matrix.from_rows([[1, 2], [2, 4]])) == 0

    def test_1x1(self):
        assert det_bareiss(Matrix.from_rows([[F(-7, 3)]])) == F(-7, 3)

    def test_zero_leading_pivot(self):
        assert det_bareiss(Matrix.from_rows([[0, 1], [1, 0]])) == -1

    @given(any_square)
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_leibniz(self, m):
        assert det_bareiss(m) == det_leibniz(m)

    def test_agrees_on_rational_entries(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(1, 5)
            m = Matrix.from_rows(
                [
                    [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
                    for _ in range(n)
                ]
            )
            assert det_bareiss(m) == det_leibniz(m)


class TestSolveGauss:
    def test_identity(self):
        sys_ = LinearSystem.of([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 2, 3])
        assert solve_gauss(sys_) == (1, 2, 3)

    def test_2x2(self):
        x = solve_gauss(LinearSystem.of([[1, 2], [3, 4]], [5, 6]))
        assert x == (F(-4), F(9, 2))
        assert 1 * x[0] + 2 * x[1] == 5

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            solve_gauss(LinearSystem.of([[1, 2], [2, 4]], [1, 1]))

    def test_exact_residual_random(self):
        rng = random.Random(12)
        for _ in range(100):
            n = rng.randint(1, 5)
            m = random_nonsingular(rng, n)
            b = random_vector(rng, n)
            x = solve_gauss(LinearSystem(m, b))
            assert m.mul_vector(x) == b

    def test_solvable_iff_nonsingular(self):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randint(1, 4)
            m = random_matrix(rng, n)
            sys_ = LinearSystem(m, random_vector(rng, n))
            if det_bareiss(m) == 0:
                with pytest.raises(SingularMatrix):
                    solve_gauss(sys_)
            else:
                solve_gauss(sys_)


class TestReplaceColumn:
    def test_basic(self):
        m = replace_column(Matrix.from_rows([[1, 2], [3, 4]]), 1, (F(5), F(6)))
        assert m == Matrix.from_rows([[5, 2], [6, 4]])

    def test_identity_replacement(self):
        a = Matrix.from_rows([[1, 2], [3, 4]])
        assert replace_column(a, 2, a.column(1)) == a

    def test_known_determinant(self):
        a = Matrix.from_rows([[2, 0, 1], [1, 1, 0], [0, 3, 1]])
        assert det_bareiss(replace_column(a, 2, (F(3), F(2), F(4)))) == 5

    def test_errors(self):
        a = Matrix.from_rows([[1, 2], [3, 4]])
        with pytest.raises(IndexOutOfRange):
            replace_column(a, 0, (F(1), F(1)))
        with pytest.raises(IndexOutOfRange):
            replace_column(a, 3, (F(1), F(1)))
        with pytest.raises(SizeMismatch):
            replace_column(a, 1, (F(1),))

    @given(
        st.integers(min_value=1, max_value=4).flatmap(
            lambda n: st.tuples(
                square(n),
                st.integers(min_value=1, max_value=n),
                st.lists(entry, min_size=n, max_size=n),
                st.lists(entry, min_size=n, max_size=n),
            )
        )
    )
    @settings(max_examples=120, deadline=None)
    def test_multilinearity(self, case):
        a, i, u, v = case
        uv = tuple(F(x + y) for x, y in zip(u, v))
        lhs = det_bareiss(replace_column(a, i, uv))
        rhs = det_bareiss(replace_column(a, i, tuple(map(F, u)))) + det_bareiss(
            replace_column(a, i, tuple(map(F, v)))
        )
        assert lhs == rhs


class TestMatrixValidation:
    def test_not_square(self):
        with pytest.raises(SizeMismatch):
            Matrix.from_rows([[1, 2], [3]])

    def test_empty(self):
        with pytest.raises(SizeMismatch):
            Matrix.from_rows([])

    def test_rhs_length(self):
        with pytest.raises(SizeMismatch):
            LinearSystem.of([[1]], [1, 2])


class TestPermutationSign:
    def test_identity_is_plus(self):
        assert permutation_sign((0, 1, 2, 3)) == 1

    def test_transposition_is_minus(self):
        assert permutation_sign((1, 0, 2)) == -1

    @given(st.permutations(range(5)), st.permutations(range(5)))
    def test_homomorphism(self, p, q):
        composed = [p[q[i]] for i in range(5)]
        assert permutation_sign(composed) == permutation_sign(p) * permutation_sign(q)
