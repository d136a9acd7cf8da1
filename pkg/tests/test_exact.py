from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from orthospace.exact import (Affine, NoSolution, RatMatrix, Unique, format_rational, in_span,
                              is_feasible, kernel_basis, rank, rat, rref, solve_linear, span_equal)

from conftest import matrices, small_rationals


def M(rows, cols=None):
    return RatMatrix.from_rows(rows, cols=cols)


class TestRational:
    def test_canonical(self):
        q = rat("-6/4")
        assert (q.numerator, q.denominator) == (-3, 2)

    def test_exact_sum(self):
        assert rat("1/3") + rat("1/6") == Fraction(1, 2)

    @pytest.mark.parametrize("bad", [0.5, True])
    def test_refuses_inexact(self, bad):
        with pytest.raises(TypeError):
            rat(bad)

    @pytest.mark.parametrize("bad", ["1.5", "1e3", "", "x"])
    def test_refuses_bad_strings(self, bad):
        with pytest.raises(ValueError):
            rat(bad)

    @pytest.mark.parametrize("q,s", [(Fraction(3), "3"), (Fraction(-1, 2), "-1/2"), (Fraction(0), "0")])
    def test_format(self, q, s):
        assert format_rational(q) == s
        assert rat(s) == q


class TestKernel:
    def test_one_equation(self):
        assert kernel_basis(M([[1, 1]])) == [(1, -1)]

    def test_full_rank(self):
        assert kernel_basis(RatMatrix.identity(3)) == []

    def test_skipped_column(self):
        assert kernel_basis(M([[1, 0, 0], [0, 0, 2]])) == [(0, 1, 0)]

    def test_zero_matrix_gives_standard_basis(self):
        assert kernel_basis(RatMatrix.zeros(2, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


class TestRank:
    def test_identity(self):
        assert rank(RatMatrix.identity(4)) == 4

    def test_zero(self):
        assert rank(RatMatrix.zeros(2, 3)) == 0

    def test_dependent_rows(self):
        assert rank(M([[1, 2], [2, 4]])) == 1


class TestSolve:
    def test_unique(self):
        assert solve_linear(M([[2]]), [3]) == Unique((Fraction(3, 2),))

    def test_affine(self):
        res = solve_linear(M([[1, 1]]), [0])
        assert res == Affine((0, 0), [(1, -1)])

    def test_inconsistent(self):
        assert solve_linear(M([[1], [1]]), [0, 1]) == NoSolution()

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            solve_linear(M([[1, 1]]), [1, 2])


@given(matrices())
def test_kernel_and_rank_agree_with_sympy(rows):
    m = M(rows)
    sm = sympy.Matrix(rows)
    assert rank(m) == sm.rank()
    ker = kernel_basis(m)
    for k in ker:
        assert not any(m.apply(k))
    assert rank(m) + len(ker) == m.cols
    assert span_equal(ker, [tuple(Fraction(int(x.p), int(x.q)) for x in v) for v in sm.nullspace()], m.cols)


@given(matrices())
def test_rref_matches_sympy(rows):
    red, piv = rref(M(rows))
    s_red, s_piv = sympy.Matrix(rows).rref()
    assert piv == s_piv
    assert [list(r) for r in red.to_rows()] == [[Fraction(int(x.p), int(x.q)) for x in s_red.row(i)] for i in range(s_red.rows)]


@given(matrices(), st.data())
def test_solve_is_sound(rows, data):
    m = M(rows)
    b = [data.draw(small_rationals) for _ in range(m.rows)]
    res = solve_linear(m, b)
    if isinstance(res, Unique):
        assert list(m.apply(res.x)) == b
    elif isinstance(res, Affine):
        assert list(m.apply(res.x0)) == b
        for k in res.basis:
            x = tuple(a + 3 * c for a, c in zip(res.x0, k))
            assert list(m.apply(x)) == b
    else:
        aug = m.hstack(RatMatrix(m.rows, 1, tuple(b)))
        assert rank(aug) > rank(m)


@given(matrices(), st.randoms(use_true_random=False))
def test_row_order_does_not_change_kernel_span(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    a, b = kernel_basis(M(rows)), kernel_basis(M(shuffled))
    assert span_equal(a, b, len(rows[0]))


def test_in_span():
    assert in_span([(1, 0, 1)], (2, 0, 2))
    assert not in_span([(1, 0, 1)], (1, 0, 0))
    assert in_span([], (0, 0))


class TestFeasibility:
    def test_box(self):
        # 0 <= x <= 1, x >= 1/2
        assert is_feasible([[1], [-1], [-1]], [1, 0, Fraction(-1, 2)])

    def test_empty(self):
        # x + y <= 1, x >= 1, y >= 1
        assert not is_feasible([[1, 1], [-1, 0], [0, -1]], [1, -1, -1])

    def test_single_point(self):
        # x = y = 1 written as four inequalities
        assert is_feasible([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, -1, 1, -1])

    def test_no_constraints(self):
        assert is_feasible([], [])

    def test_constant_row(self):
        assert not is_feasible([[0, 0]], [-1])


@given(st.integers(1, 3), st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                                             st.integers(-4, 4)), min_size=1, max_size=6))
def test_feasibility_matches_linprog(nvars, raw):
    from scipy.optimize import linprog
    a = [r[:nvars] for r, _ in raw]
    b = [c for _, c in raw]
    lp = linprog([0] * nvars, A_ub=a, b_ub=b, bounds=[(None, None)] * nvars, method="highs")
    assert is_feasible(a, b) == (lp.status == 0)
