import pytest
from hypothesis import given, strategies as st

from orthospace.errors import DimensionMismatch
from orthospace.lattice import (LatticeSpace, abs_parts, is_disjoint, is_positive, lattice_inf,
                                lattice_sup, leq, non_archimedean_witness)

from conftest import small_rationals

CW2 = LatticeSpace.coordinatewise(2)
LEX2 = LatticeSpace.lexicographic(2)


def e(space, *xs):
    return space.element(xs)


class TestOrder:
    def test_coordinatewise(self):
        assert leq(CW2, e(CW2, 1, -2), e(CW2, 1, 3))

    def test_lex_first_coordinate_dominates(self):
        assert leq(LEX2, e(LEX2, 0, 5), e(LEX2, 1, -9))

    def test_incomparable(self):
        assert not leq(CW2, e(CW2, 1, 0), e(CW2, 0, 1))
        assert not leq(CW2, e(CW2, 0, 1), e(CW2, 1, 0))

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            leq(CW2, e(CW2, 1, 0), LatticeSpace.coordinatewise(3).zero())


class TestSupInf:
    def test_coordinatewise(self):
        assert lattice_sup(CW2, e(CW2, 1, -2), e(CW2, 0, 3)) == e(CW2, 1, 3)

    def test_lex(self):
        assert lattice_sup(LEX2, e(LEX2, 0, 9), e(LEX2, 1, -5)) == e(LEX2, 1, -5)

    @pytest.mark.parametrize("space", [CW2, LEX2])
    def test_idempotent(self, space):
        f = e(space, 3, -1)
        assert lattice_sup(space, f, f) == f == lattice_inf(space, f, f)


class TestAbsParts:
    def test_coordinatewise(self):
        assert abs_parts(CW2, e(CW2, 2, -3)) == (e(CW2, 2, 0), e(CW2, 0, 3), e(CW2, 2, 3))

    def test_lex(self):
        pos, neg, a = abs_parts(LEX2, e(LEX2, -1, 7))
        assert (pos, neg, a) == (e(LEX2, 0, 0), e(LEX2, 1, -7), e(LEX2, 1, -7))
        assert pos - neg == e(LEX2, -1, 7)

    @pytest.mark.parametrize("space", [CW2, LEX2])
    def test_zero(self, space):
        assert all(x.is_zero() for x in abs_parts(space, space.zero()))


class TestDisjoint:
    def test_disjoint_supports(self):
        assert is_disjoint(CW2, e(CW2, 1, 0), e(CW2, 0, 2))

    def test_overlap(self):
        assert not is_disjoint(CW2, e(CW2, 1, 1), e(CW2, 0, 2))

    def test_lex_never_disjoint_for_nonzero_positives(self):
        assert lattice_inf(LEX2, e(LEX2, 1, 0), e(LEX2, 0, 1)) == e(LEX2, 0, 1)
        assert not is_disjoint(LEX2, e(LEX2, 1, 0), e(LEX2, 0, 1))


def test_archimedean_flag():
    assert CW2.is_archimedean
    assert LatticeSpace.lexicographic(1).is_archimedean
    assert not LEX2.is_archimedean


def test_non_archimedean_witness():
    f, g = non_archimedean_witness(LEX2, bound=50)
    assert not f.is_zero()
    assert all(leq(LEX2, f * k, g) and is_positive(LEX2, f * k) for k in range(1, 51))
    assert non_archimedean_witness(CW2) is None


def test_json():
    assert LEX2.to_json() == {"dim": 2, "order": "lexicographic"}
    assert e(CW2, "1/2", -3).to_json() == ["1/2", "-3"]


spaces = st.builds(lambda n, k: LatticeSpace(n, k), st.integers(1, 5),
                   st.sampled_from(["coordinatewise", "lexicographic"]))


@st.composite
def pairs(draw):
    space = draw(spaces)
    f, g = (space.element([draw(small_rationals) for _ in range(space.dim)]) for _ in range(2))
    return space, f, g


@given(pairs())
def test_sup_plus_inf(sfg):
    space, f, g = sfg
    assert lattice_sup(space, f, g) + lattice_inf(space, f, g) == f + g


@given(pairs())
def test_sup_is_least_upper_bound(sfg):
    space, f, g = sfg
    s = lattice_sup(space, f, g)
    assert leq(space, f, s) and leq(space, g, s)
    i = lattice_inf(space, f, g)
    assert leq(space, i, f) and leq(space, i, g)


@given(pairs())
def test_abs_parts_identities(sfg):
    space, f, _ = sfg
    pos, neg, a = abs_parts(space, f)
    assert pos - neg == f
    assert pos + neg == a
    assert lattice_inf(space, pos, neg).is_zero()


@given(pairs())
def test_lex_total(sfg):
    space, f, g = sfg
    if not space.is_coordinatewise:
        assert leq(space, f, g) or leq(space, g, f)


@given(pairs())
def test_disjoint_implies_positive(sfg):
    space, f, g = sfg
    for a, b in ((f, g), (abs_parts(space, f)[0], abs_parts(space, g)[1])):
        if is_disjoint(space, a, b):
            assert is_positive(space, a) and is_positive(space, b)
