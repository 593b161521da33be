import warnings

import pytest
from hypothesis import given, strategies as st

from mkls.poly import IntPolynomial, is_strongly_logconcave, is_unimodal
from mkls.repring import (
    SYM,
    UNIPOTENT,
    FlavorError,
    GradedRep,
    QContext,
    as_unipotent,
    dimension_poly,
    gauss_binom,
    induct_product,
    is_equivariantly_unimodal,
    is_honest,
    is_palindromic,
    q_factorial,
    qdimension_poly,
    restrict_one,
    strongly_induced_logconcave,
    unimodal_pivots,
    unipotent_dim,
)
from mkls.symfunc import DegreeError, s

from oracles import subspaces_count

int_lists = st.lists(st.integers(-5, 5), max_size=6)


# -- IntPolynomial -------------------------------------------------------------

def test_poly_basics():
    p = IntPolynomial([1, 2, 0])
    assert p.degree == 1 and p == [1, 2]
    assert IntPolynomial().degree == -1
    assert str(IntPolynomial([2, -3, 1])) == "2 - 3t + t^2"
    assert str(IntPolynomial([0, -1])) == "-t"
    assert IntPolynomial([1, 1]) ** 3 == [1, 3, 3, 1]
    assert IntPolynomial([1, 2]).shift(2) == [0, 0, 1, 2]
    assert IntPolynomial([1, 2]).reverse(2) == [0, 2, 1]
    assert IntPolynomial([2, 3, 2]).is_palindromic(2)
    assert not IntPolynomial([2, 3]).is_palindromic(1)
    assert IntPolynomial([1, 1])(2) == 3
    with pytest.raises(ValueError):
        IntPolynomial([1, 2, 3]).reverse(1)


@given(int_lists, int_lists, int_lists)
def test_poly_ring_laws(a, b, c):
    pa, pb, pc = IntPolynomial(a), IntPolynomial(b), IntPolynomial(c)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa * pb == pb * pa
    assert pa - pa == IntPolynomial()
    assert (pa * pb)(3) == pa(3) * pb(3)


def test_unimodal_and_logconcave():
    assert is_unimodal([1, 3, 3, 2, 1]) and is_unimodal([]) and is_unimodal([5])
    assert not is_unimodal([2, 1, 2])
    assert is_strongly_logconcave([1, 3, 3, 1])
    assert not is_strongly_logconcave([1, 1, 5, 1])


# -- GradedRep -------------------------------------------------------------------

def test_graded_rep_checks_degree_and_flavor():
    with pytest.raises(DegreeError):
        GradedRep([s(2), s(1)], 2)
    with pytest.raises(ValueError):
        GradedRep([s(2)], 2, "other")
    a, b = GradedRep([s(2)], 2), as_unipotent(GradedRep([s(2)], 2))
    with pytest.raises(FlavorError):
        a + b
    with pytest.raises(FlavorError):
        dimension_poly(b)
    with pytest.raises(FlavorError):
        qdimension_poly(a, 2)


def test_graded_rep_json_roundtrip():
    f = GradedRep([s(2, 1), s(3) + s(2, 1), s(2, 1)], 3)
    data = f.to_json()
    assert data["group_degree"] == 3 and data["flavor"] == SYM
    assert GradedRep.from_json(data) == f
    assert f.pretty() == "s_(2,1) + (s_(3) + s_(2,1))t + s_(2,1)t^2"


def test_graded_rep_arithmetic():
    f = GradedRep([s(2), s(1, 1)], 2)
    assert (f - f) == GradedRep([], 2)
    assert f.scale_poly(IntPolynomial([1, 1])) == GradedRep([s(2), s(2) + s(1, 1), s(1, 1)], 2)
    assert f.shift(1)[1] == s(2)
    assert f.reverse(1) == GradedRep([s(1, 1), s(2)], 2)


def test_induct_product_and_restrict():
    one = GradedRep([s(1)], 1)
    assert induct_product(one, one) == GradedRep([s(2) + s(1, 1)], 2)
    f = GradedRep([s(2, 1)], 3)
    assert restrict_one(f) == GradedRep([s(2) + s(1, 1)], 2)


def test_honest_and_palindromic():
    assert is_honest(GradedRep([s(2), s(2)], 2))
    assert not is_honest(GradedRep([s(2) - s(1, 1)], 2))
    assert is_palindromic(GradedRep([s(2), s(1, 1), s(2)], 2), 2)
    assert not is_palindromic(GradedRep([s(2), s(1, 1)], 2), 1)


def test_unimodal_negative_control():
    # the equivariant KL polynomial s_(5) + s_(3,2) t of U_{4,5} is not equivariantly unimodal
    f = GradedRep([s(5), s(3, 2)], 5)
    assert unimodal_pivots(f) == []
    assert not is_equivariantly_unimodal(f)


def test_unimodal_positive():
    f = GradedRep([s(2, 1), s(3) + s(2, 1), s(2, 1)], 3)
    assert unimodal_pivots(f) == [1]
    assert strongly_induced_logconcave(f)


def test_logconcavity_failure_detected():
    f = GradedRep([s(1), s(1), s(1).scale(3), s(1)], 1)
    assert not strongly_induced_logconcave(f)


# -- q-analogues -----------------------------------------------------------------

def test_gauss_binom_values():
    assert gauss_binom(4, 2, 2) == 35
    assert gauss_binom(3, 1, QContext(2)) == 7
    assert gauss_binom(5, 2, 1) == 10
    with pytest.raises(ValueError):
        gauss_binom(2, 3, 2)
    with pytest.raises(ValueError):
        QContext(1)


@pytest.mark.parametrize("dim, k", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_gauss_binom_counts_subspaces(dim, k):
    assert gauss_binom(dim, k, 2) == subspaces_count(dim, k, 2)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(1, 4))
def test_gauss_binom_symmetry(n, k, q):
    if k <= n:
        assert gauss_binom(n, k, q) == gauss_binom(n, n - k, q)


def test_q_factorial():
    assert q_factorial(3, 2) == 1 * 3 * 7
    assert q_factorial(0, 2) == 1


@pytest.mark.parametrize("q", [2, 3, 4])
def test_unipotent_dim_hooks_match_closed_forms(q):
    for m in range(1, 8):
        assert unipotent_dim((1,) * m, q) == q ** (m * (m - 1) // 2)
        for b in range(m):
            lam = (m - b,) + (1,) * b
            assert unipotent_dim(lam, q) == q ** (b * (b + 1) // 2) * gauss_binom(m - 1, b, q)


def test_unipotent_dim_at_q1_is_syt_count():
    assert unipotent_dim((3, 2), 1) == 5
    assert unipotent_dim((2, 2), 1) == 2


def test_unipotent_dim_warns_off_hooks():
    with pytest.warns(UserWarning):
        unipotent_dim((2, 2), 2, warn=True)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        unipotent_dim((3, 1), 2, warn=True)


def test_qdimension_poly_orbit_indices():
    f = GradedRep([s(1), s(1)], 1, UNIPOTENT)
    assert qdimension_poly(f, 2) == [1, 1]
    assert qdimension_poly(f, 2, orbit_indices=[3]) == [3, 1]
