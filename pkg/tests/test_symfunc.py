from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from mkls.partitions import dim_syt, partitions_of
from mkls.symfunc import (
    ZERO,
    DegreeError,
    SchurVector,
    branch_restrict,
    dual_pieri,
    is_schur_nonneg,
    lr_coefficient,
    lr_product,
    s,
    schur_geq,
    sv_dimension,
)

from oracles import lr_oracle


def small_partition(max_n):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


def test_constructor_rejects_mixed_degrees():
    with pytest.raises(DegreeError):
        SchurVector({(2,): 1, (1,): 1})
    with pytest.raises(DegreeError):
        s(2) + s(1)


def test_zero_behaviour():
    assert ZERO == 0
    assert not ZERO
    assert s(2) - s(2) == ZERO
    assert s(2) + ZERO == s(2)
    assert SchurVector.schur(None) == ZERO


def test_pretty_and_json_roundtrip():
    f = s(3) + s(2, 1).scale(2)
    assert f.pretty() == "s_(3) + 2s_(2,1)"
    data = f.to_json()
    assert data == [{"partition": [2, 1], "coeff": 2}, {"partition": [3], "coeff": 1}]
    assert SchurVector.from_json(data) == f


def test_small_products():
    assert s(1) * s(1) == s(2) + s(1, 1)
    assert s(1) * s(1, 1) == s(2, 1) + s(1, 1, 1)
    assert s(1, 1) * s(2, 1) == s(3, 2) + s(3, 1, 1) + s(2, 2, 1) + s(2, 1, 1, 1)


@pytest.mark.parametrize(
    "lam, mu",
    [((2, 1), (2, 1)), ((3, 1), (2,)), ((2, 2), (1, 1)), ((3,), (1, 1, 1)), ((2, 1, 1), (2, 1)), ((1,), ())],
)
def test_lr_product_matches_polynomial_oracle(lam, mu):
    expected = lr_oracle(lam, mu)
    got = lr_product(s(*lam), s(*mu))
    assert dict(got.items()) == expected


@settings(max_examples=40, deadline=None)
@given(small_partition(4), small_partition(3))
def test_lr_product_matches_oracle_random(lam, mu):
    assert dict(lr_product(s(*lam), s(*mu)).items()) == lr_oracle(lam, mu)


def test_lr_coefficient_known_value():
    # c^{(3,2,1)}_{(2,1),(2,1)} = 2, the smallest LR coefficient above 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_dual_pieri_example():
    assert dual_pieri(1, (2, 1)) == s(3, 1) + s(2, 2) + s(2, 1, 1)


@settings(max_examples=60, deadline=None)
@given(small_partition(8), st.integers(0, 4))
def test_dual_pieri_agrees_with_lr(lam, r):
    assert dual_pieri(r, lam) == lr_product(s(*([1] * r)), s(*lam))


@settings(max_examples=40, deadline=None)
@given(small_partition(5), small_partition(4), small_partition(4))
def test_commutative_and_associative(a, b, c):
    fa, fb, fc = s(*a), s(*b), s(*c)
    assert fa * fb == fb * fa
    assert (fa * fb) * fc == fa * (fb * fc)


@settings(max_examples=40, deadline=None)
@given(small_partition(6), small_partition(5))
def test_dimension_law(a, b):
    fa, fb = s(*a), s(*b)
    prod = fa * fb
    assert prod.degree == sum(a) + sum(b) or not prod
    assert sv_dimension(prod) == comb(sum(a) + sum(b), sum(a)) * dim_syt(a) * dim_syt(b)


def test_branch_restrict_examples():
    assert branch_restrict(s(3, 2, 1)) == s(2, 2, 1) + s(3, 1, 1) + s(3, 2)
    assert branch_restrict(s(4, 1, 1)) == s(3, 1, 1) + s(4, 1)
    assert branch_restrict(s(3, 2)) == s(2, 2) + s(3, 1)
    with pytest.raises(DegreeError):
        branch_restrict(s())


@settings(max_examples=50, deadline=None)
@given(small_partition(10))
def test_branch_restrict_preserves_dimension(lam):
    if lam:
        assert sv_dimension(branch_restrict(s(*lam))) == dim_syt(lam)


def test_schur_nonneg_examples():
    assert not is_schur_nonneg(s(2, 1) - s(3))
    assert is_schur_nonneg(ZERO)
    assert is_schur_nonneg(s(1) * s(1, 1) - s(2, 1))
    assert (s(1) * s(1, 1) - s(2, 1)) == s(1, 1, 1)


def test_schur_geq_examples():
    left = s(1) * s(2, 1)
    assert schur_geq(left, left)
    assert schur_geq(s(1) * s(2), s() * s(2, 1))
    assert not schur_geq(s(2), s(1, 1)) and not schur_geq(s(1, 1), s(2))
    with pytest.raises(DegreeError):
        schur_geq(s(2), s(1))


def test_sv_dimension_examples():
    assert sv_dimension(s(5)) == 1
    assert sv_dimension(s(2, 1) + s(3)) == 3
    assert sv_dimension(s(3, 2)) == 5
