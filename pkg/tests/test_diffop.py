"""Q(x)<d>: products, Euclidean division, gcds, annihilators, polynomial kernels."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import diffops, nonzero_diffops, polynomials, rational_functions
from orecalc.diffop import (
    NEG_INF,
    DiffOp,
    annihilator,
    apply,
    dop_add,
    dop_mul,
    factor_by_solution,
    gcld,
    gcrd,
    kernel_poly_basis,
    lclm,
    left_divide,
    right_divide,
)
from orecalc.errors import DependentSolutions, DivisionByZeroOperator, NotASolution
from orecalc.field import X, RationalFunction, echelonize, rf

d = DiffOp.d(1)
one = DiffOp([1])


def op(*coeffs):
    return DiffOp([rf(c) for c in coeffs])


# examples


def test_dop_mul_examples():
    assert dop_mul(d, op(X)) == op(1, X)
    P = op(X, 1, X * X)
    assert dop_mul(P, one) == P
    assert dop_mul(d + 1 / X, d - 1 / X) == d * d


def test_dop_add_examples():
    assert dop_add(d, -d).is_zero()
    assert dop_add(d * d, d) == op(0, 1, 1)
    assert dop_add(op(0, X), op(0, 1 - X)) == d


def test_apply_examples():
    assert apply(d * d, X) == 0
    assert apply(d, X * X) == 2 * X
    assert apply(op(1, X), 1 / X) == 0


def test_right_divide_examples():
    assert right_divide(op(1, X, 1), d) == (op(X, 1), one)
    Q = op(X, 1 / X, 2)
    assert right_divide(Q, Q) == (one, DiffOp())
    assert right_divide(one, d) == (DiffOp(), one)


def test_left_divide_examples():
    assert left_divide(op(0, X), d) == (op(X), op(-1))
    assert left_divide(d * d, d) == (d, DiffOp())
    assert left_divide(d + 1, d * d) == (DiffOp(), d + 1)


def test_division_by_zero_operator():
    with pytest.raises(DivisionByZeroOperator):
        right_divide(d, DiffOp())
    with pytest.raises(DivisionByZeroOperator):
        left_divide(d, DiffOp())


def test_gcd_examples():
    assert gcld(d * d, d * (d + 1)) == d
    P = op(X, 2, X)
    assert gcrd(P, DiffOp()) == P.monic()
    assert gcrd((d + 1 / X) * (d - 1 / X), d - 1 / X) == d - 1 / X


def test_lclm_examples():
    assert lclm(d, d) == (d, one, one)
    L, U, V = lclm(d, d + 1)
    assert L.degree == 2
    assert U * d == L == V * (d + 1)


def test_annihilator_examples():
    assert annihilator([rf(1), X], monic=True) == d * d
    assert annihilator([X], monic=True) == d - 1 / X
    with pytest.raises(DependentSolutions):
        annihilator([X, 2 * X], monic=True)


def test_kernel_examples():
    assert kernel_poly_basis(d * d, 5) == [RationalFunction(1).num, X.num]
    assert kernel_poly_basis(d + 1, 5) == []


def test_factor_by_solution_examples():
    assert factor_by_solution(d * d, X) == (d + 1 / X, d - 1 / X)
    assert factor_by_solution(d * d, 1) == (d, d)
    with pytest.raises(NotASolution):
        factor_by_solution(d + 1, X)


def test_zero_degree_sentinel():
    assert DiffOp().degree == NEG_INF
    assert (DiffOp() * d).degree == NEG_INF


def test_rendering():
    assert str(op(1, X)) == "x*d + 1"
    P = op((X * X - 1) / (X + 2), -3 * X, X + 1)
    assert str(P) == "(x + 1)*d^2 - 3*x*d + (x^2 - 1)/(x + 2)"


# properties

settings_ops = settings(max_examples=60, deadline=None)


@settings_ops
@given(nonzero_diffops(), nonzero_diffops())
def test_degree_is_additive(P, Q):
    assert (P * Q).degree == P.degree + Q.degree


@settings_ops
@given(diffops(2), diffops(2), diffops(2))
def test_ring_axioms(P, Q, R):
    assert (P * Q) * R == P * (Q * R)
    assert P * (Q + R) == P * Q + P * R
    assert (P + Q) * R == P * R + Q * R


@settings_ops
@given(diffops(2), diffops(2), rational_functions())
def test_product_acts_as_composition(P, Q, f):
    assert apply(P * Q, f) == apply(P, apply(Q, f))


@settings_ops
@given(diffops(4), nonzero_diffops(3))
def test_division_round_trips(P, Q):
    q, r = right_divide(P, Q)
    assert q * Q + r == P and r.degree < Q.degree
    q, r = left_divide(P, Q)
    assert Q * q + r == P and r.degree < Q.degree


@settings(max_examples=30, deadline=None)
@given(nonzero_diffops(2, polynomial=True), nonzero_diffops(2, polynomial=True), nonzero_diffops(2, polynomial=True))
def test_common_factors_divide_gcds(P, Q, W):
    G = gcrd(P * W, Q * W)
    assert right_divide(G, W)[1].is_zero()
    H = gcld(W * P, W * Q)
    assert left_divide(H, W)[1].is_zero()
    assert G.is_monic() and H.is_monic()


@settings(max_examples=30, deadline=None)
@given(nonzero_diffops(2, polynomial=True), nonzero_diffops(2, polynomial=True))
def test_lclm_multiplies_back(P, Q):
    L, U, V = lclm(P, Q)
    assert U * P == L == V * Q
    assert L.degree <= P.degree + Q.degree


@settings(max_examples=40, deadline=None)
@given(st.lists(polynomials(3, nonzero=True), min_size=1, max_size=3))
def test_annihilator_kills_its_inputs(ps):
    fs = [RationalFunction(p) for p in ps]
    basis, _ = echelonize(fs)
    if len(basis) < len(fs):
        with pytest.raises(DependentSolutions):
            annihilator(fs, monic=True)
        return
    P = annihilator(fs, monic=True)
    assert P.is_monic() and P.degree == len(fs)
    assert all(apply(P, f) == 0 for f in fs)


@settings(max_examples=40, deadline=None)
@given(nonzero_diffops(2, polynomial=True), st.integers(0, 4))
def test_kernel_solutions(P, bound):
    sols = kernel_poly_basis(P, bound)
    assert len(sols) <= max(P.degree, 0)
    for s in sols:
        assert s.degree <= bound
        assert apply(P, RationalFunction(s)) == 0
