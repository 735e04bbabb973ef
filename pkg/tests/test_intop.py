"""Integration operators a + sum a_i d^-1 b_i and the mixed ring with d and d^-1."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import rand_intop, rand_poly, seeded
from orecalc.diffop import DiffOp, annihilator, kernel_poly_basis
from orecalc.errors import AntiderivativeObstruction
from orecalc.field import X, RationalFunction, echelonize, rf
from orecalc.formal import agree, expand_fraction, expand_intop
from orecalc.fraction import PdoFraction, frac_make, length
from orecalc.intop import (
    IntegrationOp,
    MixedOp,
    first_order_inverse,
    intop_add,
    intop_mul,
    intop_normalize,
    intop_order,
    intop_pol,
    intop_to_fraction,
)

d = DiffOp.d(1)
d_inv = IntegrationOp.d_inv()
one = rf(1)


def T(*pairs, scalar=0):
    return IntegrationOp(scalar, [(rf(a), rf(b)) for a, b in pairs])


def test_normalize_examples():
    assert intop_normalize(0, [(one, X), (rf(2), X)]) == T((3, X))
    assert intop_normalize(0, [(X, one), (X, X)]) == T((X, X + 1))
    assert intop_normalize(0, [(X, X), (-X, X)]).is_zero()


def test_mul_examples():
    lhs = intop_mul(T((1, X)), d_inv)
    assert lhs == T((X * X / 2, 1), (-1, X * X / 2))
    assert intop_mul(d_inv, d_inv) == T((X, 1), (-1, X))
    with pytest.raises(AntiderivativeObstruction):
        intop_mul(T((1, 1 / X)), d_inv)


def test_add_examples():
    I = T((X, X + 1), scalar=X)
    assert intop_add(I, IntegrationOp.zero()) == I
    assert intop_add(T((1, X)), T((-1, X))).is_zero()
    assert intop_add(T((X, 1)), T((1, X))).rank == 2


def test_pol_examples():
    assert intop_pol(T((X, 1))) == [X]
    assert intop_pol(IntegrationOp(X)) == []
    basis, _ = echelonize(intop_pol(T((X, 1), (1, X))))
    assert basis == [X, one]


def test_to_fraction_examples():
    f = intop_to_fraction(d_inv)
    assert (f.den, f.num) == (d, DiffOp([1]))
    assert intop_to_fraction(T((X, 1), (-1, X))) == frac_make(d * d, DiffOp([1]))


def test_first_order_inverse_examples():
    assert first_order_inverse(X) == T((1, -1 / (X * X)), scalar=-1 / X)
    assert first_order_inverse(one) == IntegrationOp(-1)


@pytest.mark.parametrize("a", [X, X * X, X + 1])
def test_first_order_inverse_contract(a):
    lhs = frac_make(d, DiffOp([a.derivative()])) - PdoFraction.coerce(a)
    assert lhs * intop_to_fraction(first_order_inverse(a)) == PdoFraction.coerce(1)


def test_order():
    assert intop_order(IntegrationOp(X)) == 0
    assert intop_order(d_inv) == -1
    assert intop_order(T((X, 1), (-1, X))) == -2
    assert intop_order(IntegrationOp.zero()) is None


def test_rendering():
    assert str(T((X, X + 1))) == "x*d^-1*(x + 1)"
    assert str(first_order_inverse(X)) == "-1/x - d^-1*1/x^2"


def test_commutators_in_the_mixed_ring():
    Dx, Di = MixedOp(d), MixedOp.from_intop(d_inv)
    x = MixedOp(DiffOp([X]))
    assert x * Dx * Di - Di * x * Dx == Di
    assert Dx * x - x * Dx == MixedOp(DiffOp([1]))
    assert Dx * Di == MixedOp(DiffOp([1])) == Di * Dx


def test_negative_powers_of_d():
    assert MixedOp.d(-2).as_intop() == T((X, 1), (-1, X))
    assert MixedOp.d(-3).as_intop() == T((X * X / 2, 1), (-X, X), (1, X * X / 2))


# properties


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_presentations_normalize_identically(seed):
    rng = seeded(seed)
    I = rand_intop(rng, 3)
    # split every tensor a d^-1 b into a d^-1 b1 + a d^-1 b2 and scale the halves
    pieces = []
    for a, b in I.tensors:
        c = RationalFunction(rand_poly(rng, 1))
        pieces += [(a * 2, (b - c) / 2), (a, c)]
    rng.shuffle(pieces)
    J = intop_normalize(I.scalar, pieces)
    assert J == I
    assert intop_to_fraction(J) == intop_to_fraction(I)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_mul_is_associative(seed):
    rng = seeded(seed)
    I, J, K = (rand_intop(rng, 2, 1) for _ in range(3))
    assert intop_mul(intop_mul(I, J), K) == intop_mul(I, intop_mul(J, K))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_arithmetic_agrees_with_fractions(seed):
    rng = seeded(seed)
    I, J = rand_intop(rng, 2, 1), rand_intop(rng, 2, 1)
    fI, fJ = intop_to_fraction(I), intop_to_fraction(J)
    assert intop_to_fraction(I + J) == fI + fJ
    assert intop_to_fraction(intop_mul(I, J)) == fI * fJ


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_rewrite_soundness_in_series(seed):
    rng = seeded(seed)
    I, J = rand_intop(rng, 2, 1), rand_intop(rng, 2, 1)
    lhs = expand_intop(intop_mul(I, J), 8)
    rhs = expand_intop(I, 8) * expand_intop(J, 8)
    assert agree(lhs, rhs)
    assert agree(expand_intop(I, 8), expand_fraction(intop_to_fraction(I), 8))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_length_equals_tensor_rank(seed):
    I = rand_intop(seeded(seed), 3)
    assert length(intop_to_fraction(I)) == I.rank


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_pol_recovers_span_of_a_side(seed):
    I = rand_intop(seeded(seed), 3)
    pol = intop_pol(I)
    P = annihilator(pol, monic=True)
    kernel = [RationalFunction(p) for p in kernel_poly_basis(P, 6)]
    assert echelonize(kernel)[0] == echelonize(pol)[0]
