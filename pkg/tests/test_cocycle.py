"""Trace cocycle: alpha0 words, the finite-rank defect, sigma0 and sigma1."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import poly_coeff, rand_diffop, rand_intop, seeded
from orecalc.cocycle import (
    D,
    L,
    CircleBasisIndex,
    EndoWord,
    MulBy,
    alpha0,
    bracket,
    cocycle_defect,
    cocycle_table,
    endo_apply,
    expand_negative_power,
    g_image,
    sigma0_closed_form,
    sigma0_oracle,
    sigma1,
    trace_defect,
)
from orecalc.diffop import DiffOp
from orecalc.errors import DomainError, RankNotStabilized
from orecalc.field import X, Polynomial, RationalFunction
from orecalc.formal import expand_fraction, expand_intop
from orecalc.fraction import frac_make
from orecalc.intop import IntegrationOp, MixedOp

x = Polynomial([0, 1])
dm = MixedOp.d(1)
di = MixedOp.d(-1)
xm = MixedOp(DiffOp([X]))
one = MixedOp(DiffOp([1]))


def monomial(a, n):
    return MixedOp(DiffOp([0] * n + [RationalFunction(a)]))


def tensor(b, c):
    return MixedOp.from_intop(IntegrationOp(0, [(RationalFunction(b), RationalFunction(c))]))


# words


def test_alpha0_examples():
    assert alpha0(dm) == EndoWord.word(D)
    assert alpha0(di) == EndoWord.word(L)
    assert alpha0(xm * di * xm) == EndoWord.word(MulBy(x), L, MulBy(x))


def test_endo_apply_examples():
    for k in range(8):
        assert endo_apply(EndoWord.word(D, L), x**k) == x**k
    assert endo_apply(EndoWord.word(L, D), Polynomial([1])) == 0
    assert endo_apply(EndoWord.word(MulBy(x)), x**2) == x**3


def test_L_is_the_zero_constant_antiderivative():
    assert endo_apply(EndoWord.word(L), x**3) == x**4 * RationalFunction(1, 4).num
    # LD = 1 - (evaluation at 0)
    p = Polynomial([5, 1, 2])
    assert endo_apply(EndoWord.word(L, D), p) == p - 5


def test_alpha0_rejects_rational_coefficients():
    with pytest.raises(DomainError):
        alpha0(MixedOp(DiffOp([1 / X])))


# brackets and sigma0


def test_bracket_examples():
    assert bracket(xm * dm, di) == di
    P = dm * dm + xm * di
    assert bracket(P, P).is_zero()
    assert bracket(dm, xm) == one


def test_sigma0_examples():
    assert sigma0_oracle(dm, di) == -1
    assert sigma0_oracle(xm * dm, di) == 0


@pytest.mark.parametrize("a", [Polynomial([1]), Polynomial([3, 1]), Polynomial([-2, 0, 5])])
def test_first_order_against_d_inverse(a):
    # sign is fixed by the trace, not by convention: -a(0) for a*d, and (-1)^n a^(n-1)(0) in general
    assert sigma0_oracle(monomial(a, 1), di) == -a.coeff(0)
    assert sigma0_oracle(monomial(a, 2), di) == a.derivative().coeff(0)


def test_defect_of_d_and_d_inverse_is_projection_onto_constants():
    T = trace_defect(dm, di)
    assert endo_apply(T, Polynomial([7, 3, 1])) == Polynomial([-7])


def test_hand_computed_trace():
    # [d^2, d^-1 x] = 2, and T = 2 - Dx + LxD^2 sends 1 to 1 and x^k (k >= 1) to 0
    assert bracket(dm * dm, di * xm) == 2 * one
    T = trace_defect(dm * dm, di * xm)
    assert endo_apply(T, Polynomial([1])) == 1
    assert all(endo_apply(T, x**k) == 0 for k in range(1, 8))
    assert sigma0_oracle(dm * dm, di * xm) == 1


def test_closed_form_examples():
    assert sigma0_closed_form(1, 1, 1, 1) == -1
    assert sigma0_closed_form(X, 0, X, 1) == 0
    assert sigma0_closed_form(X, 1, 1, 1) == 0
    assert sigma0_closed_form(1, 2, 1, X) == 1


def printed_closed_form(a, n, b, c):
    """sum_{i<n} (-1)^(i+1) (b (ac)^(i))^(n-i-1) at 0, differentiating the product jointly."""
    ac = a * c
    total = 0
    for i in range(n):
        f = ac
        for _ in range(i):
            f = f.derivative()
        g = b * f
        for _ in range(n - i - 1):
            g = g.derivative()
        total += (-1) ** (i + 1) * g.coeff(0)
    return total


def test_closed_form_matches_oracle_on_monomial_grid():
    mons = [Polynomial.monomial(k) for k in range(3)]
    ratios = set()
    for a, b, c in itertools.product(mons, repeat=3):
        for n in range(5):
            oracle = sigma0_oracle(monomial(a, n), tensor(b, c))
            closed = sigma0_closed_form(a, n, b, c)
            assert abs(oracle) == abs(closed)
            if oracle:
                ratios.add(oracle / closed)
    assert ratios == {1}


def test_jointly_differentiated_form_differs_from_trace():
    # the product-rule reading of the closed form loses agreement once b is differentiated
    assert printed_closed_form(Polynomial([1]), 2, Polynomial([1]), x) == 0
    assert sigma0_oracle(monomial(Polynomial([1]), 2), tensor(Polynomial([1]), x)) == 1
    for n in (0, 1):
        for a, b, c in itertools.product([Polynomial([1]), x, x**2], repeat=3):
            assert printed_closed_form(a, n, b, c) == sigma0_closed_form(a, n, b, c)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_closed_form_matches_oracle_on_random_polynomials(seed):
    rng = seeded(seed)
    from generators import rand_poly

    a, b, c = (rand_poly(rng, 3, nonzero=True) for _ in range(3))
    n = rng.randint(0, 4)
    assert sigma0_oracle(monomial(a, n), tensor(b, c)) == sigma0_closed_form(a, n, b, c)


def random_element(rng):
    kind = rng.random()
    diff = MixedOp(rand_diffop(rng, 2, poly_coeff()))
    integ = MixedOp.from_intop(rand_intop(rng, 2, 1))
    if kind < 0.35:
        return diff
    if kind < 0.7:
        return integ
    return diff + integ


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_vanishes_on_each_subalgebra(seed):
    rng = seeded(seed)
    P, Q = MixedOp(rand_diffop(rng, 3, poly_coeff())), MixedOp(rand_diffop(rng, 3, poly_coeff()))
    assert sigma0_oracle(P, Q) == 0
    I = MixedOp.from_intop(IntegrationOp(0, rand_intop(rng, 2, 2).tensors))
    J = MixedOp.from_intop(IntegrationOp(0, rand_intop(rng, 2, 2).tensors))
    assert sigma0_oracle(I, J) == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_antisymmetric_and_bilinear(seed):
    rng = seeded(seed)
    P, Q, R = random_element(rng), random_element(rng), random_element(rng)
    assert sigma0_oracle(P, Q) == -sigma0_oracle(Q, P)
    assert sigma0_oracle(P + R, Q) == sigma0_oracle(P, Q) + sigma0_oracle(R, Q)
    assert sigma0_oracle(P, P) == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_cocycle_identity(seed):
    rng = seeded(seed)
    P, Q, R = random_element(rng), random_element(rng), random_element(rng)
    assert cocycle_defect(P, Q, R) == 0


def test_cocycle_defect_examples():
    assert cocycle_defect(dm, xm, di) == 0
    assert cocycle_defect(dm * xm, dm * xm, di) == 0


def test_rank_not_stabilized_signals_a_broken_defect(monkeypatch):
    import orecalc.cocycle as cc

    real = cc.trace_defect

    def broken(P, Q):
        return real(P, Q) + EndoWord.word(MulBy(x))

    monkeypatch.setattr(cc, "trace_defect", broken)
    with pytest.raises(RankNotStabilized):
        cc.sigma0_oracle(dm, di)


# negative powers and the circle basis


def test_expand_negative_power_examples():
    assert expand_negative_power(-1) == IntegrationOp.d_inv()
    assert expand_negative_power(-2) == IntegrationOp(0, [(X, RationalFunction(1)), (RationalFunction(-1), X)])
    with pytest.raises(ValueError):
        expand_negative_power(0)


@pytest.mark.parametrize("n", [-1, -2, -3])
def test_negative_powers_match_series(n):
    series = expand_fraction(frac_make(DiffOp.d(-n), DiffOp([1])), 10)
    assert expand_intop(expand_negative_power(n), 10) == series
    assert MixedOp.from_intop(expand_negative_power(n)) == MixedOp.d(n)


def test_g_image_examples():
    assert g_image(CircleBasisIndex(1, 0)) == dm
    assert g_image(1, 1) == -(xm * dm + one)
    assert g_image(-1, 0) == di


def test_sigma1_examples():
    assert sigma1((2, 1), (0, 1)) == 0
    assert sigma1((1, 0), (-1, 0)) == -1


def test_sigma1_sign_convention():
    # sigma1 carries the (-1)^(n+s) from d/dz -> -x
    for m, n, r, s in itertools.product([-2, -1, 1, 2], [0, 1, 2], [-2, -1, 1, 2], [0, 1, 2]):
        P = (MixedOp.from_intop(expand_negative_power(m)) if m < 0 else MixedOp.d(m)) * xm**n
        Q = (MixedOp.from_intop(expand_negative_power(r)) if r < 0 else MixedOp.d(r)) * xm**s
        assert sigma1((m, n), (r, s)) == (-1) ** (n + s) * sigma0_oracle(P, Q)


def test_sigma1_support():
    for (m, n, r, s) in itertools.product(range(-4, 5), range(4), range(-4, 5), range(4)):
        if r * m >= 0 or n + s != m + r:
            assert sigma1((m, n), (r, s)) == 0


def test_virasoro_restriction_is_a_cubic():
    h = [sigma1((m + 1, 1), (-m + 1, 1)) for m in range(-6, 7)]
    for i, m in enumerate(range(-6, 7)):
        assert h[i] == -h[12 - i]
        assert 6 * h[i] == m**3 - m
    third = [h[i + 3] - 3 * h[i + 2] + 3 * h[i + 1] - h[i] for i in range(len(h) - 3)]
    assert len(set(third)) == 1 and third[0] != 0


def test_cocycle_table_rows():
    rows = cocycle_table(1, 0)
    assert (1, 0, -1, 0, -1) in [tuple(r) for r in rows]
    assert len(rows) == 9
