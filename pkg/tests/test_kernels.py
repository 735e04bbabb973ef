"""The compiled kernels and the pure-Python fallback must agree exactly."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orecalc import _pykernels as py
from orecalc._rational import Rational

ck = pytest.importorskip("orecalc._ckernels", reason="compiled kernels not built")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12).map(
    lambda f: Rational(f.numerator, f.denominator)
)
polys = st.lists(rationals, max_size=7)
nonzero_polys = polys.filter(lambda p: any(p))


def test_backend_selection():
    from orecalc import kernels

    assert kernels.BACKEND in ("cython", "python")


@settings(max_examples=200, deadline=None)
@given(polys, polys, rationals)
def test_ring_operations(a, b, c):
    assert ck.trim(a) == py.trim(a)
    assert ck.add(a, b) == py.add(a, b)
    assert ck.sub(a, b) == py.sub(a, b)
    assert ck.scale(a, c) == py.scale(a, c)
    assert ck.mul(a, b) == py.mul(a, b)
    assert ck.deriv(a) == py.deriv(a)


@settings(max_examples=200, deadline=None)
@given(polys, nonzero_polys)
def test_division_and_gcd(a, b):
    b = py.trim(b)
    assert ck.divmod_(a, b) == py.divmod_(a, b)
    assert ck.monic(b) == py.monic(b)
    assert ck.gcd(a, b) == py.gcd(a, b)


@settings(max_examples=200, deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_of_products_matches_euclid(a, b, g):
    a, b, g = py.trim(a), py.trim(b), py.trim(g)
    f1, f2 = py.mul(a, g), py.mul(b, g)
    expected = py._euclid_gcd(f1, f2)
    assert py.gcd(f1, f2) == expected
    assert ck.gcd(f1, f2) == expected
    # the common factor divides the result
    assert not py.divmod_(expected, py.monic(g))[1]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), max_size=5)))
def test_rref(rows):
    assert ck.rref(rows) == py.rref(rows)
