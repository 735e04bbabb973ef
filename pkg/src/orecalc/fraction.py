"""Rational pseudo-differential operators: left fractions P^-1 Q.

A :class:`PdoFraction` is always stored in its minimal presentation: the
denominator is monic and left-coprime to the numerator, which pins the
representation uniquely (the only freedom is a left scalar factor, and
monicity fixes it).
"""

from itertools import product

from .diffop import NEG_INF, DiffOp, annihilator, gcld, kernel_poly_basis, left_divide, lclm
from .diffop import factor_by_solution
from .errors import (
    DenominatorNotSplit,
    DependentInput,
    DependentSolutions,
    InvariantError,
    SearchBudgetExceeded,
    ZeroDenominator,
    ZeroElement,
    ZeroInverse,
)
from .field import Polynomial, RationalFunction, c_independent, rf

__all__ = [
    "PdoFraction",
    "frac_make",
    "frac_add",
    "frac_mul",
    "frac_inv",
    "length",
    "ord",
    "pol_op",
    "zer_op",
    "fraction_with_poles_zeros",
    "in_valuation_ring",
    "separate",
]

_ONE_OP = DiffOp([1])


class PdoFraction:
    __slots__ = ("den", "num", "_hash")

    def __init__(self, den, num):
        # callers go through frac_make; this only stores
        self.den = den
        self.num = num
        self._hash = None

    @classmethod
    def coerce(cls, value):
        if isinstance(value, PdoFraction):
            return value
        if isinstance(value, DiffOp):
            return cls(_ONE_OP, value)
        return cls(_ONE_OP, DiffOp([rf(value)]))

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, PdoFraction):
            try:
                other = PdoFraction.coerce(other)
            except TypeError:
                return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("frac", self.den, self.num))
        return self._hash

    def __repr__(self):
        return f"PdoFraction({self})"

    def __str__(self):
        if self.den == _ONE_OP:
            return str(self.num)
        return f"({self.den})^-1 * ({self.num})"

    def is_diffop(self):
        return self.den == _ONE_OP

    def __add__(self, other):
        return frac_add(self, PdoFraction.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return PdoFraction(self.den, -self.num)

    def __sub__(self, other):
        return frac_add(self, -PdoFraction.coerce(other))

    def __rsub__(self, other):
        return frac_add(PdoFraction.coerce(other), -self)

    def __mul__(self, other):
        return frac_mul(self, PdoFraction.coerce(other))

    def __rmul__(self, other):
        return frac_mul(PdoFraction.coerce(other), self)

    def __truediv__(self, other):
        return frac_mul(self, frac_inv(PdoFraction.coerce(other)))

    def __pow__(self, n):
        if n < 0:
            return frac_inv(self) ** (-n)
        result = PdoFraction(_ONE_OP, _ONE_OP)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self):
        return frac_inv(self)


def frac_make(P, Q):
    """Minimal presentation of ``P^-1 Q``."""
    P, Q = DiffOp.coerce(P), DiffOp.coerce(Q)
    if not P:
        raise ZeroDenominator("fraction with zero denominator")
    if not Q:
        return PdoFraction(_ONE_OP, DiffOp())
    G = gcld(P, Q)
    if G.degree > 0:
        P = left_divide(P, G)[0]
        Q = left_divide(Q, G)[0]
    a = P.lc.inverse()
    return PdoFraction(P.left_scale(a), Q.left_scale(a))


def frac_add(f, g):
    if not f.num:
        return g
    if not g.num:
        return f
    if f.den == g.den == _ONE_OP:
        return PdoFraction(_ONE_OP, f.num + g.num)
    L, U, V = lclm(f.den, g.den)
    return frac_make(L, U * f.num + V * g.num)


def frac_mul(f, g):
    """(P1^-1 Q1)(P2^-1 Q2) = (A P1)^-1 (B Q2) where A Q1 = B P2."""
    if not f.num or not g.num:
        return PdoFraction(_ONE_OP, DiffOp())
    if g.den == _ONE_OP:
        return frac_make(f.den, f.num * g.num)
    L, A, B = lclm(f.num, g.den)
    return frac_make(A * f.den, B * g.num)


def frac_inv(f):
    if not f.num:
        raise ZeroInverse("inverse of the zero fraction")
    return frac_make(f.num, f.den)


def length(f):
    return f.den.degree


def ord(f):
    if not f.num:
        return NEG_INF
    return f.num.degree - f.den.degree


def pol_op(f):
    return f.den


def zer_op(f):
    if not f.num:
        raise ZeroElement("the zero fraction has no zero operator")
    return f.num.monic()


def _multiplier_candidates(budget):
    for k in range(1, budget + 1):
        yield RationalFunction(Polynomial.monomial(k))
    for k, c in product(range(1, budget + 1), (1, -1, 2, -2)):
        yield RationalFunction(Polynomial.monomial(k) + c)
    for c in (1, -1, 2, -2):
        yield RationalFunction(1, Polynomial([c, 1]))


def fraction_with_poles_zeros(V, W, budget=8):
    """A fraction whose pole space is span(V) and zero space is span(W).

    Searches multipliers ``a`` such that ``P_V`` and ``a*P_W`` are left-coprime.
    """
    V = [rf(v) for v in V]
    W = [rf(w) for w in W]
    for space in (V, W):
        if space and not c_independent(space):
            raise DependentInput("input functions are linearly dependent over the constants")
    try:
        PV = annihilator(V, monic=True)
        PW = annihilator(W, monic=True)
    except DependentSolutions as exc:  # pragma: no cover - guarded above
        raise DependentInput(str(exc)) from exc
    for a in _multiplier_candidates(budget):
        num = PW.left_scale(a)
        if gcld(PV, num).degree == 0:
            f = frac_make(PV, num)
            if f.den != PV:
                raise InvariantError("coprime presentation was not preserved by normalization")
            return f
    raise SearchBudgetExceeded(f"no multiplier found among {budget} candidate powers")


def in_valuation_ring(f):
    return not f.num or ord(f) <= 0


def separate(f, bound=8):
    """Split ``f = D + I`` with D a differential and I an integration operator.

    The denominator is peeled into first-order factors ``d - s'/s`` using
    polynomial kernel elements found at degree <= ``bound``; each factor is
    inverted as ``s d^-1 s^-1``.
    """
    from .intop import IntegrationOp, MixedOp, intop_mul, intop_to_fraction

    D, r = left_divide(f.num, f.den)
    if not r:
        return D, IntegrationOp.zero()
    # f.den = c * R_n ... R_1 with R_1 split off first
    factors = []
    current = f.den
    while current.degree > 0:
        sols = kernel_poly_basis(current, bound)
        if not sols:
            raise DenominatorNotSplit(
                f"{current} has no nonzero polynomial solution of degree <= {bound}"
            )
        current, R = factor_by_solution(current, RationalFunction(sols[0]))
        factors.append(sols[0])
    c = current.lc
    inverse = IntegrationOp(1)
    for s in factors:
        s = RationalFunction(s)
        inverse = intop_mul(inverse, IntegrationOp(0, [(s, s.inverse())]))
    inverse = intop_mul(inverse, IntegrationOp(c.inverse()))
    rest = MixedOp.from_intop(inverse) * MixedOp.from_diffop(r)
    if rest.diff:
        raise InvariantError(f"integration part {rest} of a negative-order fraction has a differential part")
    I = rest.int_part
    if frac_add(PdoFraction.coerce(D), intop_to_fraction(I)) != f:
        raise InvariantError("separation does not reproduce the input fraction")
    return D, I
