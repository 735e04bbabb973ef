"""The ring of differential operators Q(x)<d> with d*a = a*d + a'."""

import math
from math import comb

from . import kernels as K
from ._rational import Rational
from .errors import DependentSolutions, DivisionByZeroOperator, InvariantError, NotASolution
from .field import (
    Polynomial,
    RationalFunction,
    derivative_rows,
    determinant,
    echelonize,
    rf,
)

NEG_INF = -math.inf

__all__ = [
    "DiffOp",
    "NEG_INF",
    "dop_mul",
    "dop_add",
    "apply",
    "right_divide",
    "left_divide",
    "gcrd",
    "gcld",
    "lclm",
    "annihilator",
    "kernel_poly_basis",
    "factor_by_solution",
]

_ZERO = RationalFunction()
_ONE = RationalFunction(1)


class DiffOp:
    """``coeffs[i]`` is the coefficient of d^i (coefficients on the left)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [rf(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def d(cls, n=1):
        return cls([0] * n + [1])

    @classmethod
    def scalar(cls, a):
        return cls([a])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == _ONE

    def has_polynomial_coefficients(self):
        return all(c.is_polynomial() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            try:
                other = DiffOp.coerce(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("dop", self.coeffs))
        return self._hash

    @classmethod
    def coerce(cls, value):
        if isinstance(value, DiffOp):
            return value
        return cls([rf(value)])

    def __repr__(self):
        return f"DiffOp({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("d" if i == 1 else f"d^{i}")
            neg = c.num.n_terms() == 1 and c.num.lc < 0
            if neg:
                c = -c
            text = str(c)
            compound = c.num.n_terms() > 1 and c.den.degree == 0
            if mono:
                if c == _ONE:
                    body = mono
                else:
                    body = f"({text})*{mono}" if compound else f"{text}*{mono}"
            else:
                body = f"({text})" if compound and out else text
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __add__(self, other):
        return dop_add(self, DiffOp.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return DiffOp._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return dop_add(self, -DiffOp.coerce(other))

    def __rsub__(self, other):
        return dop_add(DiffOp.coerce(other), -self)

    def __mul__(self, other):
        return dop_mul(self, DiffOp.coerce(other))

    def __rmul__(self, other):
        return dop_mul(DiffOp.coerce(other), self)

    def __pow__(self, n):
        result = DiffOp([1])
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, f):
        return apply(self, f)

    @classmethod
    def _raw(cls, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        op = cls.__new__(cls)
        op.coeffs = tuple(cs)
        op._hash = None
        return op

    def left_scale(self, a):
        """``a * self`` for a scalar ``a``."""
        a = rf(a)
        return DiffOp._raw([a * c for c in self.coeffs])

    def right_scale(self, a):
        """``self * a`` for a scalar ``a``."""
        return dop_mul(self, DiffOp([a]))

    def monic(self):
        """Left-normalized: ``(1/lc) * self``; preserves right divisors and kernel."""
        if not self.coeffs:
            return self
        return self.left_scale(self.lc.inverse())

    def monic_right(self):
        """Right-normalized: ``self * (1/lc)``; preserves left divisors."""
        if not self.coeffs:
            return self
        return self.right_scale(self.lc.inverse())


def dop_add(P, Q):
    n = max(len(P.coeffs), len(Q.coeffs))
    return DiffOp._raw([P.coeff(i) + Q.coeff(i) for i in range(n)])


def dop_mul(P, Q):
    """Product in the Ore ring: d^i * b = sum_k C(i,k) b^(k) d^(i-k)."""
    if not P.coeffs or not Q.coeffs:
        return DiffOp()
    dp = len(P.coeffs) - 1
    out = [_ZERO] * (dp + len(Q.coeffs))
    for j, b in enumerate(Q.coeffs):
        if not b:
            continue
        derivs = [b]
        for _ in range(dp):
            nxt = derivs[-1].derivative()
            if not nxt:
                break
            derivs.append(nxt)
        for i, a in enumerate(P.coeffs):
            if not a:
                continue
            for k in range(min(i, len(derivs) - 1) + 1):
                out[i - k + j] = out[i - k + j] + a * derivs[k] * comb(i, k)
    return DiffOp._raw(out)


def apply(P, f):
    """P(f) = a_0 f + a_1 f' + ... + a_n f^(n)."""
    f = rf(f)
    acc = _ZERO
    cur = f
    for i, a in enumerate(P.coeffs):
        if i:
            cur = cur.derivative()
        if a and cur:
            acc = acc + a * cur
    return acc


def right_divide(P, Q):
    """``(q, r)`` with ``P = q*Q + r`` and ``deg r < deg Q``."""
    if not Q:
        raise DivisionByZeroOperator("right division by the zero operator")
    dq = Q.degree
    inv = Q.lc.inverse()
    q = [_ZERO] * max(0, len(P.coeffs) - dq)
    r = P
    while r and r.degree >= dq:
        k = r.degree - dq
        c = r.lc * inv
        q[k] = q[k] + c
        term = DiffOp._raw([_ZERO] * k + [c])
        r = r - dop_mul(term, Q)
    return DiffOp._raw(q), r


def left_divide(P, Q):
    """``(q, r)`` with ``P = Q*q + r`` and ``deg r < deg Q``."""
    if not Q:
        raise DivisionByZeroOperator("left division by the zero operator")
    dq = Q.degree
    inv = Q.lc.inverse()
    q = [_ZERO] * max(0, len(P.coeffs) - dq)
    r = P
    while r and r.degree >= dq:
        k = r.degree - dq
        c = r.lc * inv
        q[k] = q[k] + c
        term = DiffOp._raw([_ZERO] * k + [c])
        r = r - dop_mul(Q, term)
    return DiffOp._raw(q), r


def gcrd(P, Q):
    """Monic greatest common right divisor."""
    if not P and not Q:
        raise ValueError("gcrd(0, 0) is undefined")
    while Q:
        P, Q = Q, right_divide(P, Q)[1].monic()
    return P.monic()


def gcld(P, Q):
    """Greatest common left divisor, normalized on the right to be monic."""
    if not P and not Q:
        raise ValueError("gcld(0, 0) is undefined")
    while Q:
        P, Q = Q, left_divide(P, Q)[1].monic_right()
    return P.monic_right()


def lclm(P, Q):
    """Least common left multiple ``L = U*P = V*Q`` (L monic), by extended Euclid."""
    if not P or not Q:
        raise ValueError("lclm needs nonzero operators")
    r0, r1 = P, Q
    s0, s1 = DiffOp([1]), DiffOp()
    t0, t1 = DiffOp(), DiffOp([1])
    while r1:
        q, r = right_divide(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    # s1*P + t1*Q == 0 with s1 of minimal degree
    L = s1 * P
    c = L.lc.inverse()
    return L.left_scale(c), s1.left_scale(c), (-t1).left_scale(c)


def annihilator(fs, monic=True):
    """Operator of degree len(fs) whose kernel is span(fs), via the bordered Wronskian."""
    fs = [rf(f) for f in fs]
    n = len(fs)
    if n == 0:
        return DiffOp([1])
    rows = derivative_rows(fs, n + 1)
    lead = determinant(rows[:n])
    if not lead:
        raise DependentSolutions("inputs are linearly dependent over the constants")
    # expand the (n+1)x(n+1) determinant along the y-column
    coeffs = []
    for k in range(n + 1):
        minor = rows[:k] + rows[k + 1:]
        coeffs.append(determinant(minor) * (-1) ** k)
    P = DiffOp(coeffs)
    return P.monic() if monic else P


def kernel_poly_basis(P, degree_bound):
    """Reduced-echelon basis (ascending degree) of polynomial solutions of degree <= bound."""
    if not P:
        raise ValueError("kernel of the zero operator is not finite dimensional")
    images = [apply(P, RationalFunction(Polynomial.monomial(k))) for k in range(degree_bound + 1)]
    # common denominator -> linear system over Q on numerator coefficients
    common = Polynomial([1])
    for f in images:
        if f.den.degree > 0:
            common = (common * f.den).exquo(common.gcd(f.den))
    nums = [f.num * common.exquo(f.den) for f in images]
    height = max((n.degree for n in nums), default=-1) + 1
    ncols = degree_bound + 1
    if height == 0:
        null = [[Rational(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    else:
        matrix = [[nums[k].coeff(row) for k in range(ncols)] for row in range(height)]
        null = _nullspace(matrix, ncols)
    sols = [RationalFunction(Polynomial(v)) for v in null]
    basis, _ = echelonize(sols)
    return [b.num for b in sorted(basis, key=lambda b: b.num.degree)]


def _nullspace(matrix, ncols):
    rows, pivots = K.rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fcol in free:
        v = [Rational(0)] * ncols
        v[fcol] = Rational(1)
        for row, pcol in zip(rows, pivots):
            v[pcol] = -row[fcol]
        out.append(v)
    return out


def factor_by_solution(P, s):
    """Split ``P = Q * (d - s'/s)`` given a nonzero solution ``s`` of ``P``."""
    s = rf(s)
    if not s:
        raise NotASolution("the zero function does not determine a factor")
    if apply(P, s):
        raise NotASolution(f"{s} is not a solution of {P}")
    R = DiffOp([-(s.derivative() / s), 1])
    Q, r = right_divide(P, R)
    if r:
        raise InvariantError(f"nonzero remainder {r} splitting {P} by {R}")
    return Q, R
