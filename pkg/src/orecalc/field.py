"""The differential field Q(x) with derivation d/dx.

Polynomials are dense and immutable; rational functions are kept reduced
with a monic denominator, so structural equality is mathematical equality.
"""

from fractions import Fraction

from . import kernels as K
from ._rational import ONE, ZERO, Rational, as_rational
from .errors import (
    DivisionByZero,
    NoRationalAntiderivative,
    PoleAtZero,
)

__all__ = [
    "Polynomial",
    "RationalFunction",
    "X",
    "rf",
    "rf_arith",
    "derive",
    "antiderivative",
    "eval_at_zero",
    "wronskian",
    "c_independent",
    "echelonize",
    "determinant",
]


def _fmt_rational(c):
    if c.denominator == 1:
        return str(int(c.numerator))
    return f"{int(c.numerator)}/{int(c.denominator)}"


class Polynomial:
    """A polynomial in ``x`` with exact rational coefficients (ascending)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Polynomial):
            self.coeffs = coeffs.coeffs
        else:
            self.coeffs = tuple(K.trim([as_rational(c) for c in coeffs]))
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already trimmed and of the Rational type
        p = cls.__new__(cls)
        p.coeffs = tuple(coeffs)
        p._hash = None
        return p

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, RationalFunction):
            return other == self
        try:
            return self.coeffs == Polynomial([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            if k == 0:
                body = _fmt_rational(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{_fmt_rational(a)}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def n_terms(self):
        return sum(1 for c in self.coeffs if c)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        if not isinstance(other, _POLY_OPERANDS):
            return NotImplemented
        return Polynomial._raw(K.add(self.coeffs, self._coerce(other).coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, _POLY_OPERANDS):
            return NotImplemented
        return Polynomial._raw(K.sub(self.coeffs, self._coerce(other).coeffs))

    def __rsub__(self, other):
        if not isinstance(other, _POLY_OPERANDS):
            return NotImplemented
        return Polynomial._raw(K.sub(self._coerce(other).coeffs, self.coeffs))

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, _POLY_OPERANDS):
            return NotImplemented
        return Polynomial._raw(K.mul(self.coeffs, self._coerce(other).coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        q, r = K.divmod_(self.coeffs, other.coeffs)
        return Polynomial._raw(q), Polynomial._raw(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, value):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def monic(self):
        return Polynomial._raw(K.monic(self.coeffs))

    def derivative(self):
        return Polynomial._raw(K.trim(K.deriv(self.coeffs)))

    def integral(self):
        """Antiderivative with zero constant term."""
        if not self.coeffs:
            return self
        return Polynomial._raw([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def gcd(self, other):
        return Polynomial._raw(K.gcd(self.coeffs, other.coeffs))


def _ext_gcd(a, b):
    """Return ``(s, t, g)`` with ``s*a + t*b = g``, ``g`` the monic gcd."""
    r0, r1 = a, b
    s0, s1 = Polynomial([1]), Polynomial()
    t0, t1 = Polynomial(), Polynomial([1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = ONE / r0.lc
    return s0 * inv, t0 * inv, r0 * inv


def _solve_diophantine(a, b, c):
    """Find ``(s, t)`` with ``s*a + t*b = c`` and ``deg s < deg b``; gcd(a, b) | c."""
    s0, t0, g = _ext_gcd(a, b)
    q, r = divmod(c, g)
    if r:
        raise ArithmeticError("gcd does not divide right-hand side")
    s = (s0 * q) % b
    t = (c - s * a).exquo(b)
    return s, t


class RationalFunction:
    """A reduced quotient ``num/den`` of polynomials, ``den`` monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, Polynomial) else Polynomial([num])
        den = den if isinstance(den, Polynomial) else Polynomial([den])
        if not den:
            raise DivisionByZero("zero denominator")
        self.num, self.den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        f = cls.__new__(cls)
        f.num = num
        f.den = den
        f._hash = None
        return f

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RationalFunction):
            return value
        if not isinstance(value, _SCALARS):
            raise TypeError(f"cannot convert {type(value).__name__} to a rational function")
        if isinstance(value, Polynomial):
            return cls._raw(value, _ONE_POLY)
        return cls._raw(Polynomial([value]), _ONE_POLY)

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.coeff(0)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if self.den.degree == 0:
                self._hash = hash(self.num)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        num = str(self.num)
        if self.num.n_terms() > 1:
            num = f"({num})"
        den = str(self.den)
        if self.den.n_terms() > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __add__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            if self.den.degree == 0:
                return RationalFunction._raw(self.num + other.num, _ONE_POLY)
            return RationalFunction(self.num + other.num, self.den)
        # Henrici: only g = gcd(b, d) can share factors with the new numerator
        b, d = self.den, other.den
        g = b.gcd(d)
        if g.degree == 0:
            return RationalFunction._raw(self.num * d + other.num * b, b * d)
        b1, d1 = b.exquo(g), d.exquo(g)
        t = self.num * d1 + other.num * b1
        if not t:
            return RationalFunction._raw(t, _ONE_POLY)
        h = t.gcd(g)
        if h.degree > 0:
            t, d = t.exquo(h), d.exquo(h)
        return RationalFunction._raw(t, b1 * d)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = RationalFunction.coerce(other)
        if not self.num or not other.num:
            return RationalFunction._raw(Polynomial(), _ONE_POLY)
        if self.den.degree == 0 and other.den.degree == 0:
            return RationalFunction._raw(self.num * other.num, _ONE_POLY)
        # cross-reduce before multiplying to keep the gcd inputs small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = self.num.exquo(g1) * other.num.exquo(g2)
        den = self.den.exquo(g2) * other.den.exquo(g1)
        inv = ONE / den.lc
        return RationalFunction._raw(num * inv, den * inv)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        inv = ONE / self.num.lc
        return RationalFunction._raw(self.den * inv, self.num * inv)

    def __truediv__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.num ** n, self.den ** n)

    def derivative(self):
        if self.den.degree == 0:
            return RationalFunction._raw(self.num.derivative(), _ONE_POLY)
        # (n/d)' = (n'd - nd')/d^2; with g = gcd(d, d') the common factor is cancelled early
        d1 = self.den.derivative()
        g = self.den.gcd(d1)
        dg = self.den.exquo(g)
        num = self.num.derivative() * dg - self.num * d1.exquo(g)
        return RationalFunction(num, dg * self.den)

    def __call__(self, value):
        d = self.den(value)
        if not d:
            raise DivisionByZero("pole at evaluation point")
        return self.num(value) / d

    def degree_bound(self):
        """max(deg num, deg den); a crude size measure."""
        return max(self.num.degree, self.den.degree)


def _reduce(num, den):
    if not num:
        return num, _ONE_POLY
    if den.degree > 0:
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exquo(g)
            den = den.exquo(g)
    inv = ONE / den.lc
    if inv != 1:
        num = num * inv
        den = den * inv
    return num, den


_ONE_POLY = Polynomial([1])
_POLY_OPERANDS = (Polynomial, int, Rational, Fraction)
_SCALARS = (RationalFunction, Polynomial, int, Rational, Fraction)

X = RationalFunction(Polynomial([0, 1]))


def rf(value):
    """Build a RationalFunction from a number, Polynomial, or existing value."""
    return RationalFunction.coerce(value)


def rf_arith(op, f, g=None):
    """Field operations dispatched by name: add, sub, mul, div, neg, inv."""
    f = rf(f)
    if op == "neg":
        return -f
    if op == "inv":
        return f.inverse()
    g = rf(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def derive(f):
    return rf(f).derivative()


def squarefree(p):
    """Yun's algorithm: monic ``p = prod(a[i]**(i+1))``, returns the list ``a``."""
    p = p.monic()
    if p.degree <= 0:
        return []
    dp = p.derivative()
    a0 = p.gcd(dp)
    b = p.exquo(a0)
    c = dp.exquo(a0)
    d = c - b.derivative()
    out = []
    while b.degree > 0:
        a = b.gcd(d)
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
        out.append(a)
    return out


def hermite_reduce(a, d):
    """Hermite reduction of a proper fraction ``a/d`` (``d`` monic).

    Returns ``(g, r)`` with ``(a/d) = g' + r`` where ``r`` has a squarefree
    denominator; ``r`` is zero exactly when ``a/d`` has a rational integral.
    """
    g = RationalFunction()
    factors = squarefree(d)
    for i in range(2, len(factors) + 1):
        v = factors[i - 1]
        if v.degree <= 0:
            continue
        u = d.exquo(v ** i)
        for j in range(i - 1, 0, -1):
            b, c = _solve_diophantine(u * v.derivative(), v, a * Rational(-1, j))
            g = g + RationalFunction(b, v ** j)
            a = c * (-j) - u * b.derivative()
        d = u * v
    return g, RationalFunction(a, d)


def antiderivative(f):
    """Rational antiderivative of ``f``; polynomial part has zero constant term.

    Raises NoRationalAntiderivative if a logarithmic part remains.
    """
    f = rf(f)
    q, r = divmod(f.num, f.den)
    poly_part = RationalFunction._raw(q.integral(), _ONE_POLY)
    if not r:
        return poly_part
    g, rest = hermite_reduce(r, f.den)
    if rest:
        raise NoRationalAntiderivative(f"{f} has a nonzero logarithmic part {rest}")
    return poly_part + g


def eval_at_zero(f):
    f = rf(f)
    d0 = f.den.coeff(0)
    if not d0:
        raise PoleAtZero(f"{f} has a pole at 0")
    return f.num.coeff(0) / d0


def determinant(matrix):
    """Determinant by Gaussian elimination over Q(x)."""
    m = [[rf(v) for v in row] for row in matrix]
    n = len(m)
    det = RationalFunction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return RationalFunction()
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        pinv = p.inverse()
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] * pinv
                m[i] = [m[i][k] - f * m[col][k] if k >= col else m[i][k] for k in range(n)]
    return det


def derivative_rows(fs, nrows):
    """Rows ``[f^(k) for f in fs]`` for k = 0..nrows-1."""
    rows = [[rf(f) for f in fs]]
    for _ in range(nrows - 1):
        rows.append([f.derivative() for f in rows[-1]])
    return rows


def wronskian(fs):
    if not fs:
        raise ValueError("wronskian of an empty list")
    return determinant(derivative_rows(fs, len(fs)))


def c_independent(fs):
    return bool(wronskian(fs))


def echelonize(fs):
    """Reduced-echelon basis over Q of ``span(fs)`` and coordinates of each input.

    The inputs are put over their monic common denominator; numerator
    coefficient vectors (highest power first) are row reduced.  Returns
    ``(basis, coords)`` with ``fs[i] == sum(coords[i][j] * basis[j])``.
    """
    fs = [rf(f) for f in fs]
    if not fs:
        return [], []
    common = _ONE_POLY
    for f in fs:
        if f.den.degree > 0:
            common = (common * f.den).exquo(common.gcd(f.den))
    nums = [f.num * common.exquo(f.den) for f in fs]
    width = max(n.degree for n in nums) + 1
    if width <= 0:
        return [], [[] for _ in fs]
    vectors = [[n.coeff(width - 1 - j) for j in range(width)] for n in nums]
    rows, pivots = K.rref(vectors)
    basis = [RationalFunction(Polynomial(list(reversed(row))), common) for row in rows]
    coords = [[v[p] for p in pivots] for v in vectors]
    return basis, coords


def polynomial_coefficients(f):
    """Coefficient list of a polynomial-valued RationalFunction."""
    f = rf(f)
    if not f.is_polynomial():
        raise ValueError(f"{f} is not a polynomial")
    return f.num
