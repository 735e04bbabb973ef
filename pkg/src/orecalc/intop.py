"""Integration operators a + sum a_i d^-1 b_i, and the ring they span with Q(x)<d>.

Canonical form: the b-side is the reduced-echelon basis of the (intrinsic)
right span of the tensor, the a-side holds the unique coefficients for that
basis, and the number of tensors equals the tensor rank.  Two presentations of
the same element therefore normalize to identical objects.

Products need antiderivatives: d^-1 g d^-1 = u d^-1 - d^-1 u with u' = g.
They always exist for polynomial coefficients; otherwise a product may raise
AntiderivativeObstruction.
"""

from .diffop import DiffOp, annihilator, dop_mul
from .errors import AntiderivativeObstruction, InvariantError, NoRationalAntiderivative, ZeroInput
from .field import RationalFunction, antiderivative, echelonize, rf
from .fraction import PdoFraction, frac_add, frac_make

__all__ = [
    "IntegrationOp",
    "MixedOp",
    "intop_normalize",
    "intop_mul",
    "intop_add",
    "intop_pol",
    "intop_to_fraction",
    "intop_order",
    "first_order_inverse",
]

_ZERO = RationalFunction()
_ONE = RationalFunction(1)


def _combine(coords, values, j):
    acc = _ZERO
    for row, v in zip(coords, values):
        c = row[j]
        if c:
            acc = acc + v * c
    return acc


def _canonical_tensors(tensors):
    pairs = [(rf(a), rf(b)) for a, b in tensors]
    pairs = [(a, b) for a, b in pairs if a and b]
    if not pairs:
        return ()
    # 1. independent b-side
    basis_b, coords = echelonize([b for _, b in pairs])
    a_side = [_combine(coords, [a for a, _ in pairs], j) for j in range(len(basis_b))]
    keep = [j for j, a in enumerate(a_side) if a]
    a_side = [a_side[j] for j in keep]
    basis_b = [basis_b[j] for j in keep]
    if not a_side:
        return ()
    # 2. rank reduction on the a-side
    basis_a, coords_a = echelonize(a_side)
    if len(basis_a) < len(a_side):
        b_side = [_combine(coords_a, basis_b, k) for k in range(len(basis_a))]
        a_side = basis_a
        # 3. re-echelonize the (now minimal) b-side
        basis_b, coords_b = echelonize(b_side)
        a_side = [_combine(coords_b, a_side, j) for j in range(len(basis_b))]
    return tuple(zip(a_side, basis_b))


class IntegrationOp:
    """``scalar + sum(a * d^-1 * b for a, b in tensors)`` in canonical form."""

    __slots__ = ("scalar", "tensors", "_hash")

    def __init__(self, scalar=0, tensors=()):
        self.scalar = rf(scalar)
        self.tensors = _canonical_tensors(tensors)
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def d_inv(cls):
        return cls(0, [(1, 1)])

    @classmethod
    def _raw(cls, scalar, tensors):
        op = cls.__new__(cls)
        op.scalar = scalar
        op.tensors = tuple(tensors)
        op._hash = None
        return op

    @property
    def rank(self):
        return len(self.tensors)

    def is_zero(self):
        return not self.scalar and not self.tensors

    def __bool__(self):
        return not self.is_zero()

    def has_polynomial_coefficients(self):
        return self.scalar.is_polynomial() and all(
            a.is_polynomial() and b.is_polynomial() for a, b in self.tensors
        )

    def __eq__(self, other):
        if not isinstance(other, IntegrationOp):
            try:
                other = IntegrationOp(rf(other))
            except TypeError:
                return NotImplemented
        return self.scalar == other.scalar and self.tensors == other.tensors

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("intop", self.scalar, self.tensors))
        return self._hash

    def __repr__(self):
        return f"IntegrationOp({self})"

    def __str__(self):
        parts = []
        if self.scalar:
            parts.append(_signed(self.scalar, ""))
        for a, b in self.tensors:
            parts.append(_signed(a, "d^-1" + _right_factor(b)))
        return _join(parts)

    def __add__(self, other):
        return intop_add(self, _as_intop(other))

    __radd__ = __add__

    def __neg__(self):
        return IntegrationOp._raw(-self.scalar, tuple((-a, b) for a, b in self.tensors))

    def __sub__(self, other):
        return intop_add(self, -_as_intop(other))

    def __rsub__(self, other):
        return intop_add(_as_intop(other), -self)

    def __mul__(self, other):
        return intop_mul(self, _as_intop(other))

    def __rmul__(self, other):
        return intop_mul(_as_intop(other), self)


def _as_intop(value):
    if isinstance(value, IntegrationOp):
        return value
    return IntegrationOp(rf(value))


def _right_factor(b):
    if b == _ONE:
        return ""
    text = str(b)
    if b.num.n_terms() > 1 or b.num.lc < 0:
        return f"*({text})"
    return f"*{text}"


def _signed(coef, tail):
    """(negative?, rendered body) for ``coef`` times the monomial text ``tail``."""
    neg = coef.num.n_terms() == 1 and coef.num.lc < 0
    if neg:
        coef = -coef
    if not tail:
        text = str(coef)
        body = f"({text})" if coef.num.n_terms() > 1 else text
        return neg, body, coef.num.n_terms() > 1
    if coef == _ONE:
        return neg, tail, False
    text = str(coef)
    if coef.num.n_terms() > 1 and coef.den.degree == 0:
        text = f"({text})"
    return neg, f"{text}*{tail}", False


def _join(parts):
    if not parts:
        return "0"
    out = []
    for neg, body, _ in parts:
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def intop_normalize(scalar, tensors):
    return IntegrationOp(scalar, tensors)


def intop_add(I, J):
    return IntegrationOp(I.scalar + J.scalar, I.tensors + J.tensors)


def _antiderivative(g):
    try:
        return antiderivative(g)
    except NoRationalAntiderivative as exc:
        raise AntiderivativeObstruction(f"d^-1 ({g}) d^-1 needs a rational antiderivative of {g}") from exc


def _mul_raw(I, J):
    scalar = I.scalar * J.scalar
    tensors = []
    a0, c0 = I.scalar, J.scalar
    if a0:
        tensors.extend((a0 * c, d) for c, d in J.tensors)
    if c0:
        tensors.extend((a, b * c0) for a, b in I.tensors)
    for a, b in I.tensors:
        for c, d in J.tensors:
            u = _antiderivative(b * c)
            if not u:
                continue
            # a d^-1 (bc) d^-1 d  =  a u d^-1 d - a d^-1 u d
            tensors.append((a * u, d))
            tensors.append((-a, u * d))
    return scalar, tensors


def intop_mul(I, J):
    scalar, tensors = _mul_raw(I, J)
    return IntegrationOp(scalar, tensors)


def intop_pol(I):
    basis, _ = echelonize([a for a, _ in I.tensors])
    return basis


def intop_order(I):
    """Valuation of ``I``: 0 if it has a scalar part, else -1-k for the first k
    with sum a_i b_i^(k) != 0 (always k < rank)."""
    if I.scalar:
        return 0
    if not I.tensors:
        return None
    bs = [b for _, b in I.tensors]
    for k in range(len(bs) + 1):
        total = _ZERO
        for (a, _), b in zip(I.tensors, bs):
            total = total + a * b
        if total:
            return -1 - k
        bs = [b.derivative() for b in bs]
    raise InvariantError(f"{I} is not in canonical form")


def intop_to_fraction(I):
    """``P^-1 (P I)`` with ``P`` the monic annihilator of the a-side."""
    if not I.tensors:
        return PdoFraction.coerce(DiffOp([I.scalar]))
    P = annihilator([a for a, _ in I.tensors], monic=True)
    prod = MixedOp.from_diffop(P) * MixedOp.from_intop(I)
    if prod.int_part:
        raise InvariantError(f"P*I kept an integration part {prod.int_part}")
    return frac_make(P, prod.diff)


def first_order_inverse(a):
    """``d^-1 (1/a)' - 1/a``, the inverse of ``d^-1 a' - a``."""
    a = rf(a)
    if not a:
        raise ZeroInput("first_order_inverse(0)")
    inv = a.inverse()
    return IntegrationOp(-inv, [(1, inv.derivative())])


class MixedOp:
    """An element ``D + sum a_i d^-1 b_i`` of the ring generated by Q(x), d and d^-1.

    ``diff`` carries every d^n term with n >= 0 (the scalar included);
    ``int_part`` is a canonical IntegrationOp with zero scalar.
    """

    __slots__ = ("diff", "int_part", "_hash")

    def __init__(self, diff=None, int_part=None):
        diff = DiffOp() if diff is None else DiffOp.coerce(diff)
        int_part = IntegrationOp() if int_part is None else int_part
        if int_part.scalar:
            diff = diff + DiffOp([int_part.scalar])
            int_part = IntegrationOp._raw(_ZERO, int_part.tensors)
        self.diff = diff
        self.int_part = int_part
        self._hash = None

    @classmethod
    def from_diffop(cls, D):
        return cls(D, None)

    @classmethod
    def from_intop(cls, I):
        return cls(None, I)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, MixedOp):
            return value
        if isinstance(value, IntegrationOp):
            return cls.from_intop(value)
        return cls.from_diffop(DiffOp.coerce(value))

    @classmethod
    def d(cls, n=1):
        if n >= 0:
            return cls(DiffOp.d(n))
        out = cls(None, IntegrationOp.d_inv())
        for _ in range(-n - 1):
            out = out * cls(None, IntegrationOp.d_inv())
        return out

    def is_zero(self):
        return not self.diff and not self.int_part

    def __bool__(self):
        return not self.is_zero()

    def is_diffop(self):
        return not self.int_part

    def is_intop(self):
        return self.diff.degree <= 0

    def as_intop(self):
        if self.diff.degree > 0:
            raise ValueError(f"{self} has a differential part")
        return IntegrationOp._raw(self.diff.coeff(0), self.int_part.tensors)

    def has_polynomial_coefficients(self):
        return self.diff.has_polynomial_coefficients() and self.int_part.has_polynomial_coefficients()

    def __eq__(self, other):
        if not isinstance(other, MixedOp):
            try:
                other = MixedOp.coerce(other)
            except TypeError:
                return NotImplemented
        return self.diff == other.diff and self.int_part == other.int_part

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("mixed", self.diff, self.int_part))
        return self._hash

    def __repr__(self):
        return f"MixedOp({self})"

    def __str__(self):
        if not self.int_part:
            return str(self.diff)
        if not self.diff:
            return str(self.int_part)
        tail = str(self.int_part)
        if tail.startswith("-"):
            return f"{self.diff} - {tail[1:]}"
        return f"{self.diff} + {tail}"

    def __add__(self, other):
        other = MixedOp.coerce(other)
        return MixedOp(self.diff + other.diff, intop_add(self.int_part, other.int_part))

    __radd__ = __add__

    def __neg__(self):
        return MixedOp(-self.diff, -self.int_part)

    def __sub__(self, other):
        return self + (-MixedOp.coerce(other))

    def __rsub__(self, other):
        return MixedOp.coerce(other) + (-self)

    def __mul__(self, other):
        return mixed_mul(self, MixedOp.coerce(other))

    def __rmul__(self, other):
        return mixed_mul(MixedOp.coerce(other), self)

    def __pow__(self, n):
        result = MixedOp(DiffOp([1]))
        for _ in range(n):
            result = result * self
        return result

    def to_fraction(self):
        return frac_add(PdoFraction.coerce(self.diff), intop_to_fraction(self.int_part))


def _d_times(diff, tensors):
    """``d * (diff + sum a d^-1 b)``, using d a d^-1 b = a b + a' d^-1 b."""
    new_diff = dop_mul(DiffOp.d(), diff)
    extra = [ab for a, b in tensors if (ab := a * b)]
    if extra:
        acc = _ZERO
        for v in extra:
            acc = acc + v
        new_diff = new_diff + DiffOp([acc])
    new_tensors = [(a.derivative(), b) for a, b in tensors]
    return new_diff, [(a, b) for a, b in new_tensors if a]


def _times_d(diff, tensors):
    """``(diff + sum a d^-1 b) * d``, using d^-1 b d = b - d^-1 b'."""
    new_diff = dop_mul(diff, DiffOp.d())
    extra = [ab for a, b in tensors if (ab := a * b)]
    if extra:
        acc = _ZERO
        for v in extra:
            acc = acc + v
        new_diff = new_diff + DiffOp([acc])
    new_tensors = [(-a, b.derivative()) for a, b in tensors]
    return new_diff, [(a, b) for a, b in new_tensors if b]


def mixed_mul(M, N):
    diff = dop_mul(M.diff, N.diff)
    tensors = []
    # diff(M) * int(N)
    if N.int_part.tensors:
        for k, coef in enumerate(M.diff.coeffs):
            if not coef:
                continue
            dk, tk = DiffOp(), list(N.int_part.tensors)
            for _ in range(k):
                dk, tk = _d_times(dk, tk)
            diff = diff + dk.left_scale(coef)
            tensors.extend((coef * a, b) for a, b in tk)
    # int(M) * diff(N)
    if M.int_part.tensors:
        for k, coef in enumerate(N.diff.coeffs):
            if not coef:
                continue
            dk, tk = DiffOp(), [(a, b * coef) for a, b in M.int_part.tensors]
            for _ in range(k):
                dk, tk = _times_d(dk, tk)
            diff = diff + dk
            tensors.extend(tk)
    # int(M) * int(N)
    if M.int_part.tensors and N.int_part.tensors:
        scalar, tt = _mul_raw(M.int_part, N.int_part)
        diff = diff + DiffOp([scalar])
        tensors.extend(tt)
    return MixedOp(diff, IntegrationOp(0, tensors))
