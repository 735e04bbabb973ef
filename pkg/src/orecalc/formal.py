"""Formal pseudo-differential operators: sum a_n d^n over n <= order.

A :class:`FormalPdo` stores its nonzero coefficients together with
``floor``, the lowest exponent known exactly (``-inf`` for an exact, finite
value).  Every operation derives the guaranteed floor of its result from the
floors of its inputs, so a truncated value never claims digits it does not
have.  ``precision`` is the number of exponents tracked from the leading one
down to the floor: order, order-1, ..., order-precision+1.
"""

import math
from math import factorial

from ._rational import Rational
from .diffop import NEG_INF, DiffOp
from .errors import ZeroToPrecision
from .field import RationalFunction, rf

__all__ = [
    "FormalPdo",
    "DEFAULT_PRECISION",
    "binomial",
    "formal_add",
    "formal_mul",
    "formal_inv",
    "formal_D",
    "expand_fraction",
    "expand_intop",
    "agree",
]

DEFAULT_PRECISION = 12

_ZERO = RationalFunction()


def binomial(n, i):
    """Generalized binomial n(n-1)...(n-i+1)/i! for any integer n."""
    num = 1
    for k in range(i):
        num *= n - k
    return Rational(num, factorial(i))


class FormalPdo:
    __slots__ = ("terms", "floor")

    def __init__(self, terms=None, floor=NEG_INF):
        clean = {}
        for n, c in (terms or {}).items():
            c = rf(c)
            if c and n >= floor:
                clean[int(n)] = c
        self.terms = clean
        self.floor = floor

    @classmethod
    def monomial(cls, coef, n):
        return cls({n: coef})

    @classmethod
    def from_diffop(cls, P):
        return cls({i: c for i, c in enumerate(P.coeffs)})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, FormalPdo):
            return value
        if isinstance(value, DiffOp):
            return cls.from_diffop(value)
        return cls({0: rf(value)})

    @property
    def order(self):
        return max(self.terms) if self.terms else NEG_INF

    @property
    def precision(self):
        if not self.terms:
            return 0
        return self.order - self.floor + 1

    def is_exact(self):
        return self.floor == NEG_INF

    def is_zero(self):
        """Zero to the tracked precision."""
        return not self.terms

    def coeff(self, n):
        return self.terms.get(n, _ZERO)

    def truncate(self, floor):
        return FormalPdo(self.terms, max(self.floor, floor))

    def _effective_order(self):
        return self.order if self.terms else self.floor - 1

    def __eq__(self, other):
        if not isinstance(other, FormalPdo):
            try:
                other = FormalPdo.coerce(other)
            except TypeError:
                return NotImplemented
        return self.floor == other.floor and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"FormalPdo({self})"

    def __str__(self):
        parts = []
        for n in sorted(self.terms, reverse=True):
            c = self.terms[n]
            mono = "" if n == 0 else ("d" if n == 1 else f"d^{n}")
            neg = c.num.n_terms() == 1 and c.num.lc < 0
            if neg:
                c = -c
            text = str(c)
            if not mono:
                body = f"({text})" if c.num.n_terms() > 1 and parts else text
            elif c == 1:
                body = mono
            elif c.num.n_terms() > 1 and c.den.degree == 0:
                body = f"({text})*{mono}"
            else:
                body = f"{text}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        if not self.is_exact():
            err = self.floor - 1
            big_o = "O(1)" if err == 0 else ("O(d)" if err == 1 else f"O(d^{err})")
            parts.append(f" + {big_o}" if parts else big_o)
        return "".join(parts) or "0"

    def to_json(self):
        return {
            "order": None if not self.terms else self.order,
            "precision": None if self.is_exact() else self.precision,
            "terms": {str(n): str(self.terms[n]) for n in sorted(self.terms, reverse=True)},
        }

    def __add__(self, other):
        return formal_add(self, FormalPdo.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return FormalPdo({n: -c for n, c in self.terms.items()}, self.floor)

    def __sub__(self, other):
        return formal_add(self, -FormalPdo.coerce(other))

    def __mul__(self, other):
        return formal_mul(self, FormalPdo.coerce(other))

    def __rmul__(self, other):
        return formal_mul(FormalPdo.coerce(other), self)

    def left_scale(self, a):
        a = rf(a)
        return FormalPdo({n: a * c for n, c in self.terms.items()}, self.floor)


def agree(f, g):
    """True if ``f`` and ``g`` coincide on every exponent both of them track."""
    floor = max(f.floor, g.floor)
    keys = {n for n in f.terms if n >= floor} | {n for n in g.terms if n >= floor}
    return all(f.coeff(n) == g.coeff(n) for n in keys)


def formal_add(f, g):
    floor = max(f.floor, g.floor)
    terms = {n: c for n, c in f.terms.items() if n >= floor}
    for n, c in g.terms.items():
        if n >= floor:
            terms[n] = terms.get(n, _ZERO) + c
    return FormalPdo(terms, floor)


def _needs_truncation(f, g):
    for m in f.terms:
        if m < 0 and any(not b.is_polynomial() for b in g.terms.values()):
            return True
    return False


def formal_mul(f, g, floor=None):
    """Product by d^m b = sum_i C(m, i) b^(i) d^(m-i), truncated to the guaranteed window.

    ``floor`` optionally cuts the result off at an absolute exponent.  Exact
    inputs whose product is an infinite series are cut at DEFAULT_PRECISION.
    """
    natural = max(f._effective_order() + g.floor, f.floor + g._effective_order())
    if floor is not None:
        natural = max(natural, floor)
    elif natural == NEG_INF and _needs_truncation(f, g):
        natural = f._effective_order() + g._effective_order() - DEFAULT_PRECISION + 1
    out = {}
    derivs = {}
    for n, b in g.terms.items():
        chain = [b]
        derivs[n] = chain
    for m, a in f.terms.items():
        for n, b in g.terms.items():
            chain = derivs[n]
            i = 0
            while True:
                e = m + n - i
                if e < natural or (m >= 0 and i > m):
                    break
                if i >= len(chain):
                    nxt = chain[-1].derivative()
                    chain.append(nxt)
                bi = chain[i]
                if not bi:
                    break
                c = binomial(m, i)
                if c:
                    out[e] = out.get(e, _ZERO) + a * bi * c
                i += 1
    return FormalPdo(out, natural)


def formal_inv(f, precision=None):
    """Inverse by leading-term recursion, to ``min(f.precision, precision)`` terms."""
    if not f.terms:
        raise ZeroToPrecision("cannot invert a value that is zero to its precision")
    m = f.order
    lead_inv = f.terms[m].inverse()
    p = f.precision
    if precision is not None:
        p = min(p, precision)
    if p == math.inf:
        p = DEFAULT_PRECISION
    floor = -m - p + 1
    target = floor + m
    g = {}
    residue = FormalPdo({0: 1}, target)
    for k in range(-m, floor - 1, -1):
        c = residue.coeff(k + m) * lead_inv
        if not c:
            continue
        g[k] = c
        residue = formal_add(residue, -formal_mul(f, FormalPdo({k: c}), floor=target))
    return FormalPdo(g, floor)


def formal_D(f):
    """D(sum a_n d^n) = sum n a_n d^(n-1); lowers the floor by one."""
    terms = {n - 1: c * n for n, c in f.terms.items() if n}
    return FormalPdo(terms, f.floor - 1)


def expand_fraction(f, precision=DEFAULT_PRECISION):
    """Laurent expansion of ``P^-1 Q`` with ``precision`` exact terms."""
    if not f.num:
        return FormalPdo()
    inv = formal_inv(FormalPdo.from_diffop(f.den), precision)
    return formal_mul(inv, FormalPdo.from_diffop(f.num))


def expand_intop(I, precision=DEFAULT_PRECISION):
    """Laurent expansion of ``a + sum a_i d^-1 b_i`` with ``precision`` exact terms."""
    from .intop import intop_order

    order = intop_order(I)
    if order is None:
        return FormalPdo()
    floor = order - precision + 1
    acc = FormalPdo({0: I.scalar} if I.scalar else {}, floor)
    d_inv = FormalPdo({-1: 1})
    for a, b in I.tensors:
        left = formal_mul(FormalPdo({0: a}), d_inv)
        acc = formal_add(acc, formal_mul(left, FormalPdo({0: b}), floor=floor))
    return acc
