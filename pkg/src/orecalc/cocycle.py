"""Trace cocycle on Q[x]<d, d^-1> realized on the polynomial space.

Ring elements act on Q[x] through ``alpha0``: ``a d^i`` becomes ``a D^i`` and
``b d^-1 c`` becomes ``b L c`` with ``D = d/dx`` and ``L(x^k) = x^(k+1)/(k+1)``.
``alpha0`` is not multiplicative; its defect

    T = alpha0([P, Q]) - [alpha0(P), alpha0(Q)]

has finite rank, and ``sigma0(P, Q)`` is its trace.  Since ``DL = 1`` and
``LD = 1 - h`` with ``h`` the evaluation at zero, every defect is a sum of
terms ``u h v``; it vanishes on ``x^k`` once ``k`` exceeds the number of D
letters, which is what the stability window checks.
"""

from collections import namedtuple
from dataclasses import dataclass
from math import factorial

from ._rational import ZERO, Rational
from .diffop import DiffOp
from .errors import DomainError, RankNotStabilized
from .field import Polynomial, RationalFunction
from .intop import IntegrationOp, MixedOp

__all__ = [
    "MulBy",
    "D",
    "L",
    "EndoWord",
    "CircleBasisIndex",
    "circle_element",
    "alpha0",
    "endo_apply",
    "bracket",
    "trace_defect",
    "sigma0_oracle",
    "sigma0_closed_form",
    "expand_negative_power",
    "g_image",
    "sigma1",
    "cocycle_defect",
    "cocycle_table",
]

STABILITY_WINDOW = 5


@dataclass(frozen=True)
class MulBy:
    poly: Polynomial

    def __str__(self):
        text = str(self.poly)
        return f"({text})" if self.poly.n_terms() > 1 else text


D = "D"
L = "L"


def _letter_apply(letter, p):
    if letter == D:
        return p.derivative()
    if letter == L:
        return p.integral()
    return letter.poly * p


class EndoWord:
    """A rational combination of composition words over {MulBy(p), D, L}.

    Words are written left to right as operators compose, so the last letter
    acts first.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coef in (terms or {}).items():
            if coef:
                clean[tuple(word)] = clean.get(tuple(word), ZERO) + Rational(coef)
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def word(cls, *letters, coef=1):
        return cls({tuple(letters): coef})

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, EndoWord) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"EndoWord({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, coef in self.terms.items():
            body = "*".join(str(letter) for letter in word) or "1"
            parts.append(body if coef == 1 else f"{coef}*{body}")
        return " + ".join(parts)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return EndoWord(out)

    def __neg__(self):
        return EndoWord({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Composition ``self o other``."""
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return EndoWord(out)

    def commutator(self, other):
        return self * other - other * self

    def __call__(self, p):
        return endo_apply(self, p)


def endo_apply(w, p):
    """Exact action of an EndoWord on a polynomial."""
    p = p if isinstance(p, Polynomial) else Polynomial([p])
    acc = Polynomial()
    for word, coef in w.terms.items():
        q = p
        for letter in reversed(word):
            q = _letter_apply(letter, q)
            if not q:
                break
        if q:
            acc = acc + q * coef
    return acc


CircleBasisIndex = namedtuple("CircleBasisIndex", ["m", "n"])
CircleBasisIndex.__doc__ = "Label of z^m (d/dz)^n; n >= 0."


def circle_element(value):
    """Coerce to a MixedOp with polynomial coefficients (an element of Q[x]<d, d^-1>)."""
    e = MixedOp.coerce(value)
    if not e.has_polynomial_coefficients():
        raise DomainError(f"{e} does not have polynomial coefficients")
    return e


def _poly(f):
    return f.num if isinstance(f, RationalFunction) else f


def _factor_word(poly):
    """(coefficient, letters) for multiplication by ``poly``."""
    if poly.degree <= 0:
        return poly.coeff(0), ()
    return Rational(1), (MulBy(poly),)


def alpha0(e):
    e = circle_element(e)
    terms = {}
    for i, a in enumerate(e.diff.coeffs):
        if not a:
            continue
        c, letters = _factor_word(_poly(a))
        word = letters + (D,) * i
        terms[word] = terms.get(word, ZERO) + c
    for a, b in e.int_part.tensors:
        ca, la = _factor_word(_poly(a))
        cb, lb = _factor_word(_poly(b))
        word = la + (L,) + lb
        terms[word] = terms.get(word, ZERO) + ca * cb
    return EndoWord(terms)


def bracket(P, Q):
    P, Q = MixedOp.coerce(P), MixedOp.coerce(Q)
    return P * Q - Q * P


def _x_degree(e):
    degs = [c.num.degree for c in e.diff.coeffs if c]
    degs += [a.num.degree + b.num.degree for a, b in e.int_part.tensors]
    return max(degs, default=0)


def _order_span(e):
    top = max(e.diff.degree, 0) if e.diff else 0
    bottom = -1 if e.int_part else 0
    return top - bottom


def trace_defect(P, Q):
    """The finite-rank defect ``alpha0([P,Q]) - [alpha0(P), alpha0(Q)]``."""
    return alpha0(bracket(P, Q)) - alpha0(P).commutator(alpha0(Q))


def sigma0_oracle(P, Q):
    """Exact trace of the defect, after checking it vanishes above a degree bound.

    With the bracket ``PQ - QP`` this gives ``sigma0(d, d^-1) = -1`` and more
    generally ``sigma0(a d, d^-1) = -a(0)``.  Sources that quote ``+a(0)``
    use the opposite orientation; the trace computed here is the reference.
    """
    P, Q = circle_element(P), circle_element(Q)
    T = trace_defect(P, Q)
    k0 = _x_degree(P) + _x_degree(Q) + _order_span(P) + _order_span(Q) + 4
    for k in range(k0, k0 + STABILITY_WINDOW):
        image = endo_apply(T, Polynomial.monomial(k))
        if image:
            raise RankNotStabilized(f"defect of ({P}, {Q}) does not vanish on x^{k}: {image}")
    total = ZERO
    for k in range(k0):
        total += endo_apply(T, Polynomial.monomial(k)).coeff(k)
    return total


def sigma0_closed_form(a, n, b, c):
    """sigma0(a d^n, b d^-1 c) = sum_{i<n} (-1)^(i+1) ((ac)^(i) b^(n-1-i))(0).

    Moving L past ``ac`` by parts leaves ``b (1 - LD) (ac)^(i) D^(n-1-i)``, a
    rank-one map whose trace evaluates ``(ac)^(i)`` times the derivative of
    ``b`` at zero.  Differentiating the product ``b (ac)^(i)`` instead agrees
    only when n <= 1 or b is constant with n odd.
    """
    a, b, c = (_poly(RationalFunction.coerce(v)) for v in (a, b, c))
    if n < 0:
        raise ValueError("n must be nonnegative")
    f_derivs = [a * c]
    b_derivs = [b]
    for _ in range(n - 1):
        f_derivs.append(f_derivs[-1].derivative())
        b_derivs.append(b_derivs[-1].derivative())
    total = ZERO
    for i in range(n):
        total += (-1) ** (i + 1) * f_derivs[i].coeff(0) * b_derivs[n - 1 - i].coeff(0)
    return total


def expand_negative_power(n):
    """d^n for n < 0 as sum_i (-1)^i / (i! (-n-i-1)!) x^(-n-i-1) d^-1 x^i."""
    if n >= 0:
        raise ValueError("expand_negative_power needs n < 0")
    top = -n - 1
    tensors = []
    for i in range(top + 1):
        coef = Rational((-1) ** i, factorial(i) * factorial(top - i))
        tensors.append((Polynomial.monomial(top - i, coef), Polynomial.monomial(i)))
    return IntegrationOp(0, [(RationalFunction(a), RationalFunction(b)) for a, b in tensors])


def g_image(idx, n=None):
    """Image of z^m (d/dz)^n under z -> d, d/dz -> -x."""
    m, n = (idx if n is None else (idx, n))
    if n < 0:
        raise ValueError("n must be nonnegative")
    right = MixedOp(DiffOp([Polynomial([0, -1]) ** n]))
    if m >= 0:
        left = MixedOp(DiffOp.d(m))
    else:
        left = MixedOp.from_intop(expand_negative_power(m))
    return left * right


def sigma1(idx1, idx2):
    return sigma0_oracle(g_image(*idx1), g_image(*idx2))


def cocycle_defect(P, Q, R):
    """sigma0([P,Q],R) + sigma0([Q,R],P) + sigma0([R,P],Q); zero for a cocycle."""
    return (
        sigma0_oracle(bracket(P, Q), R)
        + sigma0_oracle(bracket(Q, R), P)
        + sigma0_oracle(bracket(R, P), Q)
    )


def cocycle_table(mmax, nmax):
    """Rows (m, n, r, s, sigma1) over |m|, |r| <= mmax and 0 <= n, s <= nmax."""
    rows = []
    for m in range(-mmax, mmax + 1):
        for n in range(nmax + 1):
            for r in range(-mmax, mmax + 1):
                for s in range(nmax + 1):
                    rows.append((m, n, r, s, sigma1((m, n), (r, s))))
    return rows
