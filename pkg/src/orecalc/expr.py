"""Expression language: parsing, evaluation and rendering.

Grammar (``*`` and ``/`` are left associative and not commutative)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := NUMBER | "x" | "d" | "(" expr ")"

``a / b`` means ``a * b^-1``.  Evaluation lands in the smallest level of the
tower Q(x) < Q(x)<d> < Q(x)(d) that holds the result.  The integration view
(:func:`evaluate_intop`) reads the same syntax in the ring generated by Q(x),
d and d^-1.
"""

import json
from dataclasses import dataclass

from ._rational import Rational
from .diffop import DiffOp
from .errors import DomainError, ParseError
from .field import X, Polynomial, RationalFunction
from .formal import FormalPdo
from .fraction import PdoFraction, frac_inv
from .intop import IntegrationOp, MixedOp

__all__ = [
    "Num",
    "Var",
    "Neg",
    "BinOp",
    "Pow",
    "parse",
    "evaluate",
    "evaluate_intop",
    "render",
    "to_json_obj",
    "MAX_DEPTH",
    "MAX_EXPONENT",
]

MAX_DEPTH = 100
MAX_EXPONENT = 256


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_PUNCT = set("+-*/^()")


def _tokenize(text):
    """List of (kind, value, offset); kinds are 'num', 'name', a punctuation char, 'end'."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("non-ASCII byte in expression", exc.start) from None
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
        elif ch.isascii() and ch.isdigit():
            j = i
            while j < n and text[j].isascii() and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
        elif ch in ("x", "d"):
            if i + 1 < n and (text[i + 1].isascii() and (text[i + 1].isalnum() or text[i + 1] == "_")):
                raise ParseError(f"unknown name starting with {ch!r}", i)
            tokens.append(("name", ch, i))
            i += 1
        elif ch in _PUNCT:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.depth = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {_describe(tok)}", tok[2])
        self.pos += 1
        return tok

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("expression nested too deeply", self.peek()[2])

    def expr(self):
        self.enter()
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        self.depth -= 1
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            self.enter()
            node = Neg(self.unary())
            self.depth -= 1
            return node
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take()
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        tok = self.peek()
        if tok[0] != "num":
            raise ParseError(f"exponent must be an integer, found {_describe(tok)}", tok[2])
        self.take()
        return Pow(base, sign * tok[1])

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "num":
            self.take()
            return Num(tok[1])
        if kind == "name":
            self.take()
            return Var(tok[1])
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"expected a number, x, d or '(', found {_describe(tok)}", tok[2])


def _describe(tok):
    if tok[0] == "end":
        return "end of input"
    return repr(str(tok[1]))


def parse(text):
    """Parse ``text`` (str or bytes) into an AST; raises ParseError with an offset."""
    p = _Parser(text)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {_describe(tok)}", tok[2])
    return node


# Tower evaluation ---------------------------------------------------------

def _level(v):
    if isinstance(v, RationalFunction):
        return 0
    if isinstance(v, DiffOp):
        return 1
    return 2


def _promote(v, level):
    if level >= 1 and isinstance(v, RationalFunction):
        v = DiffOp([v])
    if level == 2 and isinstance(v, DiffOp):
        v = PdoFraction.coerce(v)
    return v


def _demote(v):
    if isinstance(v, PdoFraction) and v.is_diffop():
        v = v.num
    if isinstance(v, DiffOp) and v.degree <= 0:
        v = v.coeff(0)
    return v


def _binary(op, a, b):
    level = max(_level(a), _level(b))
    a, b = _promote(a, level), _promote(b, level)
    if op == "+":
        return _demote(a + b)
    if op == "-":
        return _demote(a - b)
    return _demote(a * b)


def _inverse(v):
    v = _demote(v)
    if isinstance(v, RationalFunction):
        return v.inverse()
    return _demote(frac_inv(PdoFraction.coerce(v)))


def _power(v, n, one, mul, inverse):
    if abs(n) > MAX_EXPONENT:
        raise DomainError(f"exponent {n} exceeds the limit {MAX_EXPONENT}")
    if n < 0:
        v, n = inverse(v), -n
    result = one
    while n:
        if n & 1:
            result = mul(result, v)
        n >>= 1
        if n:
            v = mul(v, v)
    return result


def _fold(node, leaf, neg, binop, power):
    """Post-order evaluation with an explicit stack (long operator chains are shallow here)."""
    stack = [(node, False)]
    values = []
    while stack:
        n, ready = stack.pop()
        if isinstance(n, (Num, Var)):
            values.append(leaf(n))
        elif not ready:
            stack.append((n, True))
            if isinstance(n, BinOp):
                stack.append((n.right, False))
                stack.append((n.left, False))
            elif isinstance(n, Neg):
                stack.append((n.arg, False))
            elif isinstance(n, Pow):
                stack.append((n.base, False))
            else:
                raise TypeError(f"not an expression node: {n!r}")
        elif isinstance(n, BinOp):
            b = values.pop()
            a = values.pop()
            values.append(binop(n.op, a, b))
        elif isinstance(n, Neg):
            values.append(neg(values.pop()))
        else:
            values.append(power(values.pop(), n.exp))
    return values.pop()


def _tower_leaf(n):
    if isinstance(n, Num):
        return RationalFunction(n.value)
    return X if n.name == "x" else DiffOp.d(1)


def _tower_binop(op, a, b):
    if op == "/":
        return _binary("*", a, _inverse(b))
    return _binary(op, a, b)


def _tower_power(v, n):
    return _power(v, n, RationalFunction(1), lambda a, b: _binary("*", a, b), _inverse)


def evaluate(node):
    """Value of an AST (or expression text) in Q(x), Q(x)<d> or Q(x)(d)."""
    if isinstance(node, (str, bytes, bytearray)):
        node = parse(node)
    return _fold(node, _tower_leaf, lambda v: -v, _tower_binop, _tower_power)


def _mixed_inverse(v):
    if not v.int_part and v.diff.degree == 0:
        return MixedOp(DiffOp([v.diff.coeff(0).inverse()]))
    if not v.int_part and v.diff.degree > 0 and v.diff == DiffOp.d(v.diff.degree):
        return MixedOp.d(-v.diff.degree)
    if not v:
        raise DomainError("inverse of zero")
    raise DomainError(f"{v} has no inverse among integration operators")


def _mixed_leaf(n):
    if isinstance(n, Num):
        return MixedOp(DiffOp([n.value]))
    return MixedOp(DiffOp([X])) if n.name == "x" else MixedOp.d(1)


def _mixed_binop(op, a, b):
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "/":
        return a * _mixed_inverse(b)
    return a * b


def _mixed_power(v, n):
    return _power(v, n, MixedOp(DiffOp([1])), lambda a, b: a * b, _mixed_inverse)


def evaluate_intop(node):
    """Value of an AST in the ring generated by Q(x), d and d^-1, as a MixedOp.

    Only nonzero functions and pure powers of d may be inverted here.
    """
    if isinstance(node, (str, bytes, bytearray)):
        node = parse(node)
    return _fold(node, _mixed_leaf, lambda v: -v, _mixed_binop, _mixed_power)


# Rendering ----------------------------------------------------------------

def _scalar_text(c):
    c = Rational(c)
    if c.denominator == 1:
        return str(int(c.numerator))
    return f"{int(c.numerator)}/{int(c.denominator)}"


def to_json_obj(v):
    """JSON-ready form of a value."""
    if isinstance(v, PdoFraction):
        return {"den": str(v.den), "num": str(v.num)}
    if isinstance(v, DiffOp):
        return {"operator": str(v), "coeffs": [str(c) for c in v.coeffs]}
    if isinstance(v, RationalFunction):
        return {"function": str(v), "num": str(v.num), "den": str(v.den)}
    if isinstance(v, Polynomial):
        return {"function": str(v), "num": str(v), "den": "1"}
    if isinstance(v, IntegrationOp):
        return {
            "intop": str(v),
            "scalar": str(v.scalar),
            "tensors": [[str(a), str(b)] for a, b in v.tensors],
        }
    if isinstance(v, MixedOp):
        return {"element": str(v), "diff": str(v.diff), "int": str(v.int_part)}
    if isinstance(v, FormalPdo):
        return v.to_json()
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return None if v != v or abs(v) == float("inf") else v
    if isinstance(v, dict):
        return {k: _nested_json(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_nested_json(x) for x in v]
    try:
        return _scalar_text(v)
    except TypeError:
        raise TypeError(f"cannot render {type(v).__name__}") from None


def _nested_json(v):
    # members of composite results are plain canonical strings
    if isinstance(v, (RationalFunction, Polynomial, DiffOp, PdoFraction, IntegrationOp, MixedOp)):
        return str(v)
    return to_json_obj(v)


def render(v, fmt="text"):
    """Canonical text or JSON rendering; text output parses back to ``v``."""
    if fmt == "json":
        return json.dumps(to_json_obj(v), sort_keys=True)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(v, (RationalFunction, Polynomial, DiffOp, PdoFraction, IntegrationOp, MixedOp, FormalPdo)):
        return str(v)
    return _scalar_text(v)
