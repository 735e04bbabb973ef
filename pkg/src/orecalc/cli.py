"""Command-line front end: ``orecalc <command> ... [--format text|json]``.

Exit codes: 0 success, 2 malformed input, 3 domain error, 4 failed internal
invariant.
"""

import argparse
import json
import sys

from . import cocycle as cc
from .diffop import DiffOp, annihilator, apply, factor_by_solution, kernel_poly_basis
from .errors import DomainError, InvariantError, ParseError
from .expr import evaluate, evaluate_intop, render, to_json_obj
from .field import RationalFunction, wronskian
from .formal import expand_fraction
from .fraction import (
    PdoFraction,
    fraction_with_poles_zeros,
    length,
    ord as frac_ord,
    pol_op,
    separate,
    zer_op,
)
from .intop import IntegrationOp

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_INVARIANT = 4


def _expr(text):
    return evaluate(text)


def _function(text):
    v = evaluate(text)
    if not isinstance(v, RationalFunction):
        raise DomainError(f"{text!r} is an operator, expected a function of x")
    return v


def _operator(text):
    v = evaluate(text)
    if isinstance(v, PdoFraction):
        raise DomainError(f"{text!r} is a fraction, expected a differential operator")
    return DiffOp.coerce(v)


def _fraction(text):
    return PdoFraction.coerce(evaluate(text))


def _function_list(text):
    return [_function(t) for t in text.split(",") if t.strip()]


def _circle(text):
    return cc.circle_element(evaluate_intop(text))


def _monomial_shape(e):
    """(a, n) if ``e`` is a d^n with n >= 0, else None."""
    if e.int_part or not e.diff:
        return None
    nz = [i for i, c in enumerate(e.diff.coeffs) if c]
    if len(nz) != 1:
        return None
    return e.diff.coeffs[nz[0]].num, nz[0]


def _tensor_shape(e):
    """(b, c) if ``e`` is b d^-1 c, else None."""
    if e.diff or len(e.int_part.tensors) != 1:
        return None
    b, c = e.int_part.tensors[0]
    return b.num, c.num


def _closed_form(P, Q):
    for left, right, sign in ((P, Q, 1), (Q, P, -1)):
        mono, tensor = _monomial_shape(left), _tensor_shape(right)
        if mono and tensor:
            (a, n), (b, c) = mono, tensor
            return sign * cc.sigma0_closed_form(a, n, b, c)
    raise DomainError("the closed form needs one argument a*d^n and the other b*d^-1*c")


def cmd_eval(args):
    return evaluate(args.expr)


def cmd_minimal(args):
    f = _fraction(args.expr)
    return {"den": f.den, "num": f.num, "length": length(f)}


def cmd_apply(args):
    return apply(_operator(args.op), _function(args.func))


def cmd_wronskian(args):
    return wronskian([_function(t) for t in args.funcs])


def cmd_annihilator(args):
    return annihilator([_function(t) for t in args.funcs], monic=args.monic)


def cmd_kernel(args):
    return [RationalFunction(p) for p in kernel_poly_basis(_operator(args.op), args.bound)]


def cmd_factor(args):
    Q, R = factor_by_solution(_operator(args.op), _function(args.solution))
    return {"left": Q, "right": R}


def cmd_poles(args):
    return pol_op(_fraction(args.expr))


def cmd_zeros(args):
    return zer_op(_fraction(args.expr))


def cmd_construct(args):
    return fraction_with_poles_zeros(
        _function_list(args.poles), _function_list(args.zeros), budget=args.budget
    )


def cmd_intop_normal(args):
    e = evaluate_intop(args.expr)
    if not e.is_intop():
        raise DomainError(f"{e} has a differential part")
    return e.as_intop()


def cmd_separate(args):
    D, I = separate(_fraction(args.expr))
    return {"diff": D, "int": I}


def cmd_expand(args):
    if args.prec < 1:
        raise DomainError("precision must be positive")
    return expand_fraction(_fraction(args.expr), args.prec)


def cmd_ord(args):
    value = frac_ord(_fraction(args.expr))
    return None if value == float("-inf") else value


def cmd_cocycle(args):
    P, Q = _circle(args.p), _circle(args.q)
    if args.closed_form:
        return _closed_form(P, Q)
    return cc.sigma0_oracle(P, Q)


def cmd_sigma1(args):
    if args.n < 0 or args.s < 0:
        raise DomainError("n and s must be nonnegative")
    return cc.sigma1((args.m, args.n), (args.r, args.s))


def cmd_cocycle_table(args):
    if args.mmax < 0 or args.nmax < 0:
        raise DomainError("--mmax and --nmax must be nonnegative")
    return cc.cocycle_table(args.mmax, args.nmax)


def _format_text(command, result):
    if command == "ord" and result is None:
        return "-inf"
    if command == "cocycle-table":
        lines = ["m\tn\tr\ts\tvalue"]
        lines += ["\t".join([str(m), str(n), str(r), str(s), render(v)]) for m, n, r, s, v in result]
        return "\n".join(lines)
    if isinstance(result, dict):
        return "\n".join(f"{k}: {_text(v)}" for k, v in result.items())
    if isinstance(result, list):
        return "\n".join(_text(v) for v in result)
    return _text(result)


def _text(v):
    if isinstance(v, int) and not isinstance(v, bool):
        return str(v)
    return render(v)


def _format_json(command, result):
    if command == "cocycle-table":
        result = [
            {"m": m, "n": n, "r": r, "s": s, "value": render(v)} for m, n, r, s, v in result
        ]
    return json.dumps(to_json_obj(result), sort_keys=True)


COMMANDS = {
    "eval": cmd_eval,
    "minimal": cmd_minimal,
    "apply": cmd_apply,
    "wronskian": cmd_wronskian,
    "annihilator": cmd_annihilator,
    "kernel": cmd_kernel,
    "factor": cmd_factor,
    "poles": cmd_poles,
    "zeros": cmd_zeros,
    "construct": cmd_construct,
    "intop-normal": cmd_intop_normal,
    "separate": cmd_separate,
    "expand": cmd_expand,
    "ord": cmd_ord,
    "cocycle": cmd_cocycle,
    "sigma1": cmd_sigma1,
    "cocycle-table": cmd_cocycle_table,
}


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="orecalc", description="Exact calculator for differential and pseudo-differential operators."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text):
        return sub.add_parser(name, parents=[fmt], help=help_text)

    add("eval", "evaluate an expression").add_argument("expr")
    add("minimal", "minimal presentation P^-1 Q and its length").add_argument("expr")
    p = add("apply", "apply an operator to a function")
    p.add_argument("op")
    p.add_argument("func")
    add("wronskian", "Wronskian determinant").add_argument("funcs", nargs="+")
    p = add("annihilator", "operator whose solution space is spanned by the inputs")
    p.add_argument("funcs", nargs="+")
    p.add_argument("--monic", action="store_true", help="normalize to a monic operator")
    p = add("kernel", "polynomial solutions up to a degree bound")
    p.add_argument("op")
    p.add_argument("--bound", type=int, required=True)
    p = add("factor", "split off the first-order right factor for a known solution")
    p.add_argument("op")
    p.add_argument("--solution", required=True)
    add("poles", "pole operator of a fraction").add_argument("expr")
    add("zeros", "zero operator of a fraction").add_argument("expr")
    p = add("construct", "fraction with prescribed pole and zero spaces")
    p.add_argument("--poles", required=True, help="comma-separated functions")
    p.add_argument("--zeros", required=True, help="comma-separated functions")
    p.add_argument("--budget", type=int, default=8)
    add("intop-normal", "canonical form of an integration operator").add_argument("expr")
    add("separate", "split a fraction into differential and integration parts").add_argument("expr")
    p = add("expand", "Laurent expansion in d^-1")
    p.add_argument("expr")
    p.add_argument("--prec", type=int, default=10)
    add("ord", "order valuation").add_argument("expr")
    p = add("cocycle", "trace cocycle sigma0(P, Q)")
    p.add_argument("p")
    p.add_argument("q")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true", help="finite-rank trace (default)")
    mode.add_argument("--closed-form", action="store_true", help="closed form for a*d^n, b*d^-1*c")
    p = add("sigma1", "cocycle on the circle basis z^m (d/dz)^n")
    for name in ("m", "n", "r", "s"):
        p.add_argument(name, type=int)
    p = add("cocycle-table", "sigma1 over a grid, as TSV")
    p.add_argument("--mmax", type=int, default=2)
    p.add_argument("--nmax", type=int, default=2)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"orecalc: syntax error: {exc.msg} at offset {exc.offset}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantError as exc:
        print(f"orecalc: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (DomainError, ZeroDivisionError, ValueError) as exc:
        print(f"orecalc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        print(_format_json(args.command, result))
    else:
        print(_format_text(args.command, result))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
