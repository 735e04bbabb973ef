"""Exact arithmetic for differential operators over Q(x), their left fractions,
integration operators, formal pseudo-differential series and the trace
cocycle on Q[x]<d, d^-1>.
"""

from ._rational import RATIONAL_BACKEND, Rational
from .cocycle import (
    CircleBasisIndex,
    EndoWord,
    alpha0,
    bracket,
    cocycle_defect,
    endo_apply,
    expand_negative_power,
    g_image,
    sigma0_closed_form,
    sigma0_oracle,
    sigma1,
)
from .diffop import (
    DiffOp,
    annihilator,
    apply,
    factor_by_solution,
    gcld,
    gcrd,
    kernel_poly_basis,
    lclm,
    left_divide,
    right_divide,
)
from .errors import DomainError, InvariantError, OrecalcError, ParseError
from .expr import evaluate, evaluate_intop, parse, render
from .field import X, Polynomial, RationalFunction, antiderivative, wronskian
from .formal import FormalPdo, expand_fraction, expand_intop, formal_inv, formal_mul
from .fraction import PdoFraction, frac_make, fraction_with_poles_zeros, separate
from .intop import IntegrationOp, MixedOp, first_order_inverse, intop_to_fraction
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "RATIONAL_BACKEND",
    "KERNEL_BACKEND",
    "Rational",
    "X",
    "Polynomial",
    "RationalFunction",
    "antiderivative",
    "wronskian",
    "DiffOp",
    "annihilator",
    "apply",
    "factor_by_solution",
    "gcld",
    "gcrd",
    "kernel_poly_basis",
    "lclm",
    "left_divide",
    "right_divide",
    "PdoFraction",
    "frac_make",
    "fraction_with_poles_zeros",
    "separate",
    "IntegrationOp",
    "MixedOp",
    "first_order_inverse",
    "intop_to_fraction",
    "FormalPdo",
    "expand_fraction",
    "expand_intop",
    "formal_inv",
    "formal_mul",
    "CircleBasisIndex",
    "EndoWord",
    "alpha0",
    "bracket",
    "cocycle_defect",
    "endo_apply",
    "expand_negative_power",
    "g_image",
    "sigma0_closed_form",
    "sigma0_oracle",
    "sigma1",
    "parse",
    "evaluate",
    "evaluate_intop",
    "render",
    "OrecalcError",
    "ParseError",
    "DomainError",
    "InvariantError",
]
