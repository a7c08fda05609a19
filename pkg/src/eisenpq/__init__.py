"""Eisenstein elements of weight two for Gamma0(pq) via Manin symbols."""

from .arith import dedekind, dedekind_sum, dedekind_sum_fast
from .boundary import (CuspClass, CuspDivisor, a0_table, boundary_even, boundary_symbol_sum,
                       cusp_class, divisor_of_eisenstein, pinned_sigma, ramification)
from .eisenstein import (SymbolSum, classify, coefficient, eisenstein_element,
                         even_eisenstein_coefficients, f_value, f_value_bernoulli)
from .homology import build_presentation, reduce, winding_element
from .mat2 import Mat2, build_exceptional_pair, h_conjugate, membership
from .p1 import Level, P1Point, act, coset_reps_gamma0, coset_reps_gamma2cap, enumerate_points, normalize
from .periods import p_value, p_value_closed, period

__version__ = "0.1.0"

__all__ = [
    "dedekind", "dedekind_sum", "dedekind_sum_fast",
    "CuspClass", "CuspDivisor", "a0_table", "boundary_even", "boundary_symbol_sum", "cusp_class",
    "divisor_of_eisenstein", "pinned_sigma", "ramification",
    "SymbolSum", "classify", "coefficient", "eisenstein_element", "even_eisenstein_coefficients",
    "f_value", "f_value_bernoulli",
    "build_presentation", "reduce", "winding_element",
    "Mat2", "build_exceptional_pair", "h_conjugate", "membership",
    "Level", "P1Point", "act", "coset_reps_gamma0", "coset_reps_gamma2cap", "enumerate_points", "normalize",
    "p_value", "p_value_closed", "period",
]
