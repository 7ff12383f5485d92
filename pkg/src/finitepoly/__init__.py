"""Polynomials over F_p."""

from .fppoly import FpPoly, JOutcome, classify_output, derivative, frobenius_part, is_square_mod_p, poly_gcd

__all__ = ['FpPoly', 'JOutcome', 'classify_output', 'derivative', 'frobenius_part', 'is_square_mod_p', 'poly_gcd']
