"""Quaternion algebras ramified at p and infinity."""

from .quaternion import Quat, QuatAlgebra, hilbert_symbol, mul, ramified_places, ramified_primes, trace_pairing

__all__ = ['Quat', 'QuatAlgebra', 'hilbert_symbol', 'mul', 'ramified_places', 'ramified_primes', 'trace_pairing']
