"""Brute-force supersingular j-invariants, the ground truth for the matching."""

from .fp2 import Fp2Elem, least_nonresidue
from .supersingular import SupersingularSet, expected_supersingular_counts, is_supersingular_j, supersingular_set

__all__ = [
    'Fp2Elem', 'least_nonresidue',
    'SupersingularSet', 'expected_supersingular_counts', 'is_supersingular_j', 'supersingular_set',
]
