"""Binary quadratic forms and Hilbert class polynomials."""

from .forms import ReducedForm, class_number, fundamental_discriminant, hurwitz_class_number, reduced_forms
from .hilbert import ClassPoly, hilbert_class_poly, reduce_mod_p
from .cache import ClassPolyCache, default_cache

__all__ = [
    'ReducedForm', 'class_number', 'fundamental_discriminant', 'hurwitz_class_number', 'reduced_forms',
    'ClassPoly', 'hilbert_class_poly', 'reduce_mod_p',
    'ClassPolyCache', 'default_cache',
]
