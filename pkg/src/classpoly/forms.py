"""
Reduced binary quadratic forms and class numbers of imaginary quadratic orders
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List

from sympy.ntheory.factor_ import core

from src.errors import InvalidDiscriminantError


def check_discriminant(D: int) -> int:
    """Validate D > 0 with -D a discriminant (D = 0 or 3 mod 4) and return it."""
    if not isinstance(D, int) or D <= 0 or D % 4 not in (0, 3):
        raise InvalidDiscriminantError(f"-{D} is not an imaginary quadratic discriminant (need D = 0, 3 mod 4)")
    return D


@dataclass(frozen=True)
class ReducedForm:
    """a x^2 + b x y + c y^2 with b^2 - 4ac = -D."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def reduced_forms(D: int) -> List[ReducedForm]:
    """One reduced primitive form per class of discriminant -D.

    Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    check_discriminant(D)
    forms = []
    a = 1
    while 3 * a * a <= D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            numerator = b * b + D
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append(ReducedForm(a, b, c))
        a += 1
    return forms


def class_number(D: int) -> int:
    return len(reduced_forms(D))


def hurwitz_class_number(n: int) -> Fraction:
    """H(n): classes of all orders of discriminant -n/f^2, with -3 and -4 weighted 1/3 and 1/2."""
    check_discriminant(n)
    total = Fraction(0)
    f = 1
    while f * f <= n:
        if n % (f * f) == 0:
            m = n // (f * f)
            if m % 4 in (0, 3):
                if m == 3:
                    total += Fraction(1, 3)
                elif m == 4:
                    total += Fraction(1, 2)
                else:
                    total += class_number(m)
        f += 1
    return total


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt(-d)) for a positive integer d (a negative number)."""
    if d <= 0:
        raise InvalidDiscriminantError(f"Q(sqrt(-{d})) is not imaginary quadratic")
    squarefree = int(core(d))
    return -squarefree if squarefree % 4 == 3 else -4 * squarefree
