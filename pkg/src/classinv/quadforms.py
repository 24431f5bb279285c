"""Positive definite integral binary quadratic forms.

A form a*x^2 + b*x*y + c*y^2 is stored as the triple (a, b, c).  The
module provides Gauss reduction, enumeration of the primitive reduced
forms of a fixed negative discriminant (whose count is the class
number), and the complex root of a form in the upper half-plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

import mpmath


@dataclass(frozen=True, order=True)
class QuadForm:
    """The form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant < 0

    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    def is_reduced(self) -> bool:
        if not self.is_positive_definite():
            return False
        a, b, c = self.a, self.b, self.c
        return (-a < b <= a < c) or (0 <= b <= a == c)

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}, {self.c}]"


def reduce_form(form: QuadForm) -> QuadForm:
    """The unique reduced form equivalent to the given one."""
    if not form.is_positive_definite():
        raise ValueError("not a positive definite form")
    a, b, c = form.a, form.b, form.c
    while True:
        if b <= -a or b > a:
            # translate so that -a < b <= a
            r = (a - b) // (2 * a)
            b, c = b + 2 * a * r, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        break
    if a == c and b < 0:
        b = -b
    return QuadForm(a, b, c)


def principal_form(discriminant: int) -> QuadForm:
    """The identity class representative of the given discriminant."""
    if discriminant >= 0 or discriminant % 4 not in (0, 1):
        raise ValueError("not a negative discriminant")
    if discriminant % 4 == 0:
        return QuadForm(1, 0, -discriminant // 4)
    return QuadForm(1, 1, (1 - discriminant) // 4)


def reduced_forms(discriminant: int) -> List[QuadForm]:
    """All primitive reduced forms of the given negative discriminant.

    Sorted with the principal form first, then by (a, |b|, sign).
    """
    if discriminant >= 0 or discriminant % 4 not in (0, 1):
        raise ValueError("not a negative discriminant")
    forms: List[QuadForm] = []
    b = discriminant & 1  # b must match the parity of the discriminant
    while 3 * b * b <= -discriminant:
        m = (b * b - discriminant) // 4
        a = max(b, 1)
        while a * a <= m:
            if m % a == 0:
                c = m // a
                f = QuadForm(a, b, c)
                if f.is_primitive():
                    forms.append(f)
                    if 0 < b < a < c:
                        forms.append(QuadForm(a, -b, c))
            a += 1
        b += 2
    forms.sort(key=lambda f: (f.a, abs(f.b), -f.b))
    return forms


def class_number(discriminant: int) -> int:
    """Number of primitive reduced forms of the discriminant."""
    return len(reduced_forms(discriminant))


def form_root(form: QuadForm, dps: int | None = None) -> mpmath.mpc:
    """The root of a*t^2 + b*t + c in the upper half-plane, at dps digits."""
    if not form.is_positive_definite():
        raise ValueError("not a positive definite form")
    digits = dps if dps is not None else mpmath.mp.dps
    with mpmath.workdps(digits):
        disc = form.discriminant
        return (mpmath.mpf(-form.b) + mpmath.sqrt(mpmath.mpf(-disc)) * 1j) / (2 * form.a)
