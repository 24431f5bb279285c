"""Exact arithmetic in the degree-24 cyclotomic field Q(z), z = exp(2*pi*i/72).

Elements carry rational coordinates on the power basis z^0, ..., z^23.
The minimal polynomial of z over Q is x^24 - x^12 + 1, which yields the
rewrite rule

    z^k = z^(k-12) - z^(k-24)    for k >= 24

used to fold arbitrary powers back onto the basis.  All arithmetic is
exact; numeric embeddings into the complex plane go through mpmath at a
caller-chosen working precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import mpmath

DEGREE = 24
"""Dimension of the field over Q."""

ORDER = 72
"""Multiplicative order of the generating root of unity."""

Rational = Union[int, Fraction]
Coeffs = Tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)

MINIMAL_POLY: Coeffs = tuple(
    _ONE if k in (0, 24) else (-_ONE if k == 12 else _ZERO) for k in range(25)
)
"""Ascending coefficients of x^24 - x^12 + 1."""


def _build_power_table() -> Tuple[Coeffs, ...]:
    """Coordinates of z^k on the power basis for k = 0..71."""
    table: List[Coeffs] = []
    for k in range(ORDER):
        if k < DEGREE:
            table.append(tuple(_ONE if j == k else _ZERO for j in range(DEGREE)))
        else:
            # z^k = z^(k-12) - z^(k-24)
            table.append(tuple(x - y for x, y in zip(table[k - 12], table[k - 24])))
    return tuple(table)


_POWER: Tuple[Coeffs, ...] = _build_power_table()

# Sparse form of _POWER rows for products: degree i+j <= 46 < 72.
_FOLD: Tuple[Tuple[Tuple[int, Fraction], ...], ...] = tuple(
    tuple((j, c) for j, c in enumerate(row) if c) for row in _POWER[: 2 * DEGREE - 1]
)


def _poly_trim(p: List[Fraction]) -> List[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [_ZERO] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    """Quotient and remainder of polynomials in ascending-coefficient form."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) <= db:
        return [], _poly_trim(a)
    q = [_ZERO] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        f = a[k + db] / lead
        q[k] = f
        if f:
            for j, c in enumerate(b):
                a[k + j] -= f * c
    return _poly_trim(q), _poly_trim(a[:db])


def _inverse_coords(coeffs: Coeffs) -> Coeffs:
    """Coordinates of the field inverse, by extended Euclid against x^24 - x^12 + 1."""
    r0: List[Fraction] = list(MINIMAL_POLY)
    r1 = _poly_trim(list(coeffs))
    if not r1:
        raise ZeroDivisionError("division by zero in cyclotomic field")
    s0: List[Fraction] = []
    s1: List[Fraction] = [_ONE]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r1 is a nonzero constant c with s1 * f == c modulo the minimal polynomial.
    c = r1[0]
    _, rem = _poly_divmod([x / c for x in s1], list(MINIMAL_POLY))
    rem += [_ZERO] * (DEGREE - len(rem))
    return tuple(rem)


@dataclass(frozen=True)
class CycNum:
    """An element of Q(z) on the basis z^0, ..., z^23."""

    coeffs: Coeffs

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "CycNum":
        return _CYC_ZERO

    @staticmethod
    def one() -> "CycNum":
        return _CYC_ONE

    @staticmethod
    def from_rational(value: Rational) -> "CycNum":
        v = Fraction(value)
        return CycNum((v,) + (_ZERO,) * (DEGREE - 1))

    @staticmethod
    def zeta_pow(k: int) -> "CycNum":
        """The basis root of unity raised to an arbitrary integer power."""
        return CycNum(_POWER[k % ORDER])

    @staticmethod
    def from_zeta_terms(terms: Iterable[Tuple[int, Rational]]) -> "CycNum":
        """Sum of coef * z^power over (power, coef) pairs."""
        acc = [_ZERO] * DEGREE
        for power, coef in terms:
            c = Fraction(coef)
            if not c:
                continue
            for j, s in enumerate(_POWER[power % ORDER]):
                if s:
                    acc[j] += c * s
        return CycNum(tuple(acc))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coeffs[0]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "CycNum") -> "CycNum":
        return CycNum(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycNum") -> "CycNum":
        return CycNum(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycNum":
        return CycNum(tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union["CycNum", Rational]) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return CycNum(tuple(a * c for a in self.coeffs))
        acc = [_ZERO] * DEGREE
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                ab = a * b
                for k, s in _FOLD[i + j]:
                    acc[k] += ab * s
        return CycNum(tuple(acc))

    def __rmul__(self, other: Rational) -> "CycNum":
        return self.__mul__(other)

    def inverse(self) -> "CycNum":
        return CycNum(_inverse_coords(self.coeffs))

    def __truediv__(self, other: Union["CycNum", Rational]) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return CycNum(tuple(a / c for a in self.coeffs))
        return self * other.inverse()

    def __pow__(self, n: int) -> "CycNum":
        if n < 0:
            return self.inverse() ** (-n)
        result = _CYC_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field automorphisms -------------------------------------------

    def galois(self, d: int) -> "CycNum":
        """Image under the automorphism sending z to z^d, for d coprime to 72."""
        if math.gcd(d, ORDER) != 1:
            raise ValueError("not a Galois element")
        acc = [_ZERO] * DEGREE
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            for k, s in enumerate(_POWER[(j * d) % ORDER]):
                if s:
                    acc[k] += c * s
        return CycNum(tuple(acc))

    def conjugate(self) -> "CycNum":
        return self.galois(ORDER - 1)

    # -- numerics -------------------------------------------------------

    def embed(self, dps: int | None = None) -> mpmath.mpc:
        """Complex value at the principal root exp(2*pi*i/72), at dps digits."""
        digits = dps if dps is not None else mpmath.mp.dps
        roots = _embedded_roots(digits)
        with mpmath.workdps(digits):
            total = mpmath.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * roots[j]
            return total

    # -- formatting -----------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                power = "z" if j == 1 else f"z^{j}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        out = []
        for idx, (neg, body) in enumerate(terms):
            if idx == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"CycNum({self})"


_CYC_ZERO = CycNum((_ZERO,) * DEGREE)
_CYC_ONE = CycNum((_ONE,) + (_ZERO,) * (DEGREE - 1))

_ROOT_CACHE: Dict[int, Tuple[mpmath.mpc, ...]] = {}


def _embedded_roots(dps: int) -> Tuple[mpmath.mpc, ...]:
    cached = _ROOT_CACHE.get(dps)
    if cached is None:
        with mpmath.workdps(dps):
            cached = tuple(mpmath.expjpi(mpmath.mpf(k) / 36) for k in range(DEGREE))
        _ROOT_CACHE[dps] = cached
    return cached


ZERO = _CYC_ZERO
ONE = _CYC_ONE

SQRT3 = CycNum.zeta_pow(6) - CycNum.zeta_pow(30)
"""sqrt(3) written inside the field: z^6 - z^30."""

IMAG_UNIT = CycNum.zeta_pow(18)
"""The imaginary unit i = z^18."""

ZETA3 = CycNum.zeta_pow(24)
"""A primitive cube root of unity."""

GALOIS_EXPONENTS = tuple(d for d in range(1, ORDER) if math.gcd(d, ORDER) == 1)
"""All 24 exponents d with gcd(d, 72) = 1, indexing the Galois group."""
