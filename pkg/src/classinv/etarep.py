"""Exact action of modular words and Galois twists on level-72 eta quotients.

The six functions spanned here are, with e(x) = eta(x) and all divided
by e(tau)^2:

    index 0:  e(3*tau)   * e(tau/3)
    index 1:  e(3*tau)   * e(tau/3 + 1/3)
    index 2:  e(3*tau)   * e(tau/3 + 2/3)
    index 3:  e(tau/3)   * e(tau/3 + 2/3)
    index 4:  e(tau/3)   * e(tau/3 + 1/3)
    index 5:  e(tau/3+2/3) * e(tau/3 + 1/3)

The generators S: tau -> -1/tau and T: tau -> tau + 1 permute this
six-dimensional space up to 72nd roots of unity, as do the Galois
automorphisms z -> z^d of the coefficient field.  Every matrix here is
monomial (one nonzero entry per row and column), so products and
inverses stay exact and cheap.

A matrix A gives the substitution rule F(g(tau)) = (A F)(tau) on the
column vector F of the six functions.  A function written as a
coefficient vector a (meaning sum a_i F_i) therefore transforms by the
transpose: precomposing with a word g_1 ... g_k sends a to
(A_{g_1} ... A_{g_k})^t a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .cyclotomic import SQRT3, CycNum
from .orders import generator_matrix, generators_for, unit_group
from .quadforms import QuadForm
from .sl2words import Mat2, Word, crt_combine, decompose, form_matrix, lift_word, split_det

SIZE = 6

Vector = Tuple[CycNum, ...]

_ZERO = CycNum.zero()
_ONE = CycNum.one()


@dataclass(frozen=True)
class RepMatrix:
    """A 6x6 matrix over the cyclotomic field."""

    rows: Tuple[Tuple[CycNum, ...], ...]

    @staticmethod
    def identity() -> "RepMatrix":
        return RepMatrix(
            tuple(
                tuple(_ONE if i == j else _ZERO for j in range(SIZE))
                for i in range(SIZE)
            )
        )

    @staticmethod
    def from_entries(entries: Dict[Tuple[int, int], CycNum]) -> "RepMatrix":
        return RepMatrix(
            tuple(
                tuple(entries.get((i, j), _ZERO) for j in range(SIZE))
                for i in range(SIZE)
            )
        )

    def __mul__(self, other: "RepMatrix") -> "RepMatrix":
        rows = []
        for i in range(SIZE):
            row = []
            for j in range(SIZE):
                acc = _ZERO
                for k in range(SIZE):
                    left = self.rows[i][k]
                    if left and other.rows[k][j]:
                        acc = acc + left * other.rows[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return RepMatrix(tuple(rows))

    def apply(self, vec: Vector) -> Vector:
        """Matrix times column vector."""
        return tuple(
            sum(
                (self.rows[i][j] * vec[j] for j in range(SIZE) if self.rows[i][j]),
                _ZERO,
            )
            for i in range(SIZE)
        )

    def act_on_coefficients(self, vec: Vector) -> Vector:
        """Transpose times column vector; see the module docstring."""
        return tuple(
            sum(
                (self.rows[j][i] * vec[j] for j in range(SIZE) if self.rows[j][i]),
                _ZERO,
            )
            for i in range(SIZE)
        )

    def galois(self, d: int) -> "RepMatrix":
        return RepMatrix(
            tuple(tuple(x.galois(d) for x in row) for row in self.rows)
        )

    def transpose(self) -> "RepMatrix":
        return RepMatrix(
            tuple(tuple(self.rows[j][i] for j in range(SIZE)) for i in range(SIZE))
        )

    def is_monomial(self) -> bool:
        col_seen = [False] * SIZE
        for row in self.rows:
            hits = [j for j, x in enumerate(row) if x]
            if len(hits) != 1 or col_seen[hits[0]]:
                return False
            col_seen[hits[0]] = True
        return True

    def monomial_inverse(self) -> "RepMatrix":
        """Inverse of a monomial matrix: transpose with inverted entries."""
        if not self.is_monomial():
            raise ValueError("matrix is not monomial")
        entries: Dict[Tuple[int, int], CycNum] = {}
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x:
                    entries[(j, i)] = x.inverse()
        return RepMatrix.from_entries(entries)

    def nonzero_entries(self) -> Dict[Tuple[int, int], CycNum]:
        return {
            (i, j): x
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
            if x
        }


def unit_vector(index: int, scale: CycNum = _ONE) -> Vector:
    return tuple(scale if i == index else _ZERO for i in range(SIZE))


def rep_t() -> RepMatrix:
    """Action of T: tau -> tau + 1.  Order 18."""
    z = CycNum.zeta_pow
    return RepMatrix.from_entries(
        {
            (0, 1): z(3),
            (1, 2): z(3),
            (2, 0): z(6),
            (3, 4): z(-3),
            (4, 5): z(-6),
            (5, 3): z(-3),
        }
    )


def rep_s() -> RepMatrix:
    """Action of S: tau -> -1/tau.  An involution."""
    z = CycNum.zeta_pow
    third = CycNum.from_rational(1) / 3
    return RepMatrix.from_entries(
        {
            (0, 0): _ONE,
            (1, 3): (z(3) - z(27)) * third,
            (2, 4): (z(9) - z(33)) * third,
            (3, 1): z(9) - z(33),
            (4, 2): z(3) - z(27),
            (5, 5): _ONE,
        }
    )


def rep_sigma(d: int) -> RepMatrix:
    """Action of the coefficient automorphism z -> z^d on the six functions.

    The two inner eta factors with shifted arguments are permuted
    according to d mod 3 and pick up explicit root-of-unity factors from
    their fractional exponents.
    """
    if math.gcd(d, 72) != 1:
        raise ValueError("not a Galois element")
    z = CycNum.zeta_pow
    if d % 3 == 1:
        return RepMatrix.from_entries(
            {
                (0, 0): _ONE,
                (1, 1): z(d - 1),
                (2, 2): z(2 * d - 2),
                (3, 3): z(2 * d - 2),
                (4, 4): z(d - 1),
                (5, 5): z(3 * d - 3),
            }
        )
    return RepMatrix.from_entries(
        {
            (0, 0): _ONE,
            (1, 2): z(d - 2),
            (2, 1): z(2 * d - 1),
            (3, 4): z(2 * d - 1),
            (4, 3): z(d - 2),
            (5, 5): z(3 * d - 3),
        }
    )


_T_POWERS: Optional[List[RepMatrix]] = None


def _t_power(exponent: int) -> RepMatrix:
    """Cached powers of the T matrix, which has order 18."""
    global _T_POWERS
    if _T_POWERS is None:
        powers = [RepMatrix.identity()]
        t = rep_t()
        for _ in range(17):
            powers.append(powers[-1] * t)
        _T_POWERS = powers
    return _T_POWERS[exponent % 18]


def word_action(word: Word) -> RepMatrix:
    """Product of generator matrices along the word, leftmost first."""
    result = RepMatrix.identity()
    for gen, exponent in word:
        if gen == "S":
            if exponent != 1:
                raise ValueError("S tokens must have exponent 1")
            result = result * rep_s()
        elif gen == "T":
            result = result * _t_power(exponent)
        else:
            raise ValueError(f"unknown generator {gen!r}")
    return result


def full_action(matrix: Mat2) -> Tuple[RepMatrix, int]:
    """Substitution matrix and determinant for a GL2(Z/72) matrix.

    The unimodular part is decomposed separately mod 8 and mod 9, each
    word lifted to an integer word trivial modulo the other factor, and
    the concatenation fed through the representation.  The result is
    returned together with the determinant d, which enters separately
    through the coefficient automorphism z -> z^d.
    """
    if matrix.mod != 72:
        matrix = matrix.to_mod(72)
    unimodular, det = split_det(matrix)
    word8 = lift_word(decompose(unimodular.to_mod(8), 8), 8)
    word9 = lift_word(decompose(unimodular.to_mod(9), 9), 9)
    return word_action(word8 + word9), det


def dual_action(rep: RepMatrix, det: int, coeffs: Vector) -> Vector:
    """Coefficient-vector form of the action used by the invariance check.

    The substitution matrix multiplies the vector directly, its entries
    first twisted by the representative of +-d that is 1 mod 3 (the one
    fixing the cube roots of unity); the determinant then contributes
    its permutation matrix transposed.  Stabilizer units of the order
    must fix the vector of sqrt(3) * F_2 under this map.
    """
    exponent = det % 72 if det % 3 == 1 else (-det) % 72
    moved = rep.apply(coeffs)
    twisted = tuple(x.galois(exponent) for x in moved)
    return rep_sigma(det).act_on_coefficients(twisted)


def conjugate_action(rep: RepMatrix, det: int, coeffs: Vector) -> Vector:
    """Coefficient vector of the Galois conjugate of a function.

    A function written as a coefficient vector a is first precomposed
    with the unimodular substitution (transpose of the matrix, per the
    module docstring), then every coefficient of the result is twisted
    by z -> z^d, including the root-of-unity factors the twist induces
    on the basis functions themselves.
    """
    pulled = rep.act_on_coefficients(coeffs)
    twisted = tuple(x.galois(det) for x in pulled)
    return rep_sigma(det).act_on_coefficients(twisted)


def form_action(form: QuadForm) -> Tuple[RepMatrix, int]:
    """The (matrix, determinant) pair attached to a quadratic form class."""
    combined = crt_combine(form_matrix(form, 8), form_matrix(form, 9))
    return full_action(combined)


@dataclass(frozen=True)
class InvarianceResult:
    """Outcome of one generator's invariance test."""

    modulus: int
    generator: Tuple[int, int]
    matrix: Mat2
    det: int
    invariant: bool


def invariance_check(n: int) -> List[InvarianceResult]:
    """Check that sqrt(3) * F_2 is fixed by the stabilizer unit groups.

    For each generator g of the unit groups of Z[w]/8 and Z[w]/9, the
    multiplication matrix of g (completed by the identity modulo the
    complementary factor) must fix the coefficient vector of
    sqrt(3) * F_2 under the dual action.
    """
    if n % 24 != 11:
        raise ValueError("n must be ≡ 11 mod 24")
    c_param = (n + 1) // 4
    target = unit_vector(2, SQRT3)
    results: List[InvarianceResult] = []
    for modulus in (8, 9):
        group = unit_group(c_param, modulus)
        for gen in generators_for(n, modulus, group):
            local = generator_matrix(gen, c_param, modulus)
            if modulus == 8:
                combined = crt_combine(local, Mat2.identity(9))
            else:
                combined = crt_combine(Mat2.identity(8), local)
            rep, det = full_action(combined)
            moved = dual_action(rep, det, target)
            results.append(
                InvarianceResult(
                    modulus=modulus,
                    generator=gen,
                    matrix=combined,
                    det=det,
                    invariant=(moved == target),
                )
            )
    return results
