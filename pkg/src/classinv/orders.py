"""Unit groups of the quadratic order Z[w] with w^2 = w - C, modulo m.

For squarefree n with n = 4*C - 1 the ring Z[w], w = (1 + sqrt(-n))/2,
is the maximal order of Q(sqrt(-n)).  Residues mod m are pairs
(x, y) = x + y*w with multiplication folded through the relation
w^2 = w - C.  The module enumerates the unit group of Z[w]/m, computes
its abelian invariant factors, and finds or checks generating sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .sl2words import Mat2

Element = Tuple[int, int]


def multiply(x: Element, y: Element, c_param: int, modulus: int) -> Element:
    """(x0 + x1*w)(y0 + y1*w) with w^2 = w - C, reduced mod modulus."""
    x0, x1 = x
    y0, y1 = y
    return ((x0 * y0 - c_param * x1 * y1) % modulus,
            (x0 * y1 + x1 * y0 + x1 * y1) % modulus)


def power(x: Element, k: int, c_param: int, modulus: int) -> Element:
    result: Element = (1 % modulus, 0)
    base = x
    while k:
        if k & 1:
            result = multiply(result, base, c_param, modulus)
        base = multiply(base, base, c_param, modulus)
        k >>= 1
    return result


def residue_norm(x: Element, c_param: int, modulus: int) -> int:
    """Determinant of multiplication by x, namely x0^2 + x0*x1 + C*x1^2."""
    x0, x1 = x
    return (x0 * x0 + x0 * x1 + c_param * x1 * x1) % modulus


def is_unit(x: Element, c_param: int, modulus: int) -> bool:
    return math.gcd(residue_norm(x, c_param, modulus), modulus) == 1


def generator_matrix(x: Element, c_param: int, modulus: int) -> Mat2:
    """Matrix of multiplication by x = x0 + x1*w on the basis (w, 1)."""
    x0, x1 = x
    return Mat2(x0 + x1, -c_param * x1, x1, x0, modulus)


def element_order(x: Element, c_param: int, modulus: int) -> int:
    if not is_unit(x, c_param, modulus):
        raise ValueError("not a unit")
    identity = (1 % modulus, 0)
    k = 1
    y = x
    while y != identity:
        y = multiply(y, x, c_param, modulus)
        k += 1
    return k


@dataclass(frozen=True)
class UnitGroup:
    """The unit group of Z[w]/m with its abelian invariants."""

    c_param: int
    modulus: int
    elements: Tuple[Element, ...]
    invariant_factors: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _prime_factors(n: int) -> List[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _p_partition(elements: Sequence[Element], p: int, c_param: int,
                 modulus: int) -> List[int]:
    """Exponent partition of the p-part, from counts of p^j-th roots of 1."""
    identity = (1 % modulus, 0)
    layer_sizes: List[int] = []
    prev = 1
    j = 1
    while True:
        count = sum(1 for x in elements
                    if power(x, p ** j, c_param, modulus) == identity)
        if count == prev:
            break
        ratio = count // prev
        e = round(math.log(ratio, p))
        assert p ** e == ratio, "group layer size is not a clean power"
        layer_sizes.append(e)
        prev = count
        j += 1
    # layer_sizes[j-1] counts the cyclic factors of order at least p^j;
    # its conjugate partition lists the exponents themselves.
    parts = []
    for i in range(layer_sizes[0] if layer_sizes else 0):
        parts.append(sum(1 for e in layer_sizes if e > i))
    return sorted(parts, reverse=True)


def unit_group(c_param: int, modulus: int) -> UnitGroup:
    """Enumerate (Z[w]/m)* and compute its invariant factor decomposition."""
    elements = tuple(
        (x0, x1)
        for x0 in range(modulus)
        for x1 in range(modulus)
        if is_unit((x0, x1), c_param, modulus)
    )
    partitions: Dict[int, List[int]] = {}
    for p in _prime_factors(len(elements)):
        partitions[p] = _p_partition(elements, p, c_param, modulus)
    width = max((len(v) for v in partitions.values()), default=0)
    factors = []
    for i in range(width):
        f = 1
        for p, parts in partitions.items():
            if i < len(parts):
                f *= p ** parts[i]
        factors.append(f)
    # factors are built largest first; keep that order, so each
    # entry divides the one before it
    invariants = tuple(factors)
    size = 1
    for f in invariants:
        size *= f
    if size != len(elements):
        raise ArithmeticError("invariant factors do not multiply to group order")
    return UnitGroup(c_param, modulus, elements, invariants)


def subgroup_closure(generators: Sequence[Element], c_param: int,
                     modulus: int) -> set:
    """All products of the generators, by breadth-first closure."""
    for g in generators:
        if not is_unit(g, c_param, modulus):
            raise ValueError("not a unit")
    identity = (1 % modulus, 0)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = multiply(x, g, c_param, modulus)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def verify_generators(generators: Sequence[Element], group: UnitGroup) -> bool:
    """Whether the given units generate the whole unit group."""
    closure = subgroup_closure(generators, group.c_param, group.modulus)
    return len(closure) == group.order


def find_generators(group: UnitGroup) -> Tuple[Element, ...]:
    """A small generating set, greedily extending by elements of top order."""
    by_order = sorted(
        group.elements,
        key=lambda x: (-element_order(x, group.c_param, group.modulus), x),
    )
    gens: List[Element] = []
    covered = {(1 % group.modulus, 0)}
    for x in by_order:
        if len(covered) == group.order:
            break
        if x in covered:
            continue
        gens.append(x)
        covered = subgroup_closure(gens, group.c_param, group.modulus)
    return tuple(gens)


STANDARD_GENERATORS: Dict[Tuple[int, int], Tuple[Element, ...]] = {
    # (n, modulus) -> generators of the unit group of Z[w]/modulus,
    # written as (x, y) for x + y*w
    (11, 9): ((4, 7), (5, 0)),
    (35, 9): ((4, 7), (5, 0)),
    (59, 9): ((4, 7), (5, 0)),
    (11, 8): ((0, 1), (7, 0), (7, 4)),
    (35, 8): ((6, 5), (7, 0), (7, 4)),
    (59, 8): ((0, 1), (7, 0), (7, 4)),
}
"""Curated generator sets for the discriminants used by the invariance check."""


def generators_for(n: int, modulus: int, group: UnitGroup) -> Tuple[Element, ...]:
    """Standard generators when curated, otherwise a computed set."""
    curated = STANDARD_GENERATORS.get((n, modulus))
    if curated is not None:
        return curated
    return find_generators(group)
