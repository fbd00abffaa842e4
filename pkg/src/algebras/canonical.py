"""
Canonical (Kazhdan-Lusztig) bases on finite Bruhat intervals.

c_w is the unique bar-invariant element T_w + sum_{y < w} p_{y,w} T_y with
every p_{y,w} in q^-1 Z[q^-1]. Writing bar(T_y) = sum_z r_{z,y} T_z, the
coefficient at z of bar(c_w) = c_w gives

    p_z - bar(p_z) = sum_{y != z} bar(p_y) r_{z,y},

so p_z is the negative-degree part of the right-hand side once every longer
p_y is known.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping

from src.algebras.iwahori import IMElement, im_bar, im_bar_basis
from src.coeffs.laurent import ONE, LaurentScalar
from src.combinatorics.affine_weyl import (
    ExtAffineElem,
    bruhat_lower_set,
    ext_length,
    ext_sort_key,
)
from src.errors import AlgebraError

logger = logging.getLogger(__name__)


def solve_canonical(
    top: Hashable,
    lower: Iterable[Hashable],
    length_of: Callable[[Hashable], int],
    bar_of: Callable[[Hashable], Mapping[Hashable, LaurentScalar]],
    order_key: Callable[[Hashable], object] = repr,
) -> dict[Hashable, LaurentScalar]:
    """
    Triangular solve for the canonical element over a standard basis.

    bar_of(y) must return the standard-basis expansion of bar(b_y), supported
    on elements no longer than y with leading coefficient 1 at y.
    """
    elems = sorted(set(lower) | {top}, key=lambda y: (length_of(y), order_key(y)), reverse=True)
    bars = {y: bar_of(y) for y in elems}
    coeffs: dict = {top: ONE}
    for z in elems:
        if z == top:
            continue
        rhs = LaurentScalar()
        for y, p in coeffs.items():
            r = bars[y].get(z)
            if r:
                rhs = rhs + p.bar() * r
        p_z = rhs.negative_part()
        if rhs != p_z - p_z.bar():
            raise AlgebraError(f"bar expansion is not triangular at {z}: {rhs}")
        if p_z:
            coeffs[z] = p_z
    return coeffs


@dataclass(frozen=True)
class KLBasisElem:
    top: ExtAffineElem
    expansion: IMElement

    def coefficient(self, y: ExtAffineElem) -> LaurentScalar:
        return self.expansion.coefficient(y)

    def table(self) -> list[tuple[ExtAffineElem, int, LaurentScalar]]:
        """Rows (y, l(y), p_y) ordered from the top of the interval down."""
        return [(y, ext_length(y), c) for y, c in self.expansion.sorted_terms()]


@lru_cache(maxsize=None)
def kl_basis(w: ExtAffineElem, guard: int | None = None) -> KLBasisElem:
    lower = bruhat_lower_set(w, guard)
    coeffs = solve_canonical(
        w,
        lower,
        ext_length,
        lambda y: im_bar_basis(y).terms,
        ext_sort_key,
    )
    logger.debug("c_%s has %d terms over an interval of %d elements", w, len(coeffs), len(lower))
    return KLBasisElem(w, IMElement(w.n, coeffs))


def is_canonical(elem: IMElement, top: ExtAffineElem) -> bool:
    """Bar-invariant, coefficient 1 at top, all other coefficients in q^-1 Z[q^-1]."""
    if elem.coefficient(top) != ONE:
        return False
    for y, c in elem.terms.items():
        if y != top and c.max_degree >= 0:
            return False
    return im_bar(elem) == elem
