"""
Checking that a finite-rank ideal is an affine cell ideal.

An ideal J of an algebra with involution i is a cell ideal when i(J) = J and
there is an isomorphism J -> (M_n(B), rho) sending i(a) to E_lj(sigma(b))
whenever a goes to E_jl(b). The check works on an explicit basis of J (or a
finite part of one), an ambient generating set and the basis images.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

import numpy as np

from src.calculators.verification import VerificationResult, _record
from src.cellular.matrix_algebra import (
    GenMatrixAlgebra,
    gma_involution,
    gma_mul,
    matrices_equal,
)
from src.errors import AlgebraError

logger = logging.getLogger(__name__)


@dataclass
class CellIdealInstance:
    name: str
    basis: Sequence[tuple[Hashable, object]]          # (label, element) pairs spanning the checked part of J
    multiply: Callable[[object, object], object]
    involution: Callable[[object], object]
    coordinates: Callable[[object], dict]            # label -> coefficient; raises AlgebraError outside J
    image: Callable[[Hashable], np.ndarray]          # label -> matrix over B
    scalar_to_base: Callable[[object], object]
    algebra: GenMatrixAlgebra
    ambient: Sequence[object] = ()

    def iso(self, elem) -> np.ndarray:
        out = self.algebra.zero()
        for label, c in self.coordinates(elem).items():
            out = out + self.image(label) * self.scalar_to_base(c)
        return out


def _first_failure(items, predicate):
    for item in items:
        try:
            ok = predicate(item)
        except AlgebraError as exc:
            return item, str(exc)
        if not ok:
            return item, ""
    return None, ""


def cell_ideal_check(instance: CellIdealInstance) -> VerificationResult:
    result = VerificationResult("cellular", {"instance": instance.name, "dim": instance.algebra.dim})
    basis = list(instance.basis)

    def in_ideal(pair):
        amb, (_, b) = pair
        instance.coordinates(instance.multiply(amb, b))
        instance.coordinates(instance.multiply(b, amb))
        return True

    bad, why = _first_failure([(a, p) for a in instance.ambient for p in basis], in_ideal)
    result.checks.append(_record(
        "ideal", "J is a two-sided ideal", "A J + J A in J",
        bad is None, f"{bad[1][0]} with ambient {bad[0]}: {why}" if bad else "",
    ))

    bad, why = _first_failure(basis, lambda p: instance.coordinates(instance.involution(p[1])) is not None)
    result.checks.append(_record(
        "involution-closed", "i(J) = J", "i(a) in J for a in J",
        bad is None, f"{bad[0]}: {why}" if bad else "",
    ))

    def multiplicative(pair):
        (la, a), (lb, b) = pair
        return matrices_equal(
            instance.iso(instance.multiply(a, b)),
            gma_mul(instance.algebra, instance.image(la), instance.image(lb)),
        )

    bad, why = _first_failure([(p, q) for p in basis for q in basis], multiplicative)
    result.checks.append(_record(
        "multiplicative", "The isomorphism is multiplicative", "iso(ab) = iso(a) Psi iso(b)",
        bad is None, f"{bad[0][0]} * {bad[1][0]} {why}".strip() if bad else "",
    ))

    def compatible(pair):
        label, a = pair
        return matrices_equal(
            instance.iso(instance.involution(a)),
            gma_involution(instance.algebra, instance.image(label)),
        )

    bad, why = _first_failure(basis, compatible)
    result.checks.append(_record(
        "involution-compatible", "i corresponds to kappa",
        "a -> E_jl(b) implies i(a) -> E_lj(sigma(b))",
        bad is None, f"{bad[0]} {why}".strip() if bad else "",
    ))
    logger.info("cell ideal %s: %d/%d checks passed", instance.name, result.pass_count, len(result.checks))
    return result
