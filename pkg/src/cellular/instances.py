"""
Orbit blocks of E^_{r,n} presented as cell ideals.

For an orbit representative l0 with trivial stabilizer, W^_l0 is the
translation lattice and the orbit block is M_(n_l)(B) with B = A[X_1^+-1, ...,
X_n^+-1], Psi = I and sigma inverting the X's. With radius 0 only the finite
part is kept: B = A and sigma = id.
"""

import logging
from dataclasses import replace
from itertools import product

import numpy as np

from src.algebras.idempotent import x_power
from src.algebras.matrix_model import (
    e_involution,
    e_mul,
    to_matrix_model,
    x_basis_elem,
    x_coordinates,
)
from src.cellular.cell_ideal import CellIdealInstance
from src.cellular.matrix_algebra import GenMatrixAlgebra, identity_form, matrix_unit
from src.coeffs.multivariate import MonomialInvolution, MultiLaurent
from src.combinatorics.affine_weyl import finite, translation
from src.combinatorics.residues import (
    check_residues,
    orbit,
    orbit_rep,
    orbit_representatives,
    stabilizer_perms,
    young_stabilizer,
)
from src.errors import IndexOutOfRangeError, NotInBasisError

logger = logging.getLogger(__name__)


def finite_ambient(r: int, n: int) -> list:
    """The x-basis of the finite part of E^_{r,n}."""
    out = []
    for lam0 in orbit_representatives(r, n):
        members = orbit(lam0)
        for w in stabilizer_perms(lam0):
            for lam1, lam2 in product(members, members):
                out.append(x_basis_elem(r, lam1, lam2, finite(w)))
    return out


def orbit_cell_ideal(r: int, n: int, lam0, radius: int = 0) -> CellIdealInstance:
    lam0 = check_residues(r, lam0, n)
    if orbit_rep(lam0)[0] != lam0:
        raise NotInBasisError(f"{lam0} is not an orbit representative")
    if young_stabilizer(lam0):
        raise NotInBasisError(f"{lam0} has a nontrivial stabilizer; its block is not over a commutative ring")
    nvars = 1 + n if radius else 1
    if nvars > 3:
        raise IndexOutOfRangeError(f"n = {n} needs {nvars} base variables")
    members = orbit(lam0)
    index = {lam: k + 1 for k, lam in enumerate(members)}
    sigma = (
        MonomialInvolution.identity(1).direct_sum(MonomialInvolution.inversion(n))
        if radius else MonomialInvolution.identity(1)
    )
    algebra = GenMatrixAlgebra(len(members), nvars, identity_form(len(members), nvars), sigma)

    def coordinates(elem) -> dict:
        out = {}
        for (lam1, lam2, w), c in x_coordinates(elem).items():
            if lam1 not in index:
                raise NotInBasisError(f"block ({lam1}, {lam2}) lies outside the orbit of {lam0}")
            if not radius and any(w.trans):
                raise NotInBasisError(f"{w} lies outside the finite part")
            out[(lam1, lam2, w.trans)] = c
        return out

    def image(label) -> np.ndarray:
        lam1, lam2, mu = label
        b = MultiLaurent(nvars, {(0,) + tuple(mu): 1}) if radius else MultiLaurent.constant(nvars)
        return matrix_unit(algebra, index[lam1], index[lam2], b)

    mus = list(product(range(-radius, radius + 1), repeat=n))
    basis = [
        ((lam1, lam2, mu), x_basis_elem(r, lam1, lam2, translation(mu)))
        for lam1 in members for lam2 in members for mu in mus
    ]
    ambient = finite_ambient(r, n)
    if radius:
        ambient += [to_matrix_model(x_power(r, n, j, s)) for j in range(1, n + 1) for s in (1, -1)]
    name = f"orbit{lam0}" + (f"-radius{radius}" if radius else "-finite")
    logger.debug("cell ideal %s: %d basis elements, %d ambient", name, len(basis), len(ambient))
    return CellIdealInstance(
        name=name,
        basis=basis,
        multiply=e_mul,
        involution=e_involution,
        coordinates=coordinates,
        image=image,
        scalar_to_base=lambda c: MultiLaurent.from_laurent(c, nvars, 0),
        algebra=algebra,
        ambient=ambient,
    )


def corrupted(instance: CellIdealInstance) -> CellIdealInstance:
    """Negative control: one off-diagonal basis image is multiplied by the first base variable."""
    target = next((label for label, _ in instance.basis if label[0] != label[1]), None)
    if target is None:
        raise NotInBasisError(f"{instance.name} has no off-diagonal basis element to corrupt")
    x0 = MultiLaurent.var(instance.algebra.nvars, 0)
    original = instance.image

    def image(label):
        m = original(label)
        return m * x0 if label == target else m

    return replace(instance, name=f"{instance.name}-corrupted", image=image)
