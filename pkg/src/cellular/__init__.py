"""Generalized matrix algebras, cell chains and cell ideal checks."""

from src.cellular.cell_ideal import CellIdealInstance, cell_ideal_check
from src.cellular.chains import ChainLayer, ChainSpec, chain_tensor
from src.cellular.instances import corrupted, orbit_cell_ideal
from src.cellular.matrix_algebra import (
    GenMatrixAlgebra,
    gma_involution,
    gma_mul,
    gma_tensor,
    identity_form,
    matrices_equal,
    matrix_unit,
)
from src.cellular.suite import cellular_suite

__all__ = [
    "CellIdealInstance",
    "cell_ideal_check",
    "ChainLayer",
    "ChainSpec",
    "chain_tensor",
    "corrupted",
    "orbit_cell_ideal",
    "GenMatrixAlgebra",
    "gma_involution",
    "gma_mul",
    "gma_tensor",
    "identity_form",
    "matrices_equal",
    "matrix_unit",
    "cellular_suite",
]
