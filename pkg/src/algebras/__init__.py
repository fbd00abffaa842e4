"""Hecke-type algebras, their normal forms and the maps between them."""

from src.algebras.bernstein import BernsteinElem, ah_bar, ah_mul
from src.algebras.canonical import KLBasisElem, kl_basis
from src.algebras.idempotent import HhatElement, h_mul, hhat_relation_suite, nf, x_power
from src.algebras.iwahori import IMElement, im_to_bernstein
from src.algebras.matrix_model import (
    EElement,
    TauPair,
    block_decompose,
    c_basis_elem,
    e_mul,
    from_matrix_model,
    make_tau,
    to_matrix_model,
    x_basis_elem,
)
from src.algebras.tensor import TensorElem, phi
from src.algebras.yokonuma import (
    YElement,
    e_idem,
    to_idempotent_presentation,
    y_mul,
    y_relation_suite,
)

__all__ = [
    "BernsteinElem",
    "ah_bar",
    "ah_mul",
    "KLBasisElem",
    "kl_basis",
    "HhatElement",
    "h_mul",
    "hhat_relation_suite",
    "nf",
    "x_power",
    "IMElement",
    "im_to_bernstein",
    "EElement",
    "TauPair",
    "block_decompose",
    "c_basis_elem",
    "e_mul",
    "from_matrix_model",
    "make_tau",
    "to_matrix_model",
    "x_basis_elem",
    "TensorElem",
    "phi",
    "YElement",
    "e_idem",
    "to_idempotent_presentation",
    "y_mul",
    "y_relation_suite",
]
