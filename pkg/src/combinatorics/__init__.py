"""Permutations, the extended affine Weyl group, residue tuples and multitableaux."""

from src.combinatorics.permutations import (
    Perm,
    perm_length,
    perm_reduced_word,
)
from src.combinatorics.affine_weyl import (
    ExtAffineElem,
    bruhat_leq,
    enumerate_ball,
    ext_length,
    ext_mul,
)
from src.combinatorics.residues import orbit_rep, young_stabilizer
from src.combinatorics.tableaux import (
    Multitableau,
    tableau_from_tuple,
    tuple_from_tableau,
)

__all__ = [
    "Perm",
    "perm_length",
    "perm_reduced_word",
    "ExtAffineElem",
    "bruhat_leq",
    "enumerate_ball",
    "ext_length",
    "ext_mul",
    "orbit_rep",
    "young_stabilizer",
    "Multitableau",
    "tableau_from_tuple",
    "tuple_from_tableau",
]
