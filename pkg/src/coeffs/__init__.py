"""Exact coefficient rings."""

from src.coeffs.laurent import (
    LaurentScalar,
    ONE,
    Q,
    Q_DIFF,
    ZERO,
    laurent_bar,
    laurent_mul,
)
from src.coeffs.cyclotomic import CycScalar, cyc_primitive, cyc_reduce
from src.coeffs.multivariate import MonomialInvolution, MultiLaurent

__all__ = [
    "LaurentScalar",
    "ONE",
    "Q",
    "Q_DIFF",
    "ZERO",
    "laurent_bar",
    "laurent_mul",
    "CycScalar",
    "cyc_primitive",
    "cyc_reduce",
    "MonomialInvolution",
    "MultiLaurent",
]
