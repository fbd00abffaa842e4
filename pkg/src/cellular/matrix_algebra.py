"""
Generalized matrix algebras (M_n(B), rho).

As a module this is M_n(B); the product is x . y = x Psi y where Psi is the
matrix of the bilinear form rho. When sigma(Psi)^T = Psi the map
kappa(E_jl(b)) = E_lj(sigma(b)) is an involution (an anti-automorphism with
kappa^2 = id). Matrices are numpy object arrays with MultiLaurent entries.
"""

from dataclasses import dataclass

import numpy as np

from src.coeffs.multivariate import MonomialInvolution, MultiLaurent
from src.errors import CompatibilityError, IndexOutOfRangeError, ParameterMismatchError


def _apply(fn, x: np.ndarray) -> np.ndarray:
    out = np.empty(x.shape, dtype=object)
    for idx in np.ndindex(x.shape):
        out[idx] = fn(x[idx])
    return out


def matrices_equal(x: np.ndarray, y: np.ndarray) -> bool:
    return x.shape == y.shape and all(x[idx] == y[idx] for idx in np.ndindex(x.shape))


def is_compatible(psi: np.ndarray, sigma: MonomialInvolution) -> bool:
    """sigma(rho(v1, v2)) = rho(v2, v1), i.e. sigma(Psi)^T = Psi."""
    return matrices_equal(_apply(sigma, psi).T, psi)


@dataclass(frozen=True, eq=False)
class GenMatrixAlgebra:
    dim: int
    nvars: int
    psi: np.ndarray
    sigma: MonomialInvolution
    check: bool = True

    def __post_init__(self):
        if self.psi.shape != (self.dim, self.dim):
            raise ParameterMismatchError(f"Psi has shape {self.psi.shape}, expected {(self.dim, self.dim)}")
        if self.sigma.nvars != self.nvars:
            raise ParameterMismatchError("sigma acts on a ring with a different number of variables")
        if self.check and not is_compatible(self.psi, self.sigma):
            raise CompatibilityError("sigma(Psi)^T != Psi: kappa would not be an involution")

    @property
    def compatible(self) -> bool:
        return is_compatible(self.psi, self.sigma)

    def zero(self) -> np.ndarray:
        return gma_zero(self.dim, self.nvars)

    def scalar(self, c) -> MultiLaurent:
        return MultiLaurent.constant(self.nvars, c)


def gma_zero(dim: int, nvars: int) -> np.ndarray:
    out = np.empty((dim, dim), dtype=object)
    for idx in np.ndindex(out.shape):
        out[idx] = MultiLaurent(nvars)
    return out


def identity_form(dim: int, nvars: int) -> np.ndarray:
    out = gma_zero(dim, nvars)
    for j in range(dim):
        out[j, j] = MultiLaurent.constant(nvars, 1)
    return out


def matrix_unit(algebra: GenMatrixAlgebra, j: int, l: int, b: MultiLaurent | int = 1) -> np.ndarray:
    """E_jl(b), 1-based indices."""
    if not (1 <= j <= algebra.dim and 1 <= l <= algebra.dim):
        raise IndexOutOfRangeError(f"E_{j}{l} does not exist in dimension {algebra.dim}")
    out = algebra.zero()
    out[j - 1, l - 1] = b if isinstance(b, MultiLaurent) else algebra.scalar(b)
    return out


def _check_shape(algebra: GenMatrixAlgebra, *mats: np.ndarray) -> None:
    for m in mats:
        if m.shape != (algebra.dim, algebra.dim):
            raise ParameterMismatchError(f"matrix of shape {m.shape} in dimension {algebra.dim}")


def gma_mul(algebra: GenMatrixAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    _check_shape(algebra, x, y)
    return x @ algebra.psi @ y


def gma_involution(algebra: GenMatrixAlgebra, x: np.ndarray) -> np.ndarray:
    """kappa(x) = sigma(x)^T."""
    _check_shape(algebra, x)
    return _apply(algebra.sigma, x).T


def kron(x: np.ndarray, y: np.ndarray, n1: int, n2: int) -> np.ndarray:
    """Kronecker product with x over the first n1 variables and y over the next n2."""
    nvars = n1 + n2
    rows, cols = x.shape[0] * y.shape[0], x.shape[1] * y.shape[1]
    out = np.empty((rows, cols), dtype=object)
    for a, c in np.ndindex(x.shape):
        left = x[a, c].embed(0, nvars)
        for b, d in np.ndindex(y.shape):
            out[a * y.shape[0] + b, c * y.shape[1] + d] = left * y[b, d].embed(n1, nvars)
    return out


def gma_tensor(a1: GenMatrixAlgebra, a2: GenMatrixAlgebra) -> GenMatrixAlgebra:
    """(M_n1(B1), rho1) (x) (M_n2(B2), rho2) = (M_n1n2(B1 (x) B2), rho1 (x) rho2)."""
    return GenMatrixAlgebra(
        a1.dim * a2.dim,
        a1.nvars + a2.nvars,
        kron(a1.psi, a2.psi, a1.nvars, a2.nvars),
        a1.sigma.direct_sum(a2.sigma),
        check=a1.check and a2.check,
    )
