"""Affine cell chains and their tensor products."""

from dataclasses import dataclass

from src.cellular.matrix_algebra import GenMatrixAlgebra, gma_tensor


@dataclass(frozen=True)
class ChainLayer:
    label: str
    algebra: GenMatrixAlgebra

    @property
    def rank(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class ChainSpec:
    """Layers J'_1, ..., J'_m; the ideal J_l is the sum of the first l layers."""
    layers: tuple[ChainLayer, ...]

    def __len__(self) -> int:
        return len(self.layers)

    @property
    def labels(self) -> list[str]:
        return [layer.label for layer in self.layers]

    def ideal(self, index: int) -> list[str]:
        """Labels of the layers making up J_index (1-based; J_0 = 0)."""
        return self.labels[:index]


def chain_tensor(c1: ChainSpec, c2: ChainSpec) -> ChainSpec:
    """
    The chain of A (x) B: layer a*m + b is J'_(a+1) (x) K'_b, so the ideal
    H_(a*m+b) is J_a (x) B + J'_(a+1) (x) K_b.
    """
    layers = []
    for left in c1.layers:
        for right in c2.layers:
            layers.append(ChainLayer(f"{left.label}(x){right.label}", gma_tensor(left.algebra, right.algebra)))
    return ChainSpec(tuple(layers))
