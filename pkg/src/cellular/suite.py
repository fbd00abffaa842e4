"""Randomized and instance checks for the cellular kit."""

import logging
import random
from dataclasses import replace

import numpy as np

from src.calculators.verification import VerificationResult, _record, _skipped
from src.cellular.cell_ideal import cell_ideal_check
from src.cellular.chains import ChainLayer, ChainSpec, chain_tensor
from src.cellular.instances import corrupted, orbit_cell_ideal
from src.cellular.matrix_algebra import (
    GenMatrixAlgebra,
    gma_involution,
    gma_mul,
    identity_form,
    matrices_equal,
)
from src.coeffs.multivariate import MonomialInvolution, MultiLaurent
from src.combinatorics.residues import check_rank_guard, orbit_representatives, young_stabilizer
from src.errors import CompatibilityError

logger = logging.getLogger(__name__)


def random_base(rng: random.Random, nvars: int, terms: int = 2, max_exp: int = 1) -> MultiLaurent:
    out = {}
    for _ in range(terms):
        exp = tuple(rng.randint(-max_exp, max_exp) for _ in range(nvars))
        out[exp] = out.get(exp, 0) + rng.choice([-2, -1, 1, 2])
    return MultiLaurent(nvars, out)


def random_matrix(rng: random.Random, dim: int, nvars: int) -> np.ndarray:
    out = np.empty((dim, dim), dtype=object)
    for idx in np.ndindex(out.shape):
        out[idx] = random_base(rng, nvars)
    return out


def random_sigma(rng: random.Random, nvars: int) -> MonomialInvolution:
    if nvars == 2 and rng.random() < 0.5:
        return MonomialInvolution.swap(2, 0, 1)
    return rng.choice([MonomialInvolution.identity(nvars), MonomialInvolution.inversion(nvars)])


def random_compatible_form(rng: random.Random, dim: int, sigma: MonomialInvolution) -> np.ndarray:
    """A Psi with sigma(Psi)^T = Psi: symmetrize strictly upper entries, diagonal b + sigma(b)."""
    nvars = sigma.nvars
    psi = np.empty((dim, dim), dtype=object)
    for j in range(dim):
        b = random_base(rng, nvars)
        psi[j, j] = b + sigma(b)
        for l in range(j + 1, dim):
            psi[j, l] = random_base(rng, nvars)
            psi[l, j] = sigma(psi[j, l])
    return psi


def random_algebra(rng: random.Random, dim: int, nvars: int) -> GenMatrixAlgebra:
    sigma = random_sigma(rng, nvars)
    return GenMatrixAlgebra(dim, nvars, random_compatible_form(rng, dim, sigma), sigma)


def random_chain(rng: random.Random, max_layers: int = 3, label: str = "J") -> ChainSpec:
    layers = []
    for k in range(1, rng.randint(1, max_layers) + 1):
        layers.append(ChainLayer(f"{label}{k}", random_algebra(rng, rng.randint(1, 2), 1)))
    return ChainSpec(tuple(layers))


def _incompatible_form() -> np.ndarray:
    psi = identity_form(2, 1)
    psi[0, 0] = MultiLaurent(1)
    psi[1, 1] = MultiLaurent(1)
    psi[0, 1] = MultiLaurent.constant(1)
    return psi


def gma_suite(samples: int = 20, seed: int = 0) -> VerificationResult:
    rng = random.Random(seed)
    result = VerificationResult("gma", {"samples": samples, "seed": seed})
    checks = result.checks
    bad_assoc, bad_anti = "", ""
    for k in range(samples):
        nvars = 1 + k % 2
        algebra = random_algebra(rng, rng.randint(1, 3), nvars)
        x, y, z = (random_matrix(rng, algebra.dim, nvars) for _ in range(3))
        if not bad_assoc and not matrices_equal(
            gma_mul(algebra, gma_mul(algebra, x, y), z), gma_mul(algebra, x, gma_mul(algebra, y, z))
        ):
            bad_assoc = f"sample {k}: dim {algebra.dim}, {nvars} variables"
        if not bad_anti and not matrices_equal(
            gma_involution(algebra, gma_mul(algebra, x, y)),
            gma_mul(algebra, gma_involution(algebra, y), gma_involution(algebra, x)),
        ):
            bad_anti = f"sample {k}: sigma = {algebra.sigma!r}"
    checks.append(_record("associative", "x.(y.z) = (x.y).z", "x Psi (y Psi z) = (x Psi y) Psi z",
                          not bad_assoc, bad_assoc))
    checks.append(_record("kappa-anti", "kappa is an anti-automorphism", "kappa(x.y) = kappa(y).kappa(x)",
                          not bad_anti, bad_anti))

    psi = _incompatible_form()
    sigma = MonomialInvolution.identity(1)
    try:
        GenMatrixAlgebra(2, 1, psi, sigma)
        rejected = False
    except CompatibilityError:
        rejected = True
    checks.append(_record("incompatible-rejected", "sigma(Psi)^T != Psi is rejected at construction",
                          "Psi = [[0, 1], [0, 0]], sigma = id", rejected, "constructed without error"))
    unchecked = GenMatrixAlgebra(2, 1, psi, sigma, check=False)
    found = False
    for _ in range(samples):
        x, y = random_matrix(rng, 2, 1), random_matrix(rng, 2, 1)
        if not matrices_equal(
            gma_involution(unchecked, gma_mul(unchecked, x, y)),
            gma_mul(unchecked, gma_involution(unchecked, y), gma_involution(unchecked, x)),
        ):
            found = True
            break
    checks.append(_record("incompatible-not-anti", "kappa fails to reverse products when sigma(Psi)^T != Psi",
                          "exists x, y: kappa(x.y) != kappa(y).kappa(x)", found, "no counterexample found"))
    return result


def chain_suite(samples: int = 20, seed: int = 0) -> VerificationResult:
    rng = random.Random(seed)
    result = VerificationResult("chains", {"samples": samples, "seed": seed})
    witness = ""
    for k in range(samples):
        c1, c2 = random_chain(rng, label="J"), random_chain(rng, label="K")
        product = chain_tensor(c1, c2)
        expected = [f"{a}(x){b}" for a in c1.labels for b in c2.labels]
        ranks = [a.rank * b.rank for a in c1.layers for b in c2.layers]
        ok = (
            len(product) == len(c1) * len(c2)
            and product.labels == expected
            and [layer.rank for layer in product.layers] == ranks
            and all(layer.algebra.compatible for layer in product.layers)
        )
        if not ok and not witness:
            witness = f"sample {k}: {c1.labels} x {c2.labels} -> {product.labels}"
    result.checks.append(_record(
        "chain-tensor", "Tensor chains have the interleaved layer set",
        "layers J'_a (x) K'_b, a outer, ranks multiply, forms compose", not witness, witness,
    ))
    return result


def _prefixed(result: VerificationResult, prefix: str) -> list:
    return [replace(c, check_id=f"{prefix}:{c.check_id}") for c in result.checks]


def cellular_suite(
    r: int, n: int, samples: int = 20, seed: int = 0, rank_guard: int | None = None,
) -> VerificationResult:
    """Generalized matrix algebras, chain products and the orbit-block cell ideals of E^_{r,n}."""
    check_rank_guard(r, n, rank_guard)
    result = VerificationResult("cellular", {"r": r, "n": n, "samples": samples, "seed": seed})
    result.extend(gma_suite(samples, seed))
    result.extend(chain_suite(samples, seed))

    instances = [orbit_cell_ideal(2, 1, (1,))]
    for lam0 in orbit_representatives(r, n):
        if young_stabilizer(lam0):
            continue
        instances.append(orbit_cell_ideal(r, n, lam0))
        if n <= 2:
            instances.append(orbit_cell_ideal(r, n, lam0, radius=1))
    rows = []
    for instance in instances:
        report = cell_ideal_check(instance)
        result.checks.extend(_prefixed(report, instance.name))
        rows.append([instance.name, str(instance.algebra.dim), str(len(instance.basis)),
                     "pass" if report.passed else "FAIL"])

    finite_blocks = [inst for inst in instances if inst.algebra.dim > 1 and inst.algebra.nvars == 1]
    if finite_blocks:
        control = cell_ideal_check(corrupted(finite_blocks[0]))
        failed = {c.check_id for c in control.failures()}
        result.checks.append(_record(
            "negative-control", "A corrupted isomorphism is caught",
            "corrupted image fails involution-compatible",
            "involution-compatible" in failed, f"failures: {sorted(failed)}",
        ))
    else:
        result.checks.append(_skipped(
            "negative-control", "no orbit block with trivial stabilizer and dim > 1 at these parameters",
            "corrupted image fails involution-compatible",
        ))
    result.tables["cell_ideals"] = [["instance", "dim", "basis", "status"]] + rows
    logger.info("cellular r=%d n=%d: %d instances, %d failed checks", r, n, len(instances), result.fail_count)
    return result
