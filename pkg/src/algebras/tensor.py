"""
H^_lambda = H^_{n_1} (x) ... (x) H^_{n_r}, and the isomorphism phi onto 1_l0 H^_{r,n} 1_l0.

An element of H^_lambda is stored as a Bernstein element of size n whose
permutations preserve the blocks of lambda0; the k-th nonempty block carries
the tensor factor H^_{n_k}. The IM basis, the bar involution and the canonical
basis are taken factor by factor. Elements of W^_lambda = Z^n x| W_lambda are
ExtAffineElems whose finite part preserves the blocks; their length and Bruhat
order are those of the product of the factors.
"""

import logging
import random
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from src.algebras.bernstein import BernsteinElem, ah_bar, ah_mul, ah_product, ah_unit, t_gen, t_inverse, z_power
from src.algebras.canonical import kl_basis
from src.algebras.idempotent import HhatElement, h_mul
from src.algebras.iwahori import bernstein_to_im, im_expansion_to_bernstein, im_to_bernstein
from src.algebras.sparse import add_term
from src.calculators.verification import VerificationResult, _record
from src.coeffs.laurent import ONE
from src.combinatorics.affine_weyl import (
    ExtAffineElem,
    bruhat_lower_set,
    ext_length,
    ext_sort_key,
)
from src.combinatorics.permutations import Perm, act_on_tuple
from src.combinatorics.residues import (
    block_offsets,
    block_sizes,
    check_rank_guard,
    check_residues,
    orbit_rep,
    orbit_representatives,
    young_stabilizer,
)
from src.errors import NotInBasisError, ParameterMismatchError

logger = logging.getLogger(__name__)


def active_blocks(sizes: Sequence[int]) -> list[tuple[int, int]]:
    """(offset, size) of every nonempty block."""
    return [(o, s) for o, s in zip(block_offsets(sizes), sizes) if s]


def _split_perm(w: Perm, blocks) -> list[Perm]:
    parts = []
    for off, size in blocks:
        part = tuple(w[off + j] - off for j in range(size))
        if sorted(part) != list(range(1, size + 1)):
            raise NotInBasisError(f"permutation {w} does not preserve the blocks {blocks}")
        parts.append(part)
    return parts


def split_young(key: tuple[tuple[int, ...], Perm], sizes: Sequence[int]) -> list[tuple[tuple[int, ...], Perm]]:
    """Split a Bernstein key (a, w) into the keys of the tensor factors."""
    a, w = key
    blocks = active_blocks(sizes)
    perms = _split_perm(w, blocks)
    return [(tuple(a[off:off + size]), p) for (off, size), p in zip(blocks, perms)]


def join_young(parts) -> tuple[tuple[int, ...], Perm]:
    a: list[int] = []
    w: list[int] = []
    for alpha, p in parts:
        off = len(w)
        a.extend(alpha)
        w.extend(v + off for v in p)
    return tuple(a), tuple(w)


def split_ext(x: ExtAffineElem, sizes: Sequence[int]) -> tuple[ExtAffineElem, ...]:
    return tuple(ExtAffineElem(a, p) for a, p in split_young((x.trans, x.perm), sizes))


def join_ext(parts: Sequence[ExtAffineElem]) -> ExtAffineElem:
    a, w = join_young([(p.trans, p.perm) for p in parts])
    return ExtAffineElem(a, w)


def young_length(x: ExtAffineElem, sizes: Sequence[int]) -> int:
    return sum(ext_length(p) for p in split_ext(x, sizes))


def young_sort_key(x: ExtAffineElem, sizes: Sequence[int]) -> tuple:
    parts = split_ext(x, sizes)
    return (sum(ext_length(p) for p in parts), tuple(ext_sort_key(p) for p in parts))


def young_lower_set(x: ExtAffineElem, sizes: Sequence[int], guard: int | None = None) -> set[ExtAffineElem]:
    """{y <= x} for the product Bruhat order of W^_lambda."""
    lowers = [sorted(bruhat_lower_set(p, guard)) for p in split_ext(x, sizes)]
    return {join_ext(combo) for combo in product(*lowers)}


@dataclass(frozen=True)
class TensorElem:
    sizes: tuple[int, ...]
    body: BernsteinElem

    def __post_init__(self):
        if sum(self.sizes) != self.body.n:
            raise ParameterMismatchError(f"block sizes {self.sizes} do not add up to {self.body.n}")
        blocks = active_blocks(self.sizes)
        for key in self.body.terms:
            _split_perm(key[1], blocks)

    @property
    def n(self) -> int:
        return self.body.n

    def _check(self, other: "TensorElem") -> None:
        if self.sizes != other.sizes:
            raise ParameterMismatchError(f"block sizes differ: {self.sizes} vs {other.sizes}")

    def __add__(self, other: "TensorElem") -> "TensorElem":
        self._check(other)
        return TensorElem(self.sizes, self.body + other.body)

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        self._check(other)
        return TensorElem(self.sizes, self.body - other.body)

    def __mul__(self, other):
        if isinstance(other, TensorElem):
            return tensor_mul(self, other)
        return TensorElem(self.sizes, self.body * other)

    def __rmul__(self, other):
        return TensorElem(self.sizes, other * self.body)

    def __bool__(self) -> bool:
        return bool(self.body)

    def __str__(self) -> str:
        return f"[{','.join(str(s) for s in self.sizes)}] {self.body}"


def tensor_unit(sizes: Sequence[int]) -> TensorElem:
    return TensorElem(tuple(sizes), ah_unit(sum(sizes)))


def pure(sizes: Sequence[int], factors: Sequence[BernsteinElem]) -> TensorElem:
    """f_1 (x) ... (x) f_k over the nonempty blocks."""
    sizes = tuple(sizes)
    blocks = active_blocks(sizes)
    if [f.n for f in factors] != [s for _, s in blocks]:
        raise ParameterMismatchError(f"factor sizes do not match the blocks {sizes}")
    out: dict = {}
    for combo in product(*(f.terms.items() for f in factors)):
        coeff = ONE
        for _, c in combo:
            coeff = coeff * c
        add_term(out, join_young([k for k, _ in combo]), coeff)
    return TensorElem(sizes, BernsteinElem(sum(sizes), out))


def tensor_mul(a: TensorElem, b: TensorElem) -> TensorElem:
    a._check(b)
    return TensorElem(a.sizes, ah_mul(a.body, b.body))


def _factorwise(a: TensorElem, fn) -> TensorElem:
    """Apply a map of the tensor factors to every pure term; coefficients pass through."""
    out = TensorElem(a.sizes, BernsteinElem(a.n))
    blocks = active_blocks(a.sizes)
    for key, c in a.body.terms.items():
        parts = split_young(key, a.sizes)
        images = [fn(BernsteinElem(size, {part: ONE})) for (_, size), part in zip(blocks, parts)]
        out = out + pure(a.sizes, images) * c
    return out


def tensor_bar(a: TensorElem) -> TensorElem:
    """Bar involution of H^_lambda, factor by factor."""
    conj = TensorElem(a.sizes, BernsteinElem(a.n, {k: c.bar() for k, c in a.body.terms.items()}))
    return _factorwise(conj, ah_bar)


def tensor_to_im(a: TensorElem) -> dict[ExtAffineElem, object]:
    """Expansion of a in the basis {T_y1 (x) ... (x) T_yk}, keyed by the joined y."""
    out: dict = {}
    blocks = active_blocks(a.sizes)
    for key, c in a.body.terms.items():
        parts = split_young(key, a.sizes)
        expansions = [
            bernstein_to_im(BernsteinElem(size, {part: ONE})).terms.items()
            for (_, size), part in zip(blocks, parts)
        ]
        for combo in product(*expansions):
            coeff = c
            for _, d in combo:
                coeff = coeff * d
            add_term(out, join_ext([y for y, _ in combo]), coeff)
    return out


def tensor_im_basis(x: ExtAffineElem, sizes: Sequence[int]) -> TensorElem:
    """T_x1 (x) ... (x) T_xk."""
    return pure(sizes, [im_to_bernstein(p) for p in split_ext(x, sizes)])


def tensor_kl(x: ExtAffineElem, sizes: Sequence[int]) -> TensorElem:
    """c_x1 (x) ... (x) c_xk."""
    return pure(sizes, [im_expansion_to_bernstein(kl_basis(p).expansion) for p in split_ext(x, sizes)])


# --- phi : H^_lambda -> 1_l0 H^_{r,n} 1_l0 ----------------------------------------


def _check_lam0(r: int, lam0) -> tuple[int, ...]:
    lam0 = check_residues(r, lam0)
    if orbit_rep(lam0)[0] != lam0:
        raise NotInBasisError(f"{lam0} is not an orbit representative")
    return lam0


def phi(a: "TensorElem | BernsteinElem", lam0, r: int) -> HhatElement:
    """Z^a T_w -> X^a 1_l0 g_w for w in W_l0."""
    lam0 = _check_lam0(r, lam0)
    if isinstance(a, TensorElem):
        if a.sizes != block_sizes(r, lam0):
            raise ParameterMismatchError(f"block sizes {a.sizes} do not match {lam0}")
        a = a.body
    if a.n != len(lam0):
        raise ParameterMismatchError(f"element of size {a.n} for a tuple of length {len(lam0)}")
    out: dict = {}
    for (alpha, w), c in a.terms.items():
        if act_on_tuple(w, lam0) != lam0:
            raise NotInBasisError(f"T{list(w)} is not in the Young subalgebra of {lam0}")
        add_term(out, (alpha, lam0, w), c)
    return HhatElement(r, len(lam0), out)


def phi_inverse(y: HhatElement, lam0) -> TensorElem:
    lam0 = _check_lam0(y.r, lam0)
    out: dict = {}
    for (alpha, lam, w), c in y.terms.items():
        if lam != lam0 or act_on_tuple(w, lam0) != lam0:
            raise NotInBasisError(f"term X{list(alpha)} 1{lam} g{list(w)} is outside 1_l0 H 1_l0")
        add_term(out, (alpha, w), c)
    return TensorElem(block_sizes(y.r, lam0), BernsteinElem(y.n, out))


def g_hat(x: ExtAffineElem, lam0, r: int) -> HhatElement:
    """g_(x, l0) = phi(T_x) for x in W^_l0."""
    return phi(tensor_im_basis(x, block_sizes(r, lam0)), lam0, r)


def c_hat(x: ExtAffineElem, lam0, r: int) -> HhatElement:
    """c_(x, l0) = phi(c_x)."""
    return phi(tensor_kl(x, block_sizes(r, lam0)), lam0, r)


def phi_bar(y: HhatElement, lam0) -> HhatElement:
    """The bar involution of 1_l0 H^_{r,n} 1_l0 transported through phi."""
    return phi(tensor_bar(phi_inverse(y, lam0)), lam0, y.r)


def in_young_group(x: ExtAffineElem, lam0) -> bool:
    return act_on_tuple(x.perm, tuple(lam0)) == tuple(lam0)


# --- multiplicativity of phi ------------------------------------------------------


def young_generators(lam0) -> list[tuple[str, BernsteinElem]]:
    """T_i^(+-1) for s_i fixing lam0, and Z_j^(+-1)."""
    n = len(lam0)
    gens = []
    for i in sorted(young_stabilizer(lam0)):
        gens += [(f"T{i}", t_gen(n, i)), (f"T{i}^-1", t_inverse(n, i))]
    for j in range(1, n + 1):
        gens += [(f"Z{j}", z_power(n, j)), (f"Z{j}^-1", z_power(n, j, -1))]
    return gens


def random_young_element(lam0, rng: random.Random, terms: int = 2, max_letters: int = 3) -> BernsteinElem:
    """A small random combination of words in the Young subalgebra of lam0."""
    gens = [g for _, g in young_generators(lam0)]
    out = BernsteinElem(len(lam0))
    for _ in range(terms):
        word = [rng.choice(gens) for _ in range(rng.randint(0, max_letters))]
        out = out + ah_product(len(lam0), word) * (ONE * rng.choice([-2, -1, 1, 2]))
    return out


def phi_suite(r: int, n: int, samples: int = 100, seed: int = 0, rank_guard: int | None = None) -> VerificationResult:
    """phi(ab) = phi(a)phi(b) on all generator pairs and on random pairs, for every orbit representative."""
    check_rank_guard(r, n, rank_guard)
    rng = random.Random(seed)
    result = VerificationResult("phi", {"r": r, "n": n, "samples": samples, "seed": seed})
    for lam0 in orbit_representatives(r, n):
        gens = young_generators(lam0)
        bad = ""
        for (na, a), (nb, b) in product(gens, repeat=2):
            if phi(ah_mul(a, b), lam0, r) != h_mul(phi(a, lam0, r), phi(b, lam0, r)):
                bad = f"{na} {nb}"
                break
        for _ in range(samples):
            if bad:
                break
            a, b = random_young_element(lam0, rng), random_young_element(lam0, rng)
            if phi(ah_mul(a, b), lam0, r) != h_mul(phi(a, lam0, r), phi(b, lam0, r)):
                bad = f"a = {a}; b = {b}"
        result.checks.append(_record(
            f"phi-multiplicative-{''.join(map(str, lam0))}",
            f"phi is multiplicative on the Young subalgebra of {lam0}",
            "phi(ab) = phi(a) phi(b)", not bad, bad,
        ))
    logger.info("phi r=%d n=%d: %d representatives, %d failed checks", r, n, len(result.checks), result.fail_count)
    return result
