"""
The Yokonuma-Hecke algebra Y_{r,n} over R = Z[1/r][q, q^-1, zeta].

Generators t_1..t_n (t_j^r = 1) and h_1..h_{n-1} with h_i t_j = t_{s_i(j)} h_i,
the braid relations and h_i^2 = 1 + (q - q^-1) e_i h_i, where
e_i = (1/r) sum_s t_i^s t_{i+1}^-s. Elements are kept on the basis t^k h_w,
0 <= k_j < r, which has r^n n! elements.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from src.algebras.bernstein import swap_entries
from src.algebras.idempotent import (
    HhatElement,
    e_hat,
    g_gen,
    hhat_unit,
    x_power,
)
from src.algebras.sparse import add_term, combine, pruned, scale
from src.algebras.words import Y_LETTERS, GenWord, parse_word
from src.calculators.verification import VerificationResult, _record, _run_check, _skipped
from src.coeffs.cyclotomic import CycScalar, cyc_primitive
from src.coeffs.laurent import Q_DIFF
from src.combinatorics.permutations import (
    Perm,
    all_perms,
    format_perm,
    identity_perm,
    is_left_descent,
    left_mul_simple,
    perm_reduced_word,
)
from src.combinatorics.residues import all_residue_tuples, check_rank_guard
from src.errors import AlgebraError, IndexOutOfRangeError, ParameterMismatchError

logger = logging.getLogger(__name__)

YKey = tuple[tuple[int, ...], Perm]


@dataclass(frozen=True, eq=False)
class YElement:
    r: int
    n: int
    terms: dict[YKey, CycScalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", pruned(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YElement):
            return NotImplemented
        return (self.r, self.n) == (other.r, other.n) and self.terms == other.terms

    def _check(self, other: "YElement") -> None:
        if (self.r, self.n) != (other.r, other.n):
            raise ParameterMismatchError(
                f"(r, n) differ: ({self.r}, {self.n}) vs ({other.r}, {other.n})"
            )

    def __add__(self, other: "YElement") -> "YElement":
        self._check(other)
        return YElement(self.r, self.n, combine((self.terms, 1), (other.terms, 1)))

    def __sub__(self, other: "YElement") -> "YElement":
        self._check(other)
        return YElement(self.r, self.n, combine((self.terms, 1), (other.terms, -1)))

    def __neg__(self) -> "YElement":
        return YElement(self.r, self.n, scale(self.terms, -1))

    def __mul__(self, other):
        if isinstance(other, YElement):
            return y_mul(self, other)
        return YElement(self.r, self.n, scale(self.terms, other))

    def __rmul__(self, other):
        return YElement(self.r, self.n, scale(self.terms, other))

    def sorted_terms(self) -> list[tuple[YKey, CycScalar]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (k, w), c in self.sorted_terms():
            ts = " ".join(f"t{j}^{e}" for j, e in enumerate(k, start=1))
            parts.append(f"{c} {ts} * h{format_perm(w)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"YElement(r={self.r}, n={self.n}, {str(self)!r})"


def _one(r: int) -> CycScalar:
    return CycScalar.one(r)


def y_unit(r: int, n: int) -> YElement:
    return YElement(r, n, {((0,) * n, identity_perm(n)): _one(r)})


def y_monomial(r: int, k, w: Perm) -> YElement:
    k = tuple(e % r for e in k)
    return YElement(r, len(k), {(k, tuple(w)): _one(r)})


def t_gen(r: int, n: int, j: int, m: int = 1) -> YElement:
    if not 1 <= j <= n:
        raise IndexOutOfRangeError(f"t_{j} does not exist for n={n}")
    k = [0] * n
    k[j - 1] = m % r
    return YElement(r, n, {(tuple(k), identity_perm(n)): _one(r)})


def h_perm(r: int, n: int, w: Perm) -> YElement:
    return YElement(r, n, {((0,) * n, tuple(w)): _one(r)})


def _check_gen(n: int, i: int) -> None:
    if not 1 <= i < n:
        raise IndexOutOfRangeError(f"h_{i} does not exist for n={n}")


def h_gen(r: int, n: int, i: int) -> YElement:
    _check_gen(n, i)
    return h_perm(r, n, left_mul_simple(i, identity_perm(n)))


def e_idem(r: int, n: int, i: int) -> YElement:
    """e_i = (1/r) sum_{s < r} t_i^s t_{i+1}^-s."""
    _check_gen(n, i)
    terms: dict = {}
    w = identity_perm(n)
    for s in range(r):
        k = [0] * n
        k[i - 1] = s % r
        k[i] = (-s) % r
        add_term(terms, (tuple(k), w), CycScalar.one(r) * Fraction(1, r))
    return YElement(r, n, terms)


def h_inv(r: int, n: int, i: int) -> YElement:
    """h_i^-1 = h_i - (q - q^-1) e_i."""
    return h_gen(r, n, i) - e_idem(r, n, i) * Q_DIFF


def h_perm_inverse(r: int, n: int, w: Perm) -> YElement:
    """h_w^-1 = h_{i_k}^-1 ... h_{i_1}^-1 along the canonical reduced word of w."""
    out = y_unit(r, n)
    for i in reversed(perm_reduced_word(w)):
        out = y_mul(out, h_inv(r, n, i))
    return out


def _add_k(r: int, k, other) -> tuple[int, ...]:
    return tuple((a + b) % r for a, b in zip(k, other))


def _left_h(r: int, i: int, terms: dict) -> dict:
    out: dict = {}
    for (k, w), c in terms.items():
        sk = swap_entries(k, i)
        add_term(out, (sk, left_mul_simple(i, w)), c)
        if is_left_descent(i, w):
            share = c * Q_DIFF * Fraction(1, r)
            for s in range(r):
                shifted = list(sk)
                shifted[i - 1] = (shifted[i - 1] + s) % r
                shifted[i] = (shifted[i] - s) % r
                add_term(out, (tuple(shifted), w), share)
    return out


def y_mul(a: YElement, b: YElement) -> YElement:
    a._check(b)
    out: dict = {}
    for (k, w), c in a.terms.items():
        x = b.terms
        for i in reversed(perm_reduced_word(w)):
            x = _left_h(a.r, i, x)
        for (kk, v), d in x.items():
            add_term(out, (_add_k(a.r, k, kk), v), c * d)
    return YElement(a.r, a.n, out)


def y_product(r: int, n: int, factors) -> YElement:
    out = y_unit(r, n)
    for f in factors:
        out = y_mul(out, f)
    return out


def y_basis(r: int, n: int) -> list[YKey]:
    ks = product(range(r), repeat=n)
    return [(tuple(k), w) for k in ks for w in all_perms(n)]


def y_nf(r: int, n: int, word: "str | GenWord") -> YElement:
    if isinstance(word, str):
        word = parse_word(word, Y_LETTERS)
    factors = []
    for letter in word:
        try:
            if letter.name == "1":
                if letter.residues is not None:
                    raise AlgebraError("idempotents 1(...) are not letters of Y")
                factors.append(y_unit(r, n))
            elif letter.name == "t":
                factors.append(t_gen(r, n, letter.index, letter.exponent))
            elif letter.name == "e":
                if letter.exponent < 0:
                    raise AlgebraError("e_i is not invertible")
                factors.append(e_idem(r, n, letter.index) if letter.exponent else y_unit(r, n))
            else:
                _check_gen(n, letter.index)
                base = h_gen(r, n, letter.index) if letter.exponent > 0 else h_inv(r, n, letter.index)
                factors.append(y_product(r, n, [base] * abs(letter.exponent)))
        except AlgebraError as exc:
            raise word.error(letter, str(exc)) from exc
    return y_product(r, n, factors)


# --- the map into the idempotent presentation ---------------------------------


def to_idempotent_presentation(a: YElement) -> HhatElement:
    """t_j -> sum_l zeta^(l_j - 1) 1_l and h_i -> g_i, over CycScalar coefficients."""
    r, n = a.r, a.n
    zero_alpha = (0,) * n
    out: dict = {}
    for (k, w), c in a.terms.items():
        for lam in all_residue_tuples(r, n):
            power = sum(kj * (lj - 1) for kj, lj in zip(k, lam))
            add_term(out, (zero_alpha, lam, w), c * CycScalar.zeta(r, power))
    return HhatElement(r, n, out)


def _cyc(r: int, h: HhatElement) -> HhatElement:
    return h.map_coefficients(lambda c: CycScalar.from_laurent(r, c))


def primitive_part(h: HhatElement) -> HhatElement:
    """Coefficients projected to zeta a primitive r-th root of unity."""
    return h.map_coefficients(cyc_primitive)


def affine_y_image(r: int, n: int, j: int, m: int = 1) -> HhatElement:
    """Image of Y_j^m, where Y_1 -> X_1 and Y_(i+1) = h_i Y_i h_i, i.e. Y_j -> X_j."""
    return _cyc(r, x_power(r, n, j, m))


def affine_monomial_image(r: int, alpha, k, w: Perm) -> HhatElement:
    """Image of Y^alpha t^k h_w."""
    n = len(alpha)
    x = _cyc(r, hhat_unit(r, n))
    for j, m in enumerate(alpha, start=1):
        if m:
            x = x * affine_y_image(r, n, j, m)
    return x * to_idempotent_presentation(y_monomial(r, k, w))


# --- relation suites -----------------------------------------------------------


def _y_relations(r: int, n: int, op, t, h, e, unit, suite: str) -> VerificationResult:
    """Relations of Y_{r,n}, evaluated with the supplied generator realization."""
    result = VerificationResult(suite, {"r": r, "n": n})
    checks = result.checks
    c = Q_DIFF
    for j in range(1, n + 1):
        for l in range(j + 1, n + 1):
            checks.append(_run_check(
                f"commute_t{j}_t{l}", "t's commute", "t_j t_l = t_l t_j",
                lambda j=j, l=l: (op(t(j) * t(l)), op(t(l) * t(j))),
            ))
        power = unit
        for _ in range(r):
            power = power * t(j)
        checks.append(_run_check(
            f"t{j}_order", "t_j has order r", "t_j^r = 1",
            lambda power=power: (op(power), op(unit)),
        ))
    for i in range(1, n):
        for j in range(1, n + 1):
            target = i + 1 if j == i else i if j == i + 1 else j
            checks.append(_run_check(
                f"h{i}_t{j}", "h_i permutes the t's", "h_i t_j = t_(s_i(j)) h_i",
                lambda i=i, j=j, target=target: (op(h(i) * t(j)), op(t(target) * h(i))),
            ))
        checks.append(_run_check(
            f"quadratic_h{i}", "Quadratic relation", "h_i^2 = 1 + (q - q^-1) e_i h_i",
            lambda i=i: (op(h(i) * h(i)), op(unit + e(i) * h(i) * c)),
        ))
        for j in range(i + 1, n):
            if j == i + 1:
                checks.append(_run_check(
                    f"braid_h{i}_h{j}", "Braid relation",
                    "h_i h_(i+1) h_i = h_(i+1) h_i h_(i+1)",
                    lambda i=i, j=j: (op(h(i) * h(j) * h(i)), op(h(j) * h(i) * h(j))),
                ))
            else:
                checks.append(_run_check(
                    f"commute_h{i}_h{j}", "Distant generators commute", "h_i h_j = h_j h_i",
                    lambda i=i, j=j: (op(h(i) * h(j)), op(h(j) * h(i))),
                ))
    return result


def y_relation_suite(r: int, n: int, rank_guard: int | None = None) -> VerificationResult:
    """Defining relations, idempotents, inverses and closure of the basis t^k h_w."""
    rank = check_rank_guard(r, n, rank_guard)
    unit = y_unit(r, n)
    result = _y_relations(
        r, n, lambda x: x,
        lambda j: t_gen(r, n, j),
        lambda i: h_gen(r, n, i),
        lambda i: e_idem(r, n, i),
        unit,
        "relations-Y",
    )
    checks = result.checks
    for i in range(1, n):
        e, h = e_idem(r, n, i), h_gen(r, n, i)
        ratio = t_gen(r, n, i) * t_gen(r, n, i + 1, -1)
        checks.append(_run_check(
            f"e{i}_idempotent", "e_i is idempotent", "e_i^2 = e_i",
            lambda e=e: (e * e, e),
        ))
        checks.append(_run_check(
            f"e{i}_absorbs", "e_i absorbs t_i t_(i+1)^-1", "e_i t_i t_(i+1)^-1 = e_i",
            lambda e=e, ratio=ratio: (e * ratio, e),
        ))
        checks.append(_run_check(
            f"e{i}_commutes_h{i}", "e_i commutes with h_i", "e_i h_i = h_i e_i",
            lambda e=e, h=h: (e * h, h * e),
        ))
        checks.append(_run_check(
            f"inverse_h{i}", "h_i is invertible", "h_i (h_i - (q - q^-1) e_i) = 1",
            lambda i=i, h=h: ((h * h_inv(r, n, i), h_inv(r, n, i) * h), (unit, unit)),
        ))
    bad_inverse = [w for w in all_perms(n) if h_perm(r, n, w) * h_perm_inverse(r, n, w) != unit]
    checks.append(_record(
        "inverse_hw", "h_w is invertible", "h_w h_w^-1 = 1 for all w",
        not bad_inverse, f"w = {format_perm(bad_inverse[0])}" if bad_inverse else "",
    ))

    basis = y_basis(r, n)
    support: set = set()
    for key_a in basis:
        a = YElement(r, n, {key_a: _one(r)})
        for key_b in basis:
            support |= set((a * YElement(r, n, {key_b: _one(r)})).terms)
    outside = support - set(basis)
    checks.append(_record(
        "closure", "Products of basis monomials stay in the basis",
        "t^k h_w * t^k' h_w' in span{t^k h_w}",
        not outside, f"monomial {sorted(outside)[0]}" if outside else "",
    ))
    checks.append(_record(
        "rank", "Basis size", f"|{{t^k h_w}}| = r^n n! = {rank}",
        len(basis) == rank, f"{len(basis)} monomials",
    ))
    logger.info("relations-Y r=%d n=%d: %d checks, %d failed", r, n, len(checks), result.fail_count)
    return result


def affine_image_relation_suite(r: int, n: int, rank_guard: int | None = None) -> VerificationResult:
    """
    The Y_{r,n} relations and the Y_1 relations of the affine algebra, pushed
    through the generator assignment and compared in H^_{r,n} with zeta primitive.
    """
    check_rank_guard(r, n, rank_guard)
    unit = to_idempotent_presentation(y_unit(r, n))

    def t(j):
        return to_idempotent_presentation(t_gen(r, n, j))

    def h(i):
        return to_idempotent_presentation(h_gen(r, n, i))

    def e(i):
        return to_idempotent_presentation(e_idem(r, n, i))

    result = _y_relations(r, n, primitive_part, t, h, e, unit, "iso-Y")
    checks = result.checks
    for i in range(1, n):
        checks.append(_run_check(
            f"e{i}_image", "e_i maps to e^_i", "image(e_i) = sum_{l_i = l_(i+1)} 1_l",
            lambda i=i: (primitive_part(e(i)), _cyc(r, e_hat(r, n, i))),
        ))
        checks.append(_run_check(
            f"h{i}_image", "h_i maps to g_i", "image(h_i) = g_i",
            lambda i=i: (h(i), _cyc(r, g_gen(r, n, i))),
        ))

    y1, y1_inv = affine_y_image(r, n, 1), affine_y_image(r, n, 1, -1)
    checks.append(_run_check(
        "y1_inverse", "Y_1 is invertible", "Y_1 Y_1^-1 = Y_1^-1 Y_1 = 1",
        lambda: ((y1 * y1_inv, y1_inv * y1), (unit, unit)),
    ))
    if n >= 2:
        checks.append(_run_check(
            "affine_braid", "Affine braid relation", "h_1 Y_1 h_1 Y_1 = Y_1 h_1 Y_1 h_1",
            lambda: (primitive_part(h(1) * y1 * h(1) * y1), primitive_part(y1 * h(1) * y1 * h(1))),
        ))
    else:
        checks.append(_skipped("affine_braid", "Affine braid relation", "h_1 Y_1 h_1 Y_1 = Y_1 h_1 Y_1 h_1"))
    for i in range(2, n):
        checks.append(_run_check(
            f"commute_h{i}_y1", "Y_1 commutes with distant h_i", "h_i Y_1 = Y_1 h_i",
            lambda i=i: (h(i) * y1, y1 * h(i)),
        ))
    for j in range(1, n + 1):
        checks.append(_run_check(
            f"commute_t{j}_y1", "Y_1 commutes with t_j", "t_j Y_1 = Y_1 t_j",
            lambda j=j: (t(j) * y1, y1 * t(j)),
        ))
    for i in range(1, n):
        checks.append(_run_check(
            f"y{i + 1}_definition", "Y_(i+1) = h_i Y_i h_i", "Y_(i+1) = h_i Y_i h_i",
            lambda i=i: (
                primitive_part(h(i) * affine_y_image(r, n, i) * h(i)),
                primitive_part(affine_y_image(r, n, i + 1)),
            ),
        ))
    logger.info("iso-Y r=%d n=%d: %d checks, %d failed", r, n, len(checks), result.fail_count)
    return result
