"""
The extended affine Hecke algebra H^_n in its Bernstein presentation.

Basis Z^a T_w (a in Z^n, w in S_n) over A = Z[q, q^-1], with

    T_i^2 = 1 + (q - q^-1) T_i,     T_i Z_i T_i = Z_{i+1},
    T_i Z_j = Z_j T_i  (j != i, i+1),

which combine into the commutation rule

    T_i Z^a = Z^(s_i a) T_i + (q - q^-1) D_i(Z^a),
    D_i(f) = Z_{i+1} (f - s_i f) / (Z_{i+1} - Z_i).

Products are computed by letting T_i act on the left of normal forms.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from src.algebras.sparse import add_term, combine, pruned, scale
from src.coeffs.laurent import ONE, Q_DIFF, LaurentScalar
from src.combinatorics.permutations import (
    Perm,
    format_perm,
    identity_perm,
    is_left_descent,
    left_mul_simple,
    perm_reduced_word,
)
from src.errors import IndexOutOfRangeError, ParameterMismatchError

logger = logging.getLogger(__name__)

BKey = tuple[tuple[int, ...], Perm]


def swap_entries(values: tuple, i: int) -> tuple:
    """Exchange positions i and i+1 (1-based)."""
    out = list(values)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def divided_difference(alpha: tuple[int, ...], i: int) -> list[tuple[tuple[int, ...], int]]:
    """
    D_i(Z^alpha) as a list of (exponent, sign).

    With x = Z_i, y = Z_{i+1}, a = alpha_i, b = alpha_{i+1}, d = a - b:
        d > 0:  -sum_{k<d}  x^(a-1-k) y^(b+1+k)
        d < 0:  +sum_{k<-d} x^(b-1-k) y^(a+1+k)
    """
    a, b = alpha[i - 1], alpha[i]
    d = a - b
    out = []
    if d > 0:
        for k in range(d):
            gamma = list(alpha)
            gamma[i - 1], gamma[i] = a - 1 - k, b + 1 + k
            out.append((tuple(gamma), -1))
    elif d < 0:
        for k in range(-d):
            gamma = list(alpha)
            gamma[i - 1], gamma[i] = b - 1 - k, a + 1 + k
            out.append((tuple(gamma), 1))
    return out


@dataclass(frozen=True, eq=False)
class BernsteinElem:
    n: int
    terms: dict[BKey, LaurentScalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", pruned(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BernsteinElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def _check(self, other: "BernsteinElem") -> None:
        if self.n != other.n:
            raise ParameterMismatchError(f"sizes differ: {self.n} vs {other.n}")

    def __add__(self, other: "BernsteinElem") -> "BernsteinElem":
        self._check(other)
        return BernsteinElem(self.n, combine((self.terms, 1), (other.terms, 1)))

    def __sub__(self, other: "BernsteinElem") -> "BernsteinElem":
        self._check(other)
        return BernsteinElem(self.n, combine((self.terms, 1), (other.terms, -1)))

    def __neg__(self) -> "BernsteinElem":
        return BernsteinElem(self.n, scale(self.terms, -1))

    def __mul__(self, other):
        if isinstance(other, BernsteinElem):
            return ah_mul(self, other)
        return BernsteinElem(self.n, scale(self.terms, other))

    def __rmul__(self, other):
        return BernsteinElem(self.n, scale(self.terms, other))

    def sorted_terms(self) -> list[tuple[BKey, LaurentScalar]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c}) Z[{','.join(str(x) for x in a)}] T{format_perm(w)}"
            for (a, w), c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"BernsteinElem(n={self.n}, {str(self)!r})"


def ah_unit(n: int) -> BernsteinElem:
    return BernsteinElem(n, {((0,) * n, identity_perm(n)): ONE})


def ah_scalar(n: int, c: LaurentScalar) -> BernsteinElem:
    return BernsteinElem(n, {((0,) * n, identity_perm(n)): c})


def z_power(n: int, j: int, m: int = 1) -> BernsteinElem:
    if not 1 <= j <= n:
        raise IndexOutOfRangeError(f"Z_{j} does not exist for n={n}")
    a = [0] * n
    a[j - 1] = m
    return BernsteinElem(n, {(tuple(a), identity_perm(n)): ONE})


def z_monomial(a: tuple[int, ...]) -> BernsteinElem:
    return BernsteinElem(len(a), {(tuple(a), identity_perm(len(a))): ONE})


def t_perm(w: Perm) -> BernsteinElem:
    return BernsteinElem(len(w), {((0,) * len(w), tuple(w)): ONE})


def t_gen(n: int, i: int) -> BernsteinElem:
    if not 1 <= i < n:
        raise IndexOutOfRangeError(f"T_{i} does not exist for n={n}")
    return t_perm(left_mul_simple(i, identity_perm(n)))


def t_inverse(n: int, i: int) -> BernsteinElem:
    """T_i^-1 = T_i - (q - q^-1)."""
    return t_gen(n, i) - ah_scalar(n, Q_DIFF)


def left_mul_t(i: int, terms: dict[BKey, object]) -> dict[BKey, object]:
    out: dict = {}
    for (a, w), c in terms.items():
        sa = swap_entries(a, i)
        add_term(out, (sa, left_mul_simple(i, w)), c)
        if is_left_descent(i, w):
            add_term(out, (sa, w), c * Q_DIFF)
        for gamma, sign in divided_difference(a, i):
            add_term(out, (gamma, w), c * Q_DIFF * sign)
    return out


def ah_mul(a: BernsteinElem, b: BernsteinElem) -> BernsteinElem:
    a._check(b)
    out: dict = {}
    for (alpha, w), c in a.terms.items():
        x = b.terms
        for i in reversed(perm_reduced_word(w)):
            x = left_mul_t(i, x)
        for (beta, v), d in x.items():
            key = (tuple(p + s for p, s in zip(alpha, beta)), v)
            add_term(out, key, c * d)
    return BernsteinElem(a.n, out)


def ah_product(n: int, factors) -> BernsteinElem:
    out = ah_unit(n)
    for f in factors:
        out = ah_mul(out, f)
    return out


# --- length-zero generator and bar involution ---------------------------


@lru_cache(maxsize=None)
def pi_image(n: int) -> BernsteinElem:
    """T_pi = Z_1 T_1 T_2 ... T_{n-1}."""
    return ah_product(n, [z_power(n, 1)] + [t_gen(n, i) for i in range(1, n)])


@lru_cache(maxsize=None)
def pi_inverse_image(n: int) -> BernsteinElem:
    return ah_product(n, [t_inverse(n, i) for i in range(n - 1, 0, -1)] + [z_power(n, 1, -1)])


@lru_cache(maxsize=None)
def _bar_z(n: int, j: int, sign: int) -> BernsteinElem:
    """bar(Z_j^sign) for sign = +1 or -1."""
    if j == 1:
        up = [t_gen(n, i) for i in range(1, n)]
        down = list(reversed(up))
        if sign > 0:
            return ah_product(n, [z_power(n, 1)] + up + down)
        inv_up = [t_inverse(n, i) for i in range(1, n)]
        return ah_product(n, inv_up + list(reversed(inv_up)) + [z_power(n, 1, -1)])
    prev = _bar_z(n, j - 1, sign)
    side = t_inverse(n, j - 1) if sign > 0 else t_gen(n, j - 1)
    return ah_product(n, [side, prev, side])


@lru_cache(maxsize=None)
def _bar_z_monomial(a: tuple[int, ...]) -> BernsteinElem:
    n = len(a)
    out = ah_unit(n)
    for j, m in enumerate(a, start=1):
        factor = _bar_z(n, j, 1 if m > 0 else -1)
        for _ in range(abs(m)):
            out = ah_mul(out, factor)
    return out


@lru_cache(maxsize=None)
def _bar_t(w: Perm) -> BernsteinElem:
    n = len(w)
    return ah_product(n, [t_inverse(n, i) for i in perm_reduced_word(w)])


def ah_bar(a: BernsteinElem) -> BernsteinElem:
    """Ring involution with q -> q^-1, T_i -> T_i^-1 and T_pi -> T_pi."""
    out: dict = {}
    for (alpha, w), c in a.terms.items():
        image = ah_mul(_bar_z_monomial(alpha), _bar_t(w))
        cbar = c.bar()
        for key, d in image.terms.items():
            add_term(out, key, cbar * d)
    return BernsteinElem(a.n, out)


bar = ah_bar
