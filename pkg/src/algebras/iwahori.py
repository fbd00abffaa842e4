"""
The Iwahori-Matsumoto basis {T_w^ : w^ in W^} of H^_n.

T_s T_x = T_sx if l(sx) > l(x), else T_sx + (q - q^-1) T_x, and T_pi T_x = T_(pi x).
Conversion to the Bernstein basis uses T_pi = Z_1 T_1 ... T_{n-1} and
T_{s_0} = T_pi^-1 T_1 T_pi; conversion back uses
Z_1 = T_pi T_{n-1}^-1 ... T_1^-1 and Z_{j+1} = T_j Z_j T_j.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from src.algebras.bernstein import (
    BernsteinElem,
    ah_product,
    ah_scalar,
    ah_unit,
    pi_image,
    pi_inverse_image,
    t_gen,
    z_power,
)
from src.algebras.sparse import add_term, combine, pruned, scale
from src.coeffs.laurent import ONE, Q_DIFF, LaurentScalar
from src.combinatorics.affine_weyl import (
    ExtAffineElem,
    _check_guard,
    ext_identity,
    ext_inverse,
    ext_length,
    ext_mul,
    ext_reduced_word,
    ext_sort_key,
    finite,
    pi_power,
    simple_reflection,
)
from src.algebras.words import AH_LETTERS, GenWord, parse_word
from src.errors import AlgebraError, ParameterMismatchError


@dataclass(frozen=True, eq=False)
class IMElement:
    n: int
    terms: dict[ExtAffineElem, LaurentScalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", pruned(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IMElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def _check(self, other: "IMElement") -> None:
        if self.n != other.n:
            raise ParameterMismatchError(f"sizes differ: {self.n} vs {other.n}")

    def __add__(self, other: "IMElement") -> "IMElement":
        self._check(other)
        return IMElement(self.n, combine((self.terms, 1), (other.terms, 1)))

    def __sub__(self, other: "IMElement") -> "IMElement":
        self._check(other)
        return IMElement(self.n, combine((self.terms, 1), (other.terms, -1)))

    def __mul__(self, other):
        if isinstance(other, IMElement):
            return im_mul(self, other)
        return IMElement(self.n, scale(self.terms, other))

    def __rmul__(self, other):
        return IMElement(self.n, scale(self.terms, other))

    def coefficient(self, w: ExtAffineElem) -> LaurentScalar:
        return self.terms.get(w, LaurentScalar())

    def sorted_terms(self) -> list[tuple[ExtAffineElem, LaurentScalar]]:
        return sorted(self.terms.items(), key=lambda kv: ext_sort_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) T{{{w}}}" for w, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"IMElement(n={self.n}, {str(self)!r})"


def im_basis(w: ExtAffineElem) -> IMElement:
    return IMElement(w.n, {w: ONE})


def _left_generator(n: int, i: int, terms: dict) -> dict:
    s = simple_reflection(n, i)
    out: dict = {}
    for x, c in terms.items():
        sx = ext_mul(s, x)
        add_term(out, sx, c)
        if ext_length(sx) < ext_length(x):
            add_term(out, x, c * Q_DIFF)
    return out


def _left_generator_inverse(n: int, i: int, terms: dict) -> dict:
    """T_s^-1 = T_s - (q - q^-1)."""
    out = _left_generator(n, i, terms)
    for x, c in terms.items():
        add_term(out, x, -(c * Q_DIFF))
    return out


def _left_pi(n: int, m: int, terms: dict) -> dict:
    p = pi_power(n, m)
    return {ext_mul(p, x): c for x, c in terms.items()}


def im_mul(a: IMElement, b: IMElement) -> IMElement:
    a._check(b)
    n = a.n
    out: dict = {}
    for x, c in a.terms.items():
        word, m = ext_reduced_word(x)
        y = _left_pi(n, m, b.terms)
        for i in reversed(word):
            y = _left_generator(n, i, y)
        for key, d in y.items():
            add_term(out, key, c * d)
    return IMElement(n, out)


@lru_cache(maxsize=None)
def im_bar_basis(w: ExtAffineElem) -> IMElement:
    """bar(T_w) = T_{i1}^-1 ... T_{ik}^-1 T_pi^m in the IM basis."""
    n = w.n
    word, m = ext_reduced_word(w)
    terms = {pi_power(n, m): ONE}
    for i in reversed(word):
        terms = _left_generator_inverse(n, i, terms)
    return IMElement(n, terms)


def im_bar(a: IMElement) -> IMElement:
    out: dict = {}
    for w, c in a.terms.items():
        cbar = c.bar()
        for key, d in im_bar_basis(w).terms.items():
            add_term(out, key, cbar * d)
    return IMElement(a.n, out)


def im_anti_involution(a: IMElement) -> IMElement:
    """The A-linear anti-involution T_w -> T_{w^-1}."""
    return IMElement(a.n, {ext_inverse(w): c for w, c in a.terms.items()})


# --- conversion to and from the Bernstein basis -------------------------


@lru_cache(maxsize=None)
def _generator_image(n: int, i: int) -> BernsteinElem:
    if i == 0:
        return ah_product(n, [pi_inverse_image(n), t_gen(n, 1), pi_image(n)])
    return t_gen(n, i)


@lru_cache(maxsize=None)
def im_to_bernstein(w: ExtAffineElem, guard: int | None = None) -> BernsteinElem:
    """T_w in the Z^a T_v basis, along the canonical reduced word."""
    _check_guard(ext_length(w), guard)
    n = w.n
    word, m = ext_reduced_word(w)
    factors = [_generator_image(n, i) for i in word]
    base = pi_image(n) if m >= 0 else pi_inverse_image(n)
    factors.extend([base] * abs(m))
    return ah_product(n, factors)


def im_expansion_to_bernstein(a: IMElement) -> BernsteinElem:
    out: dict = {}
    for w, c in a.terms.items():
        for key, d in im_to_bernstein(w).terms.items():
            add_term(out, key, c * d)
    return BernsteinElem(a.n, out)


def _im_unit(n: int) -> IMElement:
    return im_basis(ext_identity(n))


@lru_cache(maxsize=None)
def _z_in_im(n: int, j: int, sign: int) -> IMElement:
    if j == 1:
        if sign > 0:
            terms = {ext_identity(n): ONE}
            for i in range(1, n):
                terms = _left_generator_inverse(n, i, terms)
            return IMElement(n, _left_pi(n, 1, terms))
        terms = {pi_power(n, -1): ONE}
        for i in range(n - 1, 0, -1):
            terms = _left_generator(n, i, terms)
        return IMElement(n, terms)
    prev = _z_in_im(n, j - 1, sign)
    side_terms = {ext_identity(n): ONE}
    if sign > 0:
        side = IMElement(n, _left_generator(n, j - 1, side_terms))
    else:
        side = IMElement(n, _left_generator_inverse(n, j - 1, side_terms))
    return im_mul(im_mul(side, prev), side)


@lru_cache(maxsize=None)
def _z_monomial_in_im(a: tuple[int, ...]) -> IMElement:
    n = len(a)
    out = _im_unit(n)
    for j, m in enumerate(a, start=1):
        factor = _z_in_im(n, j, 1 if m > 0 else -1)
        for _ in range(abs(m)):
            out = im_mul(out, factor)
    return out


def bernstein_to_im(b: BernsteinElem) -> IMElement:
    out: dict = {}
    for (a, w), c in b.terms.items():
        image = im_mul(_z_monomial_in_im(a), im_basis(finite(w)))
        for key, d in image.terms.items():
            add_term(out, key, c * d)
    return IMElement(b.n, out)


# --- generator words -----------------------------------------------------


def _ah_letter(n: int, word: GenWord, letter) -> BernsteinElem:
    try:
        if letter.is_unit:
            return ah_unit(n)
        if letter.name == "1":
            raise AlgebraError("idempotents do not exist in H^_n")
        if letter.name == "Z":
            return z_power(n, letter.index, letter.exponent)
        if letter.name == "pi":
            base = pi_image(n) if letter.exponent >= 0 else pi_inverse_image(n)
            return ah_product(n, [base] * abs(letter.exponent))
        if not 0 <= letter.index < n or (letter.index == 0 and n < 2):
            raise AlgebraError(f"T_{letter.index} does not exist for n={n}")
        base = _generator_image(n, letter.index)
        if letter.exponent < 0:
            base = base - ah_scalar(n, Q_DIFF)
        return ah_product(n, [base] * abs(letter.exponent))
    except AlgebraError as exc:
        raise word.error(letter, str(exc)) from exc


def ah_nf(n: int, word: "str | GenWord") -> BernsteinElem:
    """Normal form of a word in T_0..T_{n-1}, Z_j and pi in the basis Z^a T_w."""
    if isinstance(word, str):
        word = parse_word(word, AH_LETTERS)
    return ah_product(n, [_ah_letter(n, word, letter) for letter in word])
