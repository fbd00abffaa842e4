"""
The extended affine Weyl group W^ = Z^n x| S_n of type A.

An element t_lambda w acts on R^n by x -> lambda + w.x. The fundamental alcove
is x_1 > x_2 > ... > x_n > x_1 - 1, whose walls give the Coxeter generators
s_1..s_{n-1} (swap coordinates) and s_0 = t_{e_1 - e_n} (1 n). Lengths count
separating hyperplanes x_i - x_j = k:

    l(t_lambda w) = sum_{i<j} |lambda_i - lambda_j - [w^-1(i) > w^-1(j)]|

pi = t_{e_1} (1 2 ... n) has length zero and satisfies pi s_i pi^-1 = s_{i+1 mod n}.
Every element factors uniquely as u pi^m with u in the affine Weyl group and
m = sum(lambda); reduced words are reported for u with pi kept on the right.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from src.combinatorics.permutations import (
    Perm,
    act_on_tuple,
    check_perm,
    identity_perm,
    perm_inverse,
    perm_mul,
    perm_reduced_word,
)
from src.config import get_settings
from src.errors import GuardExceededError, IndexOutOfRangeError, MalformedWordError, ParameterMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class ExtAffineElem:
    trans: tuple[int, ...]
    perm: Perm

    def __post_init__(self):
        if len(self.trans) != len(self.perm):
            raise ParameterMismatchError("translation and permutation sizes differ")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def pi_exponent(self) -> int:
        return sum(self.trans)

    def __str__(self) -> str:
        parts = []
        if any(self.trans):
            parts.append("t[" + ",".join(str(x) for x in self.trans) + "]")
        parts.extend(f"s{i}" for i in perm_reduced_word(self.perm))
        return "*".join(parts) if parts else "e"


def ext_identity(n: int) -> ExtAffineElem:
    return ExtAffineElem((0,) * n, identity_perm(n))


def translation(values: Sequence[int]) -> ExtAffineElem:
    return ExtAffineElem(tuple(values), identity_perm(len(values)))


def finite(w: Perm) -> ExtAffineElem:
    return ExtAffineElem((0,) * len(w), tuple(w))


def generator_indices(n: int) -> list[int]:
    """Indices of the Coxeter generators s_0..s_{n-1}; none when n = 1."""
    return list(range(n)) if n >= 2 else []


def simple_reflection(n: int, i: int) -> ExtAffineElem:
    if n < 2 or not 0 <= i < n:
        raise IndexOutOfRangeError(f"s_{i} is not a generator of the affine Weyl group for n={n}")
    w = list(range(1, n + 1))
    if i == 0:
        w[0], w[n - 1] = w[n - 1], w[0]
        trans = [0] * n
        trans[0], trans[n - 1] = 1, -1
        return ExtAffineElem(tuple(trans), tuple(w))
    w[i - 1], w[i] = w[i], w[i - 1]
    return ExtAffineElem((0,) * n, tuple(w))


def pi_element(n: int) -> ExtAffineElem:
    trans = (1,) + (0,) * (n - 1)
    cycle = tuple(range(2, n + 1)) + (1,)
    return ExtAffineElem(trans, cycle)


def ext_mul(a: ExtAffineElem, b: ExtAffineElem) -> ExtAffineElem:
    """(lambda, u)(mu, v) = (lambda + u.mu, uv)."""
    if a.n != b.n:
        raise ParameterMismatchError(f"sizes differ: {a.n} vs {b.n}")
    moved = act_on_tuple(a.perm, b.trans)
    return ExtAffineElem(
        tuple(x + y for x, y in zip(a.trans, moved)),
        perm_mul(a.perm, b.perm),
    )


def ext_inverse(a: ExtAffineElem) -> ExtAffineElem:
    inv = perm_inverse(a.perm)
    moved = act_on_tuple(inv, a.trans)
    return ExtAffineElem(tuple(-x for x in moved), inv)


def pi_power(n: int, k: int) -> ExtAffineElem:
    base = pi_element(n) if k >= 0 else ext_inverse(pi_element(n))
    out = ext_identity(n)
    for _ in range(abs(k)):
        out = ext_mul(out, base)
    return out


def ext_length(a: ExtAffineElem) -> int:
    lam = a.trans
    inv = perm_inverse(a.perm)
    n = a.n
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            chi = 1 if inv[i] > inv[j] else 0
            total += abs(lam[i] - lam[j] - chi)
    return total


def affine_part(a: ExtAffineElem) -> ExtAffineElem:
    """u with a = u pi^m."""
    return ext_mul(a, pi_power(a.n, -a.pi_exponent))


def ext_reduced_word(a: ExtAffineElem) -> tuple[list[int], int]:
    """(word, m) with a = s_word pi^m; the word is the lexicographically smallest reduced word."""
    n = a.n
    m = a.pi_exponent
    u = affine_part(a)
    word = []
    length = ext_length(u)
    while length > 0:
        for i in generator_indices(n):
            candidate = ext_mul(simple_reflection(n, i), u)
            cand_len = ext_length(candidate)
            if cand_len < length:
                word.append(i)
                u, length = candidate, cand_len
                break
        else:
            raise RuntimeError(f"no descent found for {a}")
    return word, m


def word_to_elem(n: int, word: Iterable[int], m: int = 0) -> ExtAffineElem:
    out = pi_power(n, m)
    for i in reversed(list(word)):
        out = ext_mul(simple_reflection(n, i), out)
    return out


def parse_ext(n: int, text: str) -> ExtAffineElem:
    """Parse products like "t[1,0]*s1", "s0*pi^-1" or "e"."""
    out = ext_identity(n)
    start = 0
    for segment in text.split("*"):
        # positions index the original text, spaces included
        pos = start + len(segment) - len(segment.lstrip())
        start += len(segment) + 1
        token = segment.replace(" ", "")
        try:
            if token in ("", "e"):
                factor = ext_identity(n)
            elif token.startswith("t[") and token.endswith("]"):
                values = [int(v) for v in token[2:-1].split(",") if v != ""]
                if len(values) != n:
                    raise MalformedWordError("translation has wrong length", text, pos)
                factor = translation(values)
            elif token.startswith("pi"):
                k = int(token[3:]) if token.startswith("pi^") else 1
                if token not in ("pi",) and not token.startswith("pi^"):
                    raise MalformedWordError("unknown letter", text, pos)
                factor = pi_power(n, k)
            elif token.startswith("s"):
                factor = simple_reflection(n, int(token[1:]))
            else:
                raise MalformedWordError("unknown letter", text, pos)
        except (ValueError, IndexOutOfRangeError) as exc:
            if isinstance(exc, MalformedWordError):
                raise
            raise MalformedWordError(f"bad letter {token!r}", text, pos) from exc
        out = ext_mul(out, factor)
    return out


def bfs_lengths(n: int, max_length: int, window: Sequence[int] = (0,)) -> dict[ExtAffineElem, int]:
    """
    Word-length oracle: breadth-first search from pi^k (k in window) by left
    multiplication with the Coxeter generators.
    """
    dist: dict[ExtAffineElem, int] = {}
    queue: deque[ExtAffineElem] = deque()
    for k in window:
        start = pi_power(n, k)
        dist[start] = 0
        queue.append(start)
    gens = [simple_reflection(n, i) for i in generator_indices(n)]
    while queue:
        x = queue.popleft()
        if dist[x] == max_length:
            continue
        for s in gens:
            y = ext_mul(s, x)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _check_guard(length: int, guard: int | None) -> None:
    if guard is None:
        guard = get_settings().max_ball_length
    if length > guard:
        raise GuardExceededError(f"length {length} exceeds the enumeration guard {guard}")


def enumerate_ball(
    n: int,
    max_length: int,
    window: Sequence[int] = (0,),
    guard: int | None = None,
) -> set[ExtAffineElem]:
    """All elements of length <= max_length whose pi-exponent lies in window."""
    _check_guard(max_length, guard)
    ball = set(bfs_lengths(n, max_length, window))
    logger.debug("ball n=%d L=%d window=%s has %d elements", n, max_length, list(window), len(ball))
    return ball


def bruhat_lower_set(b: ExtAffineElem, guard: int | None = None) -> set[ExtAffineElem]:
    """{a : a <= b}, via products of subwords of a reduced word of b."""
    _check_guard(ext_length(b), guard)
    n = b.n
    word, m = ext_reduced_word(b)
    products = {ext_identity(n)}
    for i in word:
        s = simple_reflection(n, i)
        products |= {ext_mul(x, s) for x in products}
    tail = pi_power(n, m)
    return {ext_mul(x, tail) for x in products}


def bruhat_leq(a: ExtAffineElem, b: ExtAffineElem, guard: int | None = None) -> bool:
    if a.n != b.n:
        raise ParameterMismatchError(f"sizes differ: {a.n} vs {b.n}")
    if a.pi_exponent != b.pi_exponent:
        return False
    if ext_length(a) > ext_length(b):
        return False
    return a in bruhat_lower_set(b, guard)


def ext_sort_key(a: ExtAffineElem) -> tuple:
    """Deterministic order: length, pi-exponent, then the canonical reduced word."""
    word, m = ext_reduced_word(a)
    return (len(word), m, word)
