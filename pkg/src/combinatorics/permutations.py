"""
Permutations of {1..n} in one-line notation.

A permutation is a plain tuple w with w[i-1] = w(i). Products compose right
to left: (uv)(i) = u(v(i)). Simple transpositions are indexed 1..n-1.
"""

from itertools import permutations
from typing import Iterable, Sequence

from src.errors import IndexOutOfRangeError, NotInBasisError

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(1, len(images) + 1))


def check_perm(images: Sequence[int]) -> Perm:
    w = tuple(int(v) for v in images)
    if not is_perm(w):
        raise NotInBasisError(f"{list(images)} is not a permutation in one-line notation")
    return w


def simple_transposition(n: int, i: int) -> Perm:
    if not 1 <= i < n:
        raise IndexOutOfRangeError(f"s_{i} does not exist in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def perm_mul(u: Perm, v: Perm) -> Perm:
    return tuple(u[x - 1] for x in v)


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        inv[x - 1] = i
    return tuple(inv)


def perm_length(w: Perm) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def left_mul_simple(i: int, w: Perm) -> Perm:
    """s_i w: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def is_left_descent(i: int, w: Perm) -> bool:
    """l(s_i w) < l(w), i.e. i+1 appears before i in w."""
    return w.index(i + 1) < w.index(i)


def perm_reduced_word(w: Perm) -> list[int]:
    """Lexicographically smallest reduced word (greedy smallest left descent)."""
    word = []
    n = len(w)
    while True:
        for i in range(1, n):
            if is_left_descent(i, w):
                word.append(i)
                w = left_mul_simple(i, w)
                break
        else:
            return word


def perm_from_word(n: int, word: Iterable[int]) -> Perm:
    w = identity_perm(n)
    for i in reversed(list(word)):
        w = left_mul_simple(i, w)
    return w


def act_on_tuple(w: Perm, values: Sequence) -> tuple:
    """(w.v)_i = v_{w^-1(i)}."""
    out = [None] * len(values)
    for j, x in enumerate(w):
        out[x - 1] = values[j]
    return tuple(out)


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in permutations(range(1, n + 1))]


def format_perm(w: Perm) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"
