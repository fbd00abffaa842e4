"""
Residue tuples, their S_n-orbits and Young stabilizers.

A residue tuple lambda in {1..r}^n encodes the n-tuple of roots of unity
(zeta^(lambda_1 - 1), ..., zeta^(lambda_n - 1)). The orbit representative
lambda0 is the weakly increasing rearrangement.
"""

from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Sequence

from src.combinatorics.permutations import Perm, act_on_tuple, all_perms
from src.config import get_settings
from src.errors import GuardExceededError, IndexOutOfRangeError, ParameterMismatchError

Residues = tuple[int, ...]


def check_residues(r: int, values: Sequence[int], n: int | None = None) -> Residues:
    lam = tuple(int(v) for v in values)
    if n is not None and len(lam) != n:
        raise ParameterMismatchError(f"residue tuple {lam} should have length {n}")
    if any(not 1 <= v <= r for v in lam):
        raise IndexOutOfRangeError(f"residue tuple {lam} has entries outside 1..{r}")
    return lam


@lru_cache(maxsize=None)
def all_residue_tuples(r: int, n: int) -> tuple[Residues, ...]:
    return tuple(product(range(1, r + 1), repeat=n))


def orbit_rep(lam: Sequence[int]) -> tuple[Residues, int]:
    """(lambda0, n_lambda) with n_lambda = n! / (n_1! ... n_r!)."""
    lam0 = tuple(sorted(lam))
    counts = {}
    for v in lam0:
        counts[v] = counts.get(v, 0) + 1
    size = factorial(len(lam0)) // prod(factorial(c) for c in counts.values())
    return lam0, size


def orbit(lam: Sequence[int]) -> list[Residues]:
    """Distinct rearrangements of lam, sorted."""
    return sorted(set(permutations(lam)))


def same_orbit(lam1: Sequence[int], lam2: Sequence[int]) -> bool:
    return sorted(lam1) == sorted(lam2)


def young_stabilizer(lam: Sequence[int]) -> frozenset[int]:
    """{i : lambda_i = lambda_{i+1}} (1-based)."""
    return frozenset(i for i in range(1, len(lam)) if lam[i - 1] == lam[i])


def stabilizer_perms(lam: Sequence[int]) -> list[Perm]:
    """All w in S_n with w.lambda = lambda."""
    lam = tuple(lam)
    return [w for w in all_perms(len(lam)) if act_on_tuple(w, lam) == lam]


def block_sizes(r: int, lam0: Sequence[int]) -> tuple[int, ...]:
    """(n_1, ..., n_r): how many entries of lambda0 equal each residue."""
    return tuple(sum(1 for v in lam0 if v == k) for k in range(1, r + 1))


def block_offsets(sizes: Sequence[int]) -> tuple[int, ...]:
    offsets, total = [], 0
    for size in sizes:
        offsets.append(total)
        total += size
    return tuple(offsets)


def compositions(r: int, n: int) -> list[tuple[int, ...]]:
    """Weak compositions of n into r parts, in the order of their sorted tuples."""
    if r == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(r - 1, n - first):
            out.append((first,) + rest)
    return out


def orbit_representatives(r: int, n: int) -> list[Residues]:
    reps = []
    for sizes in compositions(r, n):
        reps.append(tuple(k for k, size in enumerate(sizes, start=1) for _ in range(size)))
    return sorted(reps)


def format_residues(lam: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in lam) + ")"


def check_rank_guard(r: int, n: int, guard: int | None = None) -> int:
    """r^n n!, the rank of Y_{r,n}; raises when it exceeds the configured bound."""
    rank = r**n * factorial(n)
    limit = get_settings().max_rank if guard is None else guard
    if rank > limit:
        raise GuardExceededError(f"rank {rank} of (r, n) = ({r}, {n}) exceeds the guard {limit}")
    return rank
