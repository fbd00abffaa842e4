"""
Named verification suites.

Each entry of SUITES takes the same keyword arguments (r, n, max_length,
max_deg, samples, seed, guard, rank_guard) and returns a VerificationResult, so the CLI
can dispatch on the suite name alone.
"""

import logging
from typing import Callable

from src.algebras.bernstein import ah_bar
from src.algebras.canonical import is_canonical, kl_basis
from src.algebras.idempotent import hhat_relation_suite
from src.algebras.iwahori import IMElement, im_bar, im_bar_basis, im_basis, im_expansion_to_bernstein, im_to_bernstein
from src.algebras.matrix_model import isomorphism_suite, tau_suite
from src.algebras.tensor import phi_suite
from src.algebras.yokonuma import affine_image_relation_suite, y_relation_suite
from src.calculators.verification import VerificationResult, _record, _run_check
from src.cellular.suite import cellular_suite
from src.coeffs.laurent import LaurentScalar
from src.combinatorics.affine_weyl import (
    bruhat_lower_set,
    enumerate_ball,
    ext_length,
    ext_sort_key,
    finite,
)
from src.combinatorics.permutations import all_perms, identity_perm, simple_transposition

logger = logging.getLogger(__name__)


def _p1_oracle(w) -> IMElement:
    """sum_{y <= w} q^(l(y) - l(w)) T_y: the canonical element when every KL polynomial is 1."""
    top = ext_length(w)
    return IMElement(w.n, {y: LaurentScalar.q(ext_length(y) - top) for y in bruhat_lower_set(w)})


def kl_suite(n: int, max_length: int = 3, guard: int | None = None) -> VerificationResult:
    """Bar involution and canonical basis of the extended affine Hecke algebra on a length ball."""
    result = VerificationResult("kl", {"n": n, "maxlen": max_length})
    checks = result.checks
    ball = sorted(enumerate_ball(n, max_length, guard=guard), key=ext_sort_key)
    rows = [["w", "y", "l(y)", "p(y,w)"]]
    bad_invol, bad_bernstein, bad_canonical = "", "", ""
    for w in ball:
        t_w = im_basis(w)
        if not bad_invol and im_bar(im_bar(t_w)) != t_w:
            bad_invol = str(w)
        if not bad_bernstein and im_expansion_to_bernstein(im_bar_basis(w)) != ah_bar(im_to_bernstein(w, guard)):
            bad_bernstein = str(w)
        c_w = kl_basis(w, guard)
        if not bad_canonical and not is_canonical(c_w.expansion, w):
            bad_canonical = f"c_{w} = {c_w.expansion}"
        for y, length, p in c_w.table():
            rows.append([str(w), str(y), str(length), str(p)])
    checks.append(_record("bar-involution", "bar is an involution", "bar(bar(T_w)) = T_w",
                          not bad_invol, bad_invol))
    checks.append(_record("bar-bernstein", "bar agrees with the Bernstein presentation",
                          "bar(T_w) computed in both presentations", not bad_bernstein, bad_bernstein))
    checks.append(_record("canonical", "c_w is bar-invariant and unitriangular",
                          "bar(c_w) = c_w, c_w in T_w + sum q^-1 Z[q^-1] T_y", not bad_canonical, bad_canonical))
    if n >= 2:
        s1 = finite(simple_transposition(n, 1))
        unit = IMElement(n, {finite(identity_perm(n)): LaurentScalar.q(-1)})
        checks.append(_run_check(
            "c_s1", "canonical element of a simple reflection", "c_s1 = T_s1 + q^-1",
            lambda: (kl_basis(s1, guard).expansion, im_basis(s1) + unit),
        ))
    if n == 3:
        for w in all_perms(3):
            checks.append(_run_check(
                f"p1_oracle_{''.join(map(str, w))}", "finite canonical basis of S_3 has P = 1",
                "c_w = sum_{y <= w} q^(l(y) - l(w)) T_y",
                lambda w=w: (kl_basis(finite(w), guard).expansion, _p1_oracle(finite(w))),
            ))
    result.tables["kl"] = rows
    logger.info("kl n=%d L=%d: %d elements, %d failed checks", n, max_length, len(ball), result.fail_count)
    return result


def _relations_y(r, n, rank_guard, **_):
    return y_relation_suite(r, n, rank_guard)


def _relations_hhat(r, n, rank_guard, **_):
    return hhat_relation_suite(r, n, rank_guard)


def _iso(r, n, max_length, max_deg, samples, seed, guard, rank_guard):
    result = isomorphism_suite(r, n, max_length, max_deg, samples, seed, guard, rank_guard)
    result.extend(phi_suite(r, n, samples, seed, rank_guard))
    result.extend(affine_image_relation_suite(r, n, rank_guard))
    return result


def _tau(r, n, samples, seed, guard, rank_guard, **_):
    return tau_suite(r, n, min(samples, 10), seed, guard, rank_guard)


def _kl(n, max_length, guard, **_):
    return kl_suite(n, max_length, guard)


def _cellular(r, n, samples, seed, rank_guard, **_):
    return cellular_suite(r, n, min(samples, 20), seed, rank_guard)


SUITES: dict[str, Callable[..., VerificationResult]] = {
    "relations-Y": _relations_y,
    "relations-Hhat": _relations_hhat,
    "iso-roundtrip": _iso,
    "tau-identities": _tau,
    "kl": _kl,
    "cellular": _cellular,
}


def run_suite(
    name: str,
    r: int = 2,
    n: int = 2,
    max_length: int = 2,
    max_deg: int = 1,
    samples: int = 100,
    seed: int = 0,
    guard: int | None = None,
    rank_guard: int | None = None,
) -> VerificationResult:
    """Dispatch on the suite name. guard bounds enumeration lengths, rank_guard bounds r^n n!."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    logger.info("running suite %s (r=%d, n=%d, seed=%d)", name, r, n, seed)
    return SUITES[name](
        r=r, n=n, max_length=max_length, max_deg=max_deg, samples=samples, seed=seed,
        guard=guard, rank_guard=rank_guard,
    )
