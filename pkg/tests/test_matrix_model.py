"""Matrix model E^_{r,n}: blocks, tau, Psi/Phi and the bases on both sides."""

import random

import pytest

from src.algebras.idempotent import g_gen, hhat_unit, idempotent, nf
from src.algebras.matrix_model import (
    EElement,
    block_decompose,
    c_basis_elem,
    c_basis_solve,
    e_bar,
    e_involution,
    e_unit,
    e_zero,
    from_matrix_model,
    isomorphism_suite,
    make_tau,
    orbit_block_matrix,
    random_sorting_word,
    rank_identity,
    tau_suite,
    tau_table,
    to_matrix_model,
    x_basis_elem,
    x_coordinates,
    young_ball,
)
from src.coeffs.laurent import ONE
from src.combinatorics.affine_weyl import ext_identity, simple_reflection, translation
from src.combinatorics.residues import all_residue_tuples
from src.errors import AlgebraError, GuardExceededError, NotInBasisError


def test_block_decomposition_r2_n2():
    rows = [(row.lam0, row.n_lambda, row.sizes) for row in block_decompose(2, 2)]
    assert rows == [((1, 1), 1, (2, 0)), ((1, 2), 2, (1, 1)), ((2, 2), 1, (0, 2))]
    assert sum(row.rank for row in block_decompose(2, 2)) == 8


def test_block_decomposition_single_residue():
    rows = block_decompose(1, 3)
    assert len(rows) == 1
    assert rows[0].rank == 6


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rank_identity(r, n):
    total, expected = rank_identity(r, n)
    assert total == expected


def test_rank_r2_n3():
    assert rank_identity(2, 3) == (48, 48)


def test_tau_for_two_one():
    pair = make_tau(2, (2, 1))
    assert pair.word == (1,)
    assert pair.tau == g_gen(2, 2, 1)
    assert pair.tau_prime == g_gen(2, 2, 1)
    assert make_tau(2, (1, 2)).word == ()


def test_tau_rejects_bad_words():
    with pytest.raises(AlgebraError):
        make_tau(2, (2, 1), (1, 1))
    with pytest.raises(AlgebraError):
        make_tau(2, (1, 2), (1,))


def test_random_sorting_words_are_valid():
    rng = random.Random(3)
    for lam in all_residue_tuples(3, 3):
        make_tau(3, lam, random_sorting_word(lam, rng))


def test_units_correspond():
    assert e_unit(2, 2) * e_zero(2, 2) == e_zero(2, 2)
    assert not e_zero(2, 2)
    assert to_matrix_model(hhat_unit(2, 2)) == e_unit(2, 2)
    assert from_matrix_model(e_unit(2, 2)) == hhat_unit(2, 2)


def test_psi_is_multiplicative_on_words():
    a, b = nf(2, 2, "g1 X1 1(1,2)"), nf(2, 2, "X2^-1 g1^-1")
    assert to_matrix_model(a * b) == to_matrix_model(a) * to_matrix_model(b)


def test_phi_psi_with_random_taus():
    taus = tau_table(2, 3, random.Random(1))
    h = nf(2, 3, "g2 X1 g1 1(2,1,1)")
    assert from_matrix_model(to_matrix_model(h, taus), taus) == h


def test_blocks_stay_in_one_orbit():
    with pytest.raises(NotInBasisError):
        EElement(2, 2, {((1, 2), (1, 1)): idempotent(2, (1, 1))})
    with pytest.raises(NotInBasisError):
        x_basis_elem(2, (1, 2), (2, 1), simple_reflection(2, 1))


def test_x_basis_coordinates():
    x = x_basis_elem(2, (1, 2), (2, 1), translation((1, 0)))
    assert x_coordinates(x) == {((1, 2), (2, 1), translation((1, 0))): ONE}


def test_involution_swaps_labels_and_inverts():
    s1 = simple_reflection(2, 1)
    x = x_basis_elem(2, (1, 1), (1, 1), s1)
    assert e_involution(x) == x
    y = x_basis_elem(2, (1, 2), (2, 1), translation((1, -1)))
    assert e_involution(y) == x_basis_elem(2, (2, 1), (1, 2), translation((-1, 1)))


def test_involution_is_anti_multiplicative():
    x = x_basis_elem(2, (1, 2), (2, 1), translation((1, 0)))
    y = x_basis_elem(2, (2, 1), (1, 2), translation((0, -1))) + x_basis_elem(2, (2, 1), (2, 1), ext_identity(2))
    assert e_involution(x * y) == e_involution(y) * e_involution(x)
    assert e_involution(e_involution(y)) == y


def test_bar_is_an_involution():
    x = x_basis_elem(2, (1, 1), (1, 1), simple_reflection(2, 0))
    assert e_bar(e_bar(x)) == x


@pytest.mark.parametrize("lam1, lam2, x", [
    ((1, 1), (1, 1), simple_reflection(2, 1)),
    ((1, 1), (1, 1), simple_reflection(2, 0)),
    ((1, 2), (2, 1), translation((1, 0))),
])
def test_canonical_basis_two_ways(lam1, lam2, x):
    assert c_basis_solve(2, lam1, lam2, x) == c_basis_elem(2, lam1, lam2, x)


def test_orbit_block_matrix():
    blocks = orbit_block_matrix(e_unit(2, 2), (1, 2))
    assert blocks.shape == (2, 2)
    assert blocks[0, 0] == idempotent(2, (1, 2))
    assert not blocks[0, 1]


def test_young_ball_stays_in_the_young_group():
    ball = young_ball(2, (1, 1), 1)
    assert ext_identity(2) in ball
    assert simple_reflection(2, 1) in ball
    assert all(x.perm in ((1, 2), (2, 1)) for x in ball)
    assert young_ball(2, (1, 2), 0) == [ext_identity(2)]


ISO_SIZES = [(2, 2), (3, 2), (2, 3)]


@pytest.mark.parametrize("r, n", ISO_SIZES)
def test_isomorphism_suite_passes(r, n):
    result = isomorphism_suite(r, n, max_length=1, max_deg=1, samples=10)
    assert result.passed, [c.to_dict() for c in result.failures()]


@pytest.mark.slow
@pytest.mark.parametrize("r, n", ISO_SIZES)
def test_isomorphism_suite_at_full_bounds(r, n):
    # x-basis round trip to length 3, basis correspondence to length 2
    result = isomorphism_suite(r, n, max_length=3, max_deg=1, samples=100, seed=11)
    assert result.passed, [c.to_dict() for c in result.failures()]
    assert result.parameters["maxlen"] == 3


def test_length_guard_does_not_bound_the_rank():
    result = isomorphism_suite(2, 3, max_length=1, samples=2, guard=8)
    assert result.passed, [c.to_dict() for c in result.failures()]
    with pytest.raises(GuardExceededError):
        isomorphism_suite(2, 3, max_length=1, samples=2, rank_guard=8)
    with pytest.raises(GuardExceededError):
        isomorphism_suite(2, 2, max_length=3, samples=2, guard=2)


def test_tau_suite_passes():
    result = tau_suite(2, 3, samples=3)
    assert result.passed, [c.to_dict() for c in result.failures()]
