"""Extended affine Hecke algebra: Bernstein and IM bases, bar involution, canonical basis."""

import random

import pytest

from src.algebras.bernstein import ah_bar, ah_unit, pi_image, t_gen, z_monomial, z_power
from src.algebras.canonical import is_canonical, kl_basis
from src.algebras.idempotent import x_power, g_gen, idempotent, h_mul
from src.algebras.iwahori import (
    IMElement,
    ah_nf,
    bernstein_to_im,
    im_anti_involution,
    im_bar,
    im_basis,
    im_mul,
    im_to_bernstein,
)
from src.algebras.tensor import (
    TensorElem,
    phi,
    phi_bar,
    phi_inverse,
    phi_suite,
    pure,
    random_young_element,
    tensor_bar,
    tensor_mul,
    tensor_unit,
    young_generators,
)
from src.calculators.suites import kl_suite
from src.coeffs.laurent import ONE, Q_DIFF, LaurentScalar
from src.combinatorics.affine_weyl import (
    bruhat_lower_set,
    enumerate_ball,
    ext_identity,
    ext_length,
    ext_mul,
    finite,
    pi_power,
    simple_reflection,
    translation,
)
from src.combinatorics.permutations import all_perms
from src.combinatorics.residues import orbit_representatives
from src.errors import MalformedWordError, NotInBasisError


def test_translation_and_pi_images():
    assert im_to_bernstein(translation((0, 1))) == z_power(2, 2)
    assert im_to_bernstein(pi_power(2, 2)) == z_monomial((1, 1))
    assert im_to_bernstein(pi_power(3, 1)) == pi_image(3)


def test_bernstein_relation():
    assert ah_nf(2, "T1 Z1 T1") == z_power(2, 2)
    expected = z_power(2, 1) * t_gen(2, 1) + Q_DIFF * z_power(2, 2)
    assert ah_nf(2, "T1 Z2") == expected


def test_words():
    assert ah_nf(2, "T1 T1") == ah_unit(2) + t_gen(2, 1) * Q_DIFF
    assert ah_nf(3, "T2^-1 T2") == ah_unit(3)
    assert ah_nf(2, "pi pi^-1") == ah_unit(2)
    assert ah_nf(2, "T0") == im_to_bernstein(simple_reflection(2, 0))
    assert ah_nf(3, "pi^-1 T1 pi") == im_to_bernstein(simple_reflection(3, 0))


def test_word_errors():
    with pytest.raises(MalformedWordError) as info:
        ah_nf(2, "T1 T2")
    assert info.value.position == 3
    with pytest.raises(MalformedWordError):
        ah_nf(2, "1(1,2)")
    with pytest.raises(MalformedWordError):
        ah_nf(1, "T0")


def test_iwahori_matsumoto_quadratic():
    s1 = simple_reflection(2, 1)
    e = ext_identity(2)
    assert im_mul(im_basis(s1), im_basis(s1)) == im_basis(e) + im_basis(s1) * Q_DIFF
    pi = pi_power(2, 1)
    assert im_mul(im_basis(pi), im_basis(s1)) == im_basis(ext_mul(pi, s1))


@pytest.mark.parametrize("n", [2, 3])
def test_im_bernstein_round_trip(n):
    for w in enumerate_ball(n, 2, window=(-1, 0, 1)):
        assert bernstein_to_im(im_to_bernstein(w)) == im_basis(w)


def test_bar_is_an_involution():
    for w in enumerate_ball(2, 3):
        assert im_bar(im_bar(im_basis(w))) == im_basis(w)
    x = ah_nf(3, "T1 Z2 T2^-1 pi")
    assert ah_bar(ah_bar(x)) == x


def test_bar_fixes_pi_and_inverts_generators():
    assert ah_bar(pi_image(2)) == pi_image(2)
    assert ah_bar(t_gen(2, 1)) == ah_nf(2, "T1^-1")


def test_anti_involution():
    x = ext_mul(simple_reflection(3, 0), pi_power(3, 1))
    a = im_basis(x) + im_basis(simple_reflection(3, 2)) * LaurentScalar.q(2)
    assert im_anti_involution(im_anti_involution(a)) == a


def test_c_s1():
    s1 = simple_reflection(2, 1)
    expected = IMElement(2, {s1: ONE, ext_identity(2): LaurentScalar.q(-1)})
    assert kl_basis(s1).expansion == expected


@pytest.mark.parametrize("w", all_perms(3))
def test_s3_canonical_basis_has_trivial_polynomials(w):
    top = finite(w)
    oracle = IMElement(3, {
        y: LaurentScalar.q(ext_length(y) - ext_length(top)) for y in bruhat_lower_set(top)
    })
    assert kl_basis(top).expansion == oracle


def test_canonical_elements_on_a_ball():
    for w in enumerate_ball(2, 3, window=(0, 1)):
        c_w = kl_basis(w)
        assert is_canonical(c_w.expansion, w)
        assert c_w.table()[0][0] == w


def test_is_canonical_rejects_standard_basis():
    s1 = simple_reflection(2, 1)
    assert not is_canonical(im_basis(s1), s1)


@pytest.mark.parametrize("n, max_length", [(2, 4), (3, 3)])
def test_kl_suite_passes(n, max_length):
    result = kl_suite(n, max_length)
    assert result.passed, [c.to_dict() for c in result.failures()]
    assert result.tables["kl"][0] == ["w", "y", "l(y)", "p(y,w)"]


def test_phi_is_multiplicative():
    a = ah_nf(2, "T1 Z1")
    b = ah_nf(2, "Z2^-1 T1^-1 Z1")
    assert phi(a * b, (1, 1), 2) == h_mul(phi(a, (1, 1), 2), phi(b, (1, 1), 2))
    assert phi(t_gen(2, 1), (1, 1), 2) == idempotent(2, (1, 1)) * g_gen(2, 2, 1)
    assert phi(z_power(2, 2), (1, 2), 2) == idempotent(2, (1, 2)) * x_power(2, 2, 2)


@pytest.mark.parametrize("r, n", [(2, 2), (2, 3), (3, 2)])
def test_phi_is_multiplicative_on_every_orbit(r, n):
    result = phi_suite(r, n, samples=100, seed=7)
    assert result.passed, [c.to_dict() for c in result.failures()]
    assert len(result.checks) == len(orbit_representatives(r, n))


def test_young_generators_respect_the_stabilizer():
    names = [name for name, _ in young_generators((1, 1, 2))]
    assert names == ["T1", "T1^-1", "Z1", "Z1^-1", "Z2", "Z2^-1", "Z3", "Z3^-1"]
    rng = random.Random(3)
    for _ in range(20):
        a, b = random_young_element((1, 1, 2), rng), random_young_element((1, 1, 2), rng)
        assert phi(a * b, (1, 1, 2), 2) == h_mul(phi(a, (1, 1, 2), 2), phi(b, (1, 1, 2), 2))


def test_phi_rejects_elements_outside_the_young_subalgebra():
    with pytest.raises(NotInBasisError):
        phi(t_gen(2, 1), (1, 2), 2)
    with pytest.raises(NotInBasisError):
        phi(ah_unit(2), (2, 1), 2)


def test_phi_inverse_and_transported_bar():
    a = ah_nf(3, "T1 Z1 T1^-1 Z3")
    image = phi(a, (1, 1, 2), 2)
    assert phi_inverse(image, (1, 1, 2)).body == a
    assert phi_bar(phi_bar(image, (1, 1, 2)), (1, 1, 2)) == image


def test_tensor_factors():
    joined = pure((1, 1), [z_power(1, 1), z_power(1, 1, -1)])
    assert joined == TensorElem((1, 1), z_monomial((1, -1)))
    unit = tensor_unit((2, 1))
    x = pure((2, 1), [ah_nf(2, "T1 Z2"), z_power(1, 1)])
    assert tensor_mul(unit, x) == x
    assert tensor_bar(tensor_bar(x)) == x
