from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from youngcurv.perm_algebra import (
    GroupRingElement,
    Permutation,
    all_permutations,
    build_named,
    compose,
    eta,
    f0,
    inverse,
    ring_multiply,
    rho,
    sign,
    star,
    zeta,
)

from conftest import permutations, ring_elements


def P(*images):
    return Permutation(images)


def test_compose_identity():
    assert compose(Permutation.identity(3), P(2, 3, 1)) == P(2, 3, 1)


def test_compose_convention():
    # (p q)(i) = p(q(i))
    assert compose(P(2, 1, 3), P(1, 3, 2)) == P(2, 3, 1)


def test_compose_inverse():
    p = P(3, 1, 2)
    assert compose(p, inverse(p)) == Permutation.identity(3)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(P(1, 2), P(1, 2, 3))


@pytest.mark.parametrize("p, s", [((1, 2, 3, 4), 1), ((2, 1, 3), -1), ((2, 3, 1), 1), ((4, 3, 2, 1), 1)])
def test_sign(p, s):
    assert sign(Permutation(p)) == s


def test_invalid_permutations():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation(range(1, 10))


@given(permutations(), st.data())
def test_sign_is_homomorphism(p, data):
    q = data.draw(permutations(len(p)))
    assert sign(compose(p, q)) == sign(p) * sign(q)


def test_identity_is_unit():
    a = zeta(Fraction(2, 7))
    e = GroupRingElement.identity(3)
    assert ring_multiply(e, a) == a == ring_multiply(a, e)


def test_multiply_degree_mismatch():
    with pytest.raises(ValueError):
        ring_multiply(GroupRingElement.identity(2), GroupRingElement.identity(3))


def test_zero_coefficients_dropped():
    a = GroupRingElement(3, {(1, 2, 3): 1, (2, 1, 3): 0})
    assert len(a) == 1
    assert len(a - a) == 0 and not (a - a)


@settings(max_examples=40)
@given(ring_elements(), ring_elements(), ring_elements())
def test_associativity(a, b, c):
    assert ring_multiply(ring_multiply(a, b), c) == ring_multiply(a, ring_multiply(b, c))


@settings(max_examples=40)
@given(ring_elements(), ring_elements())
def test_star_is_anti_homomorphism(a, b):
    assert star(ring_multiply(a, b)) == ring_multiply(star(b), star(a))


@given(ring_elements())
def test_star_involution(a):
    assert star(star(a)) == a


def test_star_of_cycle():
    assert star(GroupRingElement.from_perm((2, 3, 1))) == GroupRingElement.from_perm((3, 1, 2))


def test_star_f0_oracle():
    # each term's inverse carries the same coefficient: involutions, or 3-cycles paired with equal weight
    f = f0()
    for p, c in f.items():
        assert f.coefficient(inverse(p)) == c
    assert star(f) == f


def test_zeta_half_coefficients():
    third, half = Fraction(1, 3), Fraction(1, 2)
    expected = GroupRingElement(3, {
        (1, 2, 3): third, (1, 3, 2): third * half, (2, 1, 3): third * half,
        (2, 3, 1): -third * half, (3, 1, 2): -third * half, (3, 2, 1): -third,
    })
    assert build_named("zeta", Fraction(1, 2)) == expected
    assert build_named("zeta(1/2)") == expected


@pytest.mark.parametrize("nu", [-1, 0, Fraction(1, 2), 2, Fraction(-7, 3)])
def test_zeta_idempotent(nu):
    z = zeta(nu)
    assert ring_multiply(z, z) == z


def test_eta_rho_f0_idempotent():
    for e in (eta(), rho(), f0()):
        assert ring_multiply(e, e) == e


@pytest.mark.parametrize("nu", [-1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2])
def test_zeta_rho_relation_only_at_minus_one(nu):
    z, r = zeta(nu), rho()
    holds = ring_multiply(z, r) == r and ring_multiply(r, z) == z
    assert holds == (nu == -1)


def test_eta_does_not_generate_rho():
    assert ring_multiply(eta(), rho()) != rho()
    assert ring_multiply(rho(), eta()) != eta()


def test_build_named_unknown():
    with pytest.raises(ValueError):
        build_named("omega")
    with pytest.raises(ValueError):
        build_named("zeta")


def test_json_roundtrip_and_order():
    z = zeta(Fraction(1, 2))
    data = z.to_json()
    assert data["degree"] == 3
    perms = [t["perm"] for t in data["terms"]]
    assert perms == sorted(perms)
    assert data["terms"][0] == {"perm": [1, 2, 3], "num": "1", "den": "3"}
    assert GroupRingElement.from_json(data) == z


def test_all_permutations_size():
    assert len(all_permutations(5)) == 120
