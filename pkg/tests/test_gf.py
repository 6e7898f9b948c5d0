import random

import pytest

from paircodes.gf import Field, build_field, is_irreducible, is_prime


def test_prime_check():
    assert is_prime(2)
    assert is_prime(13)
    assert not is_prime(1)
    assert not is_prime(9)


def test_build_field_prime_field():
    f2 = build_field(2, 1)
    assert (f2.p, f2.m, f2.q) == (2, 1, 2)
    assert f2.modulus == (0, 1)


def test_build_field_first_irreducible_f4():
    # x^2, x^2+1, x^2+x are reducible over F_2; first irreducible is x^2+x+1
    f4 = build_field(2, 2)
    assert f4.modulus == (1, 1, 1)
    assert f4.q == 4


def test_build_field_first_irreducible_f9():
    # x^2 is reducible; x^2+1 has no root mod 3, so it wins
    f9 = build_field(3, 2)
    assert f9.modulus == (1, 0, 1)
    assert f9.q == 9


def test_build_field_deterministic():
    assert build_field(5, 3).modulus == build_field(5, 3).modulus
    assert build_field(5, 3) == Field(5, 3)


def test_build_field_rejects_bad_input():
    with pytest.raises(ValueError):
        Field(4, 1)
    with pytest.raises(ValueError):
        Field(2, 0)
    with pytest.raises(ValueError):
        Field(2, 2, (1, 0, 1))  # (x+1)^2 over F_2


def test_is_irreducible_examples():
    assert is_irreducible(2, [1, 1, 1])
    assert not is_irreducible(2, [1, 0, 1])
    assert is_irreducible(3, [1, 0, 1])
    with pytest.raises(ValueError):
        is_irreducible(2, [1])  # degree 0
    with pytest.raises(ValueError):
        is_irreducible(2, [1, 0, 2])  # not monic after reduction


def test_add_examples():
    assert build_field(2, 1).add(1, 1) == 0
    assert build_field(2, 2).add(2, 2) == 0
    assert build_field(5, 1).add(3, 4) == 2


def test_mul_examples():
    f4 = build_field(2, 2)
    assert f4.mul(2, 2) == 3  # alpha^2 = alpha + 1 under x^2+x+1
    assert f4.mul(3, 1) == 3
    f9 = build_field(3, 2)
    assert f9.mul(3, 3) == 2  # alpha^2 = -1 = 2 under x^2+1


def test_inv_examples():
    assert build_field(5, 1).inv(2) == 3
    assert build_field(2, 1).inv(1) == 1
    assert build_field(2, 2).inv(2) == 3
    with pytest.raises(ZeroDivisionError):
        build_field(7, 1).inv(0)


def test_neg_sub_pow_examples():
    f3 = build_field(3, 1)
    assert f3.neg(1) == 2
    assert f3.sub(0, 1) == 2
    f4 = build_field(2, 2)
    assert f4.pow(2, 3) == 1  # multiplicative group has order 3
    assert f4.pow(0, 0) == 1
    with pytest.raises(ValueError):
        f4.pow(2, -1)


def test_elements_enumeration():
    f2 = build_field(2, 1)
    assert list(f2.elements()) == [0, 1]
    f9 = build_field(3, 2)
    elems = list(f9.elements())
    assert len(elems) == 9
    assert len(set(elems)) == 9
    assert elems == sorted(elems)


def test_element_range_check():
    f4 = build_field(2, 2)
    assert f4.check(3) == 3
    with pytest.raises(ValueError):
        f4.check(4)
    with pytest.raises(ValueError):
        f4.check(-1)


FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]


@pytest.mark.parametrize("p,m", FIELDS)
def test_field_axioms_random_triples(p, m):
    fs = build_field(p, m)
    rng = random.Random(20_000 + fs.q)
    for _ in range(2000):
        a = rng.randrange(fs.q)
        b = rng.randrange(fs.q)
        c = rng.randrange(fs.q)
        assert fs.add(fs.add(a, b), c) == fs.add(a, fs.add(b, c))
        assert fs.mul(fs.mul(a, b), c) == fs.mul(a, fs.mul(b, c))
        assert fs.add(a, b) == fs.add(b, a)
        assert fs.mul(a, b) == fs.mul(b, a)
        assert fs.mul(a, fs.add(b, c)) == fs.add(fs.mul(a, b), fs.mul(a, c))
        assert fs.add(a, fs.neg(a)) == 0
        if a:
            assert fs.mul(a, fs.inv(a)) == 1


@pytest.mark.parametrize("p,m", FIELDS)
def test_frobenius_is_additive(p, m):
    # (a + b)^p = a^p + b^p, exhaustively over the whole field
    fs = build_field(p, m)
    for a in fs.elements():
        for b in fs.elements():
            assert fs.pow(fs.add(a, b), p) == fs.add(fs.pow(a, p), fs.pow(b, p))


def test_field_is_immutable_and_hashable():
    fs = build_field(2, 2)
    with pytest.raises(AttributeError):
        fs.p = 3
    assert hash(fs) == hash(Field(2, 2, (1, 1, 1)))
