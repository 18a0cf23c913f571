import pytest

from permpoly.fields.irreducible import (
    degree,
    find_modulus,
    has_root,
    int_to_coeffs,
    is_irreducible,
    poly_gcd,
    poly_mod,
    poly_mul,
    poly_powmod,
    trim,
)


def test_trim_and_degree():
    assert trim([1, 2, 0, 0]) == [1, 2]
    assert degree([0, 0]) == -1
    assert degree([3, 0, 1]) == 2


def test_int_to_coeffs():
    assert int_to_coeffs(7, 3, 3) == [1, 2, 0]


def test_poly_arithmetic():
    # (x - 1)(x - 2) = x^2 + 2x + 2 over F_5
    assert poly_mul([4, 1], [3, 1], 5) == [2, 2, 1]
    assert poly_mod([2, 2, 1], [4, 1], 5) == []
    assert poly_powmod([0, 1], 3, [1, 0, 1], 3) == [0, 2]


def test_gcd_is_monic():
    assert poly_gcd([2, 2, 1], [4, 0, 1], 5) == [4, 1]
    assert poly_gcd([2, 0, 2], [1], 3) == [1]


@pytest.mark.parametrize(
    "poly, p, expected",
    [
        ([1, 0, 1], 3, True),
        ([1, 0, 1], 5, False),
        ([2, 0, 1], 5, True),
        ([1, 2, 0, 1], 3, True),
        ([1, 0, 2, 0, 1], 3, False),
        ([1, 1, 1], 2, True),
        ([0, 1], 7, True),
        ([4], 7, False),
    ],
)
def test_is_irreducible(poly, p, expected):
    assert is_irreducible(poly, p) == expected


def test_reducible_without_roots():
    # (x^2 + 1)^2 over F_3 has no root but factors
    assert not has_root([1, 0, 2, 0, 1], 3)
    assert not is_irreducible([1, 0, 2, 0, 1], 3)


@pytest.mark.parametrize("p, m", [(2, 4), (3, 3), (5, 2), (7, 3), (11, 2)])
def test_find_modulus_is_monic_irreducible(p, m):
    modulus = find_modulus(p, m)
    assert len(modulus) == m + 1
    assert modulus[-1] == 1
    assert is_irreducible(list(modulus), p)


def test_find_modulus_prime_field():
    assert find_modulus(5, 1) == (0, 1)
