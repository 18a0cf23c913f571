import random

import numpy as np
import pytest

from permpoly.exceptions import FieldError, FieldMismatchError
from permpoly.fields.galois_field import FieldElement, build_field, check_same_field, field_new
from permpoly.fields.irreducible import is_irreducible


@pytest.mark.parametrize("p, m, modulus", [(5, 1, (0, 1)), (3, 2, (1, 0, 1)), (5, 2, (2, 0, 1))])
def test_modulus_choice(p, m, modulus):
    assert field_new(p, m).modulus == modulus


@pytest.mark.parametrize("p, m", [(2, 1), (2, 3), (3, 2), (5, 2), (7, 2), (3, 4), (5, 3)])
def test_generator_is_primitive(p, m):
    ctx = field_new(p, m)
    assert is_irreducible(list(ctx.modulus), p)
    powers = {ctx.pow(ctx.generator, e) for e in range(ctx.order - 1)}
    assert len(powers) == ctx.order - 1
    assert 0 not in powers


def test_construction_is_deterministic():
    first, second = build_field(7, 2), build_field(7, 2)
    assert first is not second
    assert first == second
    assert first.generator == second.generator
    assert hash(first) == hash(second)


def test_scalar_examples(f5, f9, f25):
    assert f5.inv(4) == 4
    assert f9.mul(3, 3) == 2
    assert f25.pow(2, 12) == 1


def test_operators(f9):
    alpha = FieldElement(f9, 3)
    assert alpha * alpha == FieldElement(f9, 2)
    assert (alpha + 1).index == 4
    assert (1 - alpha) == -(alpha - 1)
    assert alpha / alpha == FieldElement(f9, 1)
    assert alpha ** 4 == FieldElement(f9, 1)
    assert alpha ** -1 == alpha.inverse()
    assert int(alpha) == 3
    assert not FieldElement(f9, 0)


def test_inverse_of_zero(f25):
    with pytest.raises(ZeroDivisionError):
        f25.inv(0)
    with pytest.raises(ZeroDivisionError):
        f25.inv_many([1, 0])


@pytest.mark.parametrize("p, m", [(4, 1), (3, 0), (2, 30)])
def test_invalid_fields(p, m):
    with pytest.raises(FieldError):
        build_field(p, m)


def test_index_out_of_range(f9):
    with pytest.raises(FieldError):
        FieldElement(f9, 9)


def test_fields_never_mix(f9, f25):
    with pytest.raises(FieldMismatchError):
        FieldElement(f9, 1) + FieldElement(f25, 1)
    with pytest.raises(FieldMismatchError):
        check_same_field(FieldElement(f9, 1), FieldElement(f25, 1))


def test_tables_agree_with_schoolbook():
    tabled = field_new(3, 4)
    plain = build_field(3, 4, table_cap=0)
    assert tabled.has_tables and not plain.has_tables
    assert tabled.modulus == plain.modulus
    assert tabled.generator == plain.generator
    for left in range(tabled.order):
        for right in range(0, tabled.order, 7):
            assert tabled.mul(left, right) == plain.mul(left, right)
    for value in range(1, tabled.order):
        assert tabled.inv(value) == plain.inv(value)
        assert tabled.pow(value, 1000) == plain.pow(value, 1000)


def test_vectorised_matches_scalar(f25):
    values = f25.all_indices()
    products = f25.mul_many(values[:, None], values[None, :])
    sums = f25.add_many(values[:, None], values[None, :])
    for left in range(f25.order):
        for right in range(f25.order):
            assert products[left, right] == f25.mul(left, right)
            assert sums[left, right] == f25.add(left, right)
    assert np.array_equal(f25.pow_many(values, 7), [f25.pow(v, 7) for v in range(f25.order)])
    assert np.array_equal(f25.neg_many(values), [f25.neg(v) for v in range(f25.order)])


def test_untabled_vectorised_ops():
    plain = build_field(5, 3, table_cap=0)
    values = plain.all_indices()
    assert np.array_equal(plain.mul_many(values, 7), [plain.mul(v, 7) for v in range(plain.order)])
    assert np.array_equal(plain.pow_many(values, 31), [plain.pow(v, 31) for v in range(plain.order)])


@pytest.mark.parametrize("p, m", [(11, 2), (3, 5), (2, 6)])
def test_field_axioms(p, m):
    ctx = field_new(p, m)
    rng = random.Random(1234)
    for _ in range(10 ** 4):
        a, b, c = (FieldElement(ctx, rng.randrange(ctx.order)) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + (-a) == FieldElement(ctx, 0)
        if a:
            assert a * a.inverse() == FieldElement(ctx, 1)


def test_elements_in_index_order(f9):
    assert [x.index for x in f9.elements()] == list(range(9))
    assert f9.descriptor() == {"p": 3, "m": 2, "modulus": [1, 0, 1], "generator": f9.generator}


@pytest.mark.parametrize("m", [1, 4, 6])
def test_characteristic_two_addition_is_coefficientwise(m):
    ctx = field_new(2, m)
    values = ctx.all_indices()
    digits = ctx.digits_many(values)
    sums = ctx.add_many(values[:, None], values[None, :])
    expected = ctx.from_digits_many(digits[:, None, :] + digits[None, :, :])
    assert np.array_equal(sums, expected)
    assert np.array_equal(ctx.neg_many(values), values)
    assert np.array_equal(ctx.sub_many(values[:, None], values[None, :]), sums)
    assert ctx.add(5 % ctx.order, 3 % ctx.order) == int(sums[5 % ctx.order, 3 % ctx.order])
