import numpy as np
import pytest

from permpoly.exceptions import FieldMismatchError, ViewError
from permpoly.fields.galois_field import FieldElement, field_new
from permpoly.views.subgroup_view import (
    SubgroupView,
    check_partition,
    check_sum_product_system,
    full_star_view,
    group_closure_failures,
    mu_view,
    omega_split,
    square_class_split,
)


@pytest.fixture
def mu26():
    return mu_view(field_new(5, 4), 25)


def test_mu_is_unit_circle(f25):
    mu = mu_view(f25, 5)
    assert len(mu) == 6
    assert np.all(f25.pow_many(mu.indices, 6) == 1)
    assert list(mu.elements) == sorted(mu.elements)
    assert 1 in mu and 0 not in mu


def test_mu_needs_quadratic_extension(f25):
    with pytest.raises(ViewError):
        mu_view(f25, 3)


def test_mu_is_a_group(mu26):
    assert group_closure_failures(mu26) == []


@pytest.mark.parametrize("p, j", [(2, 1), (3, 1), (5, 1), (7, 1), (3, 2), (2, 3), (5, 2), (3, 3), (7, 2), (2, 6), (5, 3)])
def test_mu_is_a_group_up_to_125(p, j):
    q = p ** j
    ctx = field_new(p, 2 * j)
    mu = mu_view(ctx, q)
    assert len(mu) == q + 1
    assert group_closure_failures(mu) == []
    assert np.all(ctx.pow_many(mu.indices, q + 1) == 1)


def test_omega_split_sizes(mu26):
    plus, minus = omega_split(mu26)
    partition = check_partition((plus, minus), mu26)
    assert partition.ok
    assert partition.sizes == (13, 13)
    assert group_closure_failures(plus) == []
    assert "product" in group_closure_failures(minus)


def test_omega_split_at_625():
    mu = mu_view(field_new(5, 8), 625)
    plus, minus = omega_split(mu)
    partition = check_partition((plus, minus), mu)
    assert partition.ok
    assert partition.sizes == (313, 313)


def test_omega_split_needs_mu(f25):
    with pytest.raises(ViewError):
        omega_split(full_star_view(f25))


def test_square_classes(f5):
    squares, doubled = square_class_split(f5)
    assert squares.elements == (1, 4)
    assert doubled.elements == (2, 3)
    assert check_partition((squares, doubled), full_star_view(f5)).ok


def test_square_classes_need_two_non_square(f25):
    with pytest.raises(ViewError):
        square_class_split(f25)


def test_sum_product_on_full_star(f5):
    # only {1, 4}: x + y = 0 and x * y = -1
    count = check_sum_product_system(full_star_view(f5), FieldElement(f5, 0), FieldElement(f5, 4))
    assert count == 1


def test_sum_product_rejects_foreign_scalars(mu26, f5):
    with pytest.raises(FieldMismatchError):
        check_sum_product_system(mu26, FieldElement(f5, 1), FieldElement(f5, 1))
    ctx = mu26.ctx
    with pytest.raises(FieldMismatchError):
        check_sum_product_system(mu26, FieldElement(ctx, 1), FieldElement(f5, 1))


@pytest.mark.parametrize("total", [1, -1])
def test_no_sum_product_solutions_on_omega(mu26, total):
    ctx = mu26.ctx
    for view in omega_split(mu26):
        assert check_sum_product_system(view, FieldElement(ctx, ctx.from_int(total)), FieldElement(ctx, 1)) == 0


def test_partition_detects_overlap(f5):
    left = SubgroupView(f5, "full-star", (1, 2, 3))
    right = SubgroupView(f5, "full-star", (3, 4))
    partition = check_partition((left, right), full_star_view(f5))
    assert not partition.disjoint
    assert partition.covers
    assert not partition.ok


def test_view_basics(f25):
    view = full_star_view(f25)
    assert len(view) == 24
    assert view.summary() == {"kind": "full-star", "size": 24, "q": None, "head": [1, 2, 3, 4, 5, 6, 7, 8]}
    assert FieldElement(f25, 3) in view
    assert 0 not in view
    assert [x.index for x in view][:3] == [1, 2, 3]


def test_unknown_view_kind(f5):
    with pytest.raises(ViewError):
        SubgroupView(f5, "coset", (1,))
