import pytest

from permpoly.config import SearchConfig
from permpoly.engine.perm_check import is_permutation, is_permutation_by_sorting
from permpoly.exceptions import HypothesisError
from permpoly.families.niho import niho_trinomial
from permpoly.strategy.niho_search import TRIVIAL_TAG, niho_candidates, search_niho


@pytest.fixture(scope="module")
def k1_rows():
    return search_niho(1, SearchConfig(jobs=1))


def test_candidates_are_deduplicated():
    candidates = [c for s in range(1, 6) for c in niho_candidates(1, s)]
    keys = {(c.s, c.t, c.lambda1, c.lambda2) for c in candidates}
    assert len(keys) == len(candidates)
    for c in candidates:
        if c.lambda1 == c.lambda2:
            assert c.s <= c.t
        assert (c.lambda1, c.lambda2) != (-1, 1)
    # 15 + 25 + 15
    assert len(candidates) == 55


def test_degenerate_rows_are_trivial(k1_rows):
    trivial = [row for row in k1_rows if row.s == row.t and row.lambda1 == -row.lambda2]
    assert len(trivial) == 5
    assert all(row.family_tag == TRIVIAL_TAG for row in trivial)


def test_rows_reverify_with_dense_tables(k1_rows):
    assert k1_rows
    for row in k1_rows:
        dense = niho_trinomial(row.params).to_dense()
        assert is_permutation_by_sorting(dense, dense.field).is_pp


def test_rows_are_swap_symmetric(k1_rows):
    for row in k1_rows:
        swapped = niho_trinomial(row.params.swapped())
        assert is_permutation(swapped, swapped.field).is_pp


def test_row_serialises(k1_rows):
    data = k1_rows[0].to_dict()
    assert set(data) == {"k", "s", "t", "lambda1", "lambda2", "exponents", "is_pp", "family_tag"}


def test_search_respects_bound():
    with pytest.raises(HypothesisError):
        search_niho(2, SearchConfig(max_order=100, jobs=1))
