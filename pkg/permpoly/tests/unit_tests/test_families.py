import random

import numpy as np
import pytest

from permpoly.engine.perm_check import is_permutation
from permpoly.exceptions import FieldMismatchError, HypothesisError
from permpoly.families.conjectures import conj1_map, conj2_map
from permpoly.families.known_examples import EXAMPLES, ExampleId, example_map
from permpoly.families.niho import NihoParams, niho_trinomial
from permpoly.families.trace_family import (
    TraceFamilyParams,
    gamma_condition_set,
    invert_trace_pp,
    solve_linearized_cubic,
    trace_exponent,
    trace_family,
    trace_field,
)
from permpoly.fields.galois_field import FieldElement, field_new


def test_conjecture_hypotheses():
    with pytest.raises(HypothesisError):
        conj2_map(1)
    with pytest.raises(HypothesisError):
        conj1_map(0)
    gmap, mu = conj2_map(1, force=True)
    assert len(mu) == 6
    assert gmap.field == field_new(5, 2)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"k": 1, "s": 0, "t": 1, "lambda1": 1, "lambda2": 1},
        {"k": 1, "s": 6, "t": 1, "lambda1": 1, "lambda2": 1},
        {"k": 1, "s": 1, "t": 1, "lambda1": 2, "lambda2": 1},
        {"k": 0, "s": 1, "t": 1, "lambda1": 1, "lambda2": 1},
    ],
)
def test_niho_params_validation(kwargs):
    with pytest.raises(HypothesisError):
        NihoParams(**kwargs)


def test_niho_swap_is_same_function(f25):
    params = NihoParams(1, 2, 4, 1, -1)
    values = f25.all_indices()
    assert params.exponents == (9, 17)
    assert np.array_equal(
        niho_trinomial(params).evaluate_many(values), niho_trinomial(params.swapped()).evaluate_many(values)
    )


@pytest.mark.parametrize("r, k", [(2, 33), (3, 261), (4, 2241)])
def test_trace_exponent(r, k):
    assert trace_exponent(r) == k


def test_gamma_set_for_q9():
    ctx = trace_field(2)
    gammas = gamma_condition_set(2)
    assert len(gammas) == 3
    roots = [
        x.index for x in ctx.elements() if (x + 1) * (x * x - x - 1) == FieldElement(ctx, 0)
    ]
    assert sorted(gammas) == sorted(roots)
    assert ctx.from_int(-1) in gammas


def test_gamma_set_for_q27():
    gammas = gamma_condition_set(3)
    ctx = trace_field(3)
    assert len(gammas) == 12
    assert all(ctx.pow(gamma, 27) == gamma for gamma in gammas)


def test_gamma_set_needs_r_at_least_two():
    with pytest.raises(HypothesisError):
        gamma_condition_set(1)


@pytest.mark.parametrize("gamma", [0, 1])
def test_params_reject_degenerate_gamma(gamma):
    with pytest.raises(HypothesisError):
        TraceFamilyParams(2, gamma)


def test_params_reject_gamma_outside_condition():
    ctx = trace_field(2)
    outsider = next(g for g in range(2, ctx.order) if g not in gamma_condition_set(2))
    with pytest.raises(HypothesisError):
        TraceFamilyParams(2, outsider)


@pytest.mark.parametrize("r", [2, 3])
def test_trace_family_permutes(r):
    maps = trace_family(r)
    assert len(maps) == (3 ** r - 3) // 2
    for tmap in maps:
        assert tmap.k == trace_exponent(r)
        assert is_permutation(tmap, tmap.field).is_pp


def test_linearized_cubic_solutions(f81):
    rng = random.Random(3)
    for _ in range(20):
        beta, rhs = rng.randrange(f81.order), rng.randrange(f81.order)
        solutions = solve_linearized_cubic(f81, beta, rhs)
        expected = [
            x for x in range(f81.order) if f81.add(f81.pow(x, 3), f81.mul(beta, x)) == rhs
        ]
        assert solutions == expected


def test_inverter_round_trip_q9():
    ctx = trace_field(2)
    for gamma in gamma_condition_set(2):
        params = TraceFamilyParams(2, gamma)
        tmap = params.to_map()
        for a in ctx.elements():
            x = invert_trace_pp(params, a)
            assert tmap.evaluate(x.index) == a.index


def test_inverter_samples_q27():
    ctx = trace_field(3)
    rng = random.Random(27)
    for gamma in gamma_condition_set(3)[:3]:
        params = TraceFamilyParams(3, gamma)
        tmap = params.to_map()
        for _ in range(30):
            a = FieldElement(ctx, rng.randrange(ctx.order))
            assert tmap(invert_trace_pp(params, a)) == a


def test_inverter_rejects_foreign_element(f25):
    params = TraceFamilyParams(2, gamma_condition_set(2)[0])
    with pytest.raises(FieldMismatchError):
        invert_trace_pp(params, FieldElement(f25, 1))


@pytest.mark.parametrize(
    "example_id, count", [(ExampleId.EX_5_1, 4), (ExampleId.EX_5_2, 2), (ExampleId.EX_5_4, 4), (ExampleId.EX_5_5, 5)]
)
def test_example_gamma_counts(example_id, count):
    assert len(EXAMPLES[example_id].gamma_set()) == count


def test_example_5_3_matches_family():
    assert sorted(EXAMPLES[ExampleId.EX_5_3].gamma_set()) == sorted(gamma_condition_set(3))


@pytest.mark.parametrize("example_id", list(ExampleId))
def test_examples_are_permutations(example_id):
    example = EXAMPLES[example_id]
    maps = example_map(example_id)
    assert len(maps) == len(example.ks) * len(example.gamma_set())
    for tmap in maps:
        assert tmap.q == example.q and tmap.n == example.n
        assert is_permutation(tmap, tmap.field).is_pp


def test_example_map_accepts_plain_id():
    assert len(example_map("5.4")) == 16
