"""Module: Sporadic trace-form permutations found by exhaustive search

Each entry fixes (q, n, k) and a condition on gamma; the gamma values are
found by enumerating F_{q^n}.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Tuple

import numpy as np

from permpoly.fields.galois_field import FieldCtx, field_new
from permpoly.maps.trace_map import TraceMap

GammaPredicate = Callable[[FieldCtx, np.ndarray], np.ndarray]


class ExampleId(str, Enum):
    """Enum: known sporadic examples"""

    EX_5_1 = "5.1"
    EX_5_2 = "5.2"
    EX_5_3 = "5.3"
    EX_5_4 = "5.4"
    EX_5_5 = "5.5"


def _power_equals(exponent: int, target: int) -> GammaPredicate:
    def predicate(ctx: FieldCtx, gammas: np.ndarray) -> np.ndarray:
        return ctx.pow_many(gammas, exponent) == ctx.from_int(target)

    return predicate


def _golden(ctx: FieldCtx, gammas: np.ndarray) -> np.ndarray:
    # gamma^2 - gamma == 1
    return ctx.sub_many(ctx.mul_many(gammas, gammas), gammas) == 1


def _shifted_thirteenth(ctx: FieldCtx, gammas: np.ndarray) -> np.ndarray:
    # (gamma - 1)^13 == gamma^13
    return ctx.pow_many(ctx.sub_many(gammas, 1), 13) == ctx.pow_many(gammas, 13)


@dataclass(frozen=True)
class KnownExample:
    """Data Class: frozen (q, n, k, gamma condition) tuple"""

    example_id: ExampleId
    p: int
    base_degree: int
    n: int
    ks: Tuple[int, ...]
    condition: str
    predicate: GammaPredicate = field(compare=False, repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.base_degree

    @property
    def field(self) -> FieldCtx:
        return field_new(self.p, self.base_degree * self.n)

    def gamma_set(self) -> List[int]:
        """Method: every nonzero gamma satisfying the condition, ascending"""

        ctx = self.field
        gammas = np.arange(1, ctx.order, dtype=np.int64)
        return gammas[self.predicate(ctx, gammas)].tolist()

    def matches(self, ctx: FieldCtx, gamma: int) -> bool:
        """Method: does gamma satisfy the condition"""

        return bool(self.predicate(ctx, np.array([gamma], dtype=np.int64))[0])

    def describe(self) -> Dict[str, object]:
        return {"id": self.example_id.value, "q": self.q, "n": self.n, "k": list(self.ks), "condition": self.condition}


EXAMPLES: Dict[ExampleId, KnownExample] = {
    ExampleId.EX_5_1: KnownExample(ExampleId.EX_5_1, 7, 1, 2, (10,), "gamma^4 = 1", _power_equals(4, 1)),
    ExampleId.EX_5_2: KnownExample(ExampleId.EX_5_2, 3, 2, 2, (33,), "gamma^2 - gamma = 1", _golden),
    ExampleId.EX_5_3: KnownExample(ExampleId.EX_5_3, 3, 3, 2, (261,), "(gamma - 1)^13 = gamma^13", _shifted_thirteenth),
    ExampleId.EX_5_4: KnownExample(ExampleId.EX_5_4, 3, 2, 3, (11, 19, 33, 57), "gamma^4 = -1", _power_equals(4, -1)),
    ExampleId.EX_5_5: KnownExample(ExampleId.EX_5_5, 7, 2, 2, (385,), "gamma^5 = -1", _power_equals(5, -1)),
}


def example_map(example_id: ExampleId) -> List[TraceMap]:
    """Function: one TraceMap per (k, gamma), k in listed order, gamma ascending"""

    example = EXAMPLES[ExampleId(example_id)]
    ctx = example.field
    gammas = example.gamma_set()
    return [TraceMap(ctx, example.base_degree, k, gamma) for k in example.ks for gamma in gammas]
