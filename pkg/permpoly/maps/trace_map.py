"""Module: Trace-composed maps x + gamma * Tr(x^k)"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from permpoly.exceptions import FieldError
from permpoly.fields.field_ops import trace_many
from permpoly.fields.galois_field import FieldCtx, FieldElement
from permpoly.maps.base_map import BaseMap


@dataclass(frozen=True)
class TraceMap(BaseMap):
    """Data Class: x + gamma * Tr_{q^n/q}(x^k) with q = p^base_degree"""

    ctx: FieldCtx
    base_degree: int
    k: int
    gamma: int

    kind = "trace"

    def __post_init__(self):
        if self.base_degree < 1 or self.ctx.m % self.base_degree:
            raise FieldError(f"base degree {self.base_degree} does not divide {self.ctx.m}")
        if not 0 < self.gamma < self.ctx.order:
            raise FieldError("gamma must be a nonzero field element")

    @property
    def field(self) -> FieldCtx:
        return self.ctx

    @property
    def q(self) -> int:
        return self.ctx.p ** self.base_degree

    @property
    def n(self) -> int:
        return self.ctx.m // self.base_degree

    def trace_part(self, indices) -> np.ndarray:
        """Method: Tr(x^k), values in F_q"""

        return trace_many(self.ctx, self.ctx.pow_many(indices, self.k), 1, self.base_degree)

    def evaluate(self, index: int) -> int:
        return int(self.evaluate_many(np.array([index], dtype=np.int64))[0])

    def evaluate_many(self, indices) -> np.ndarray:
        """Method: x + gamma * Tr(x^k) over an index array"""

        indices = np.asarray(indices, dtype=np.int64)
        return self.ctx.add_many(indices, self.ctx.mul_many(self.gamma, self.trace_part(indices)))

    def describe(self) -> Dict[str, Any]:
        return {"q": self.q, "n": self.n, "k": self.k, "gamma": self.gamma}


def eval_trace_map(tmap: TraceMap, x: FieldElement) -> FieldElement:
    """Function: x + gamma * Tr(x^k); for n = 2 this is x + gamma * (x^k + conj(x)^k)"""

    return tmap(x)
