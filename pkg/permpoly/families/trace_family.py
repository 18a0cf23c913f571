"""Module: The family x + gamma * Tr(x^k) over F_{q^2}, q = 3^r

k = 3^(2r-1) + 3^r - 3^(r-1) and gamma ranges over the solutions of
(gamma - 1)^((q-1)/2) = gamma^((q-1)/2). Every such map is a permutation, and
f(x) = a is inverted explicitly through the linearized cubic

    x^3 + (gamma/(1-gamma))^3 (conj(a) - a)^2 x = (a/(1-gamma))^3,
    conj(x) - x = conj(a) - a.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from permpoly.exceptions import FieldMismatchError, HypothesisError, InversionError
from permpoly.fields.galois_field import FieldCtx, FieldElement, field_new
from permpoly.fields.linear_algebra import solve_mod_p
from permpoly.maps.trace_map import TraceMap

LOG = logging.getLogger(__name__)

TRACE_PRIME = 3


def trace_exponent(r: int) -> int:
    """Function: 3^(2r-1) + 3^r - 3^(r-1)"""

    return TRACE_PRIME ** (2 * r - 1) + TRACE_PRIME ** r - TRACE_PRIME ** (r - 1)


def trace_field(r: int) -> FieldCtx:
    """Function: F_{q^2} with q = 3^r"""

    return field_new(TRACE_PRIME, 2 * r)


def gamma_condition_mask(ctx: FieldCtx, q: int, gammas) -> np.ndarray:
    """Function: (gamma - 1)^((q-1)/2) == gamma^((q-1)/2), vectorised"""

    half = (q - 1) // 2
    gammas = np.asarray(gammas, dtype=np.int64)
    shifted = ctx.sub_many(gammas, 1)
    return ctx.pow_many(shifted, half) == ctx.pow_many(gammas, half)


def gamma_condition_set(r: int) -> List[int]:
    """Function: all gamma in F_{q^2} satisfying the condition, by enumeration"""

    if r < 2:
        raise HypothesisError(f"r must be at least 2, got {r}")
    ctx = trace_field(r)
    gammas = ctx.all_indices()
    return gammas[gamma_condition_mask(ctx, TRACE_PRIME ** r, gammas)].tolist()


@dataclass(frozen=True)
class TraceFamilyParams:
    """Data Class: one member (r, gamma) of the family"""

    r: int
    gamma: int

    def __post_init__(self):
        if self.r < 2:
            raise HypothesisError(f"r must be at least 2, got {self.r}")
        ctx = self.field
        if self.gamma in (0, 1):
            raise HypothesisError("gamma must differ from 0 and 1")
        if not bool(gamma_condition_mask(ctx, self.q, [self.gamma])[0]):
            raise HypothesisError(f"gamma {self.gamma} violates (gamma-1)^((q-1)/2) = gamma^((q-1)/2)")
        if ctx.pow(self.gamma, self.q) != self.gamma:
            raise HypothesisError(f"gamma {self.gamma} is not in F_{self.q}")

    @property
    def q(self) -> int:
        return TRACE_PRIME ** self.r

    @property
    def n(self) -> int:
        return 2

    @property
    def k(self) -> int:
        """Method: 3^(2r-1) + 3^r - 3^(r-1)"""

        return trace_exponent(self.r)

    @property
    def field(self) -> FieldCtx:
        return trace_field(self.r)

    def to_map(self) -> TraceMap:
        """Method: the family member as a TraceMap"""

        return TraceMap(self.field, self.r, self.k, self.gamma)


def trace_family(r: int) -> List[TraceMap]:
    """Function: one TraceMap per admissible gamma"""

    maps = [TraceFamilyParams(r, gamma).to_map() for gamma in gamma_condition_set(r)]
    LOG.debug("Trace family r=%d: q=%d, k=%d, %d gamma value(s)", r, TRACE_PRIME ** r, trace_exponent(r), len(maps))
    return maps


def _linearized_matrix(ctx: FieldCtx, beta: int) -> np.ndarray:
    # column i holds L(x^i) for L(x) = x^3 + beta*x, additive in characteristic 3
    columns = []
    for i in range(ctx.m):
        basis = ctx.p ** i
        columns.append(ctx.digits(ctx.add(ctx.pow(basis, 3), ctx.mul(beta, basis))))
    return np.array(columns, dtype=np.int64).T


def solve_linearized_cubic(ctx: FieldCtx, beta: int, rhs: int) -> List[int]:
    """Function: all x with x^3 + beta*x = rhs"""

    particular, kernel = solve_mod_p(_linearized_matrix(ctx, beta), np.array(ctx.digits(rhs)), ctx.p)
    if particular is None:
        return []
    solutions = []
    for scalars in itertools.product(range(ctx.p), repeat=len(kernel)):
        vector = particular.copy()
        for scalar, basis in zip(scalars, kernel):
            vector = (vector + scalar * basis) % ctx.p
        solutions.append(ctx.from_digits(vector.tolist()))
    return sorted(solutions)


def invert_trace_pp(params: TraceFamilyParams, a: FieldElement) -> FieldElement:
    """Function: the unique x with x + gamma * Tr(x^k) = a"""

    ctx = params.field
    if a.ctx != ctx:
        raise FieldMismatchError(f"{a!r} does not live in F_{ctx.order}")
    gamma = FieldElement(ctx, params.gamma)
    conj_a = a ** params.q
    drift = conj_a - a
    one_minus = 1 - gamma
    beta = (gamma / one_minus) ** 3 * drift * drift
    rhs = (a / one_minus) ** 3
    candidates = solve_linearized_cubic(ctx, beta.index, rhs.index)
    survivors = [x for x in candidates if ctx.sub(ctx.pow(x, params.q), x) == drift.index]
    if len(survivors) != 1:
        raise InversionError(
            f"{len(survivors)} preimage(s) of {a.index} among {len(candidates)} cubic root(s) for gamma={params.gamma}"
        )
    return FieldElement(ctx, survivors[0])
