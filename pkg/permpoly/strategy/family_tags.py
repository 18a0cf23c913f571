"""Module: Known-family tagging of trace-form search hits"""

import logging
from typing import Optional

from permpoly.families.known_examples import EXAMPLES
from permpoly.families.trace_family import TRACE_PRIME, gamma_condition_mask, trace_exponent
from permpoly.fields.galois_field import FieldCtx
from permpoly.strategy.cosets import coset

LOG = logging.getLogger(__name__)

THEOREM_TAG = "trace-theorem"
LINEAR_TAG = "linear"
EXAMPLE_TAG = "example-{}"


def _is_theorem_member(ctx: FieldCtx, j: int, n: int, k_coset, gamma: int) -> bool:
    if ctx.p != TRACE_PRIME or n != 2 or j < 2:
        return False
    if trace_exponent(j) % (ctx.order - 1) not in k_coset or gamma == 1:
        return False
    return bool(gamma_condition_mask(ctx, ctx.p ** j, [gamma])[0])


def _is_linear(ctx: FieldCtx, k_coset) -> bool:
    modulus = ctx.order - 1
    return any(pow(ctx.p, i, modulus) in k_coset for i in range(ctx.m))


def family_tag(ctx: FieldCtx, j: int, n: int, k: int, gamma: int) -> Optional[str]:
    """Function: first matching known family, None for an unexplained permutation

    Checked in order: the q = 3^r theorem, the sporadic examples, linearized k.
    """

    q = ctx.p ** j
    k_coset = set(coset(k, q, n))
    if _is_theorem_member(ctx, j, n, k_coset, gamma):
        return THEOREM_TAG
    for example in EXAMPLES.values():
        if (example.p, example.base_degree, example.n) != (ctx.p, j, n):
            continue
        if any(listed in k_coset for listed in example.ks) and example.matches(ctx, gamma):
            return EXAMPLE_TAG.format(example.example_id.value)
    if _is_linear(ctx, k_coset):
        return LINEAR_TAG
    LOG.debug("Novel permutation: q=%d n=%d k=%d gamma=%d", q, n, k, gamma)
    return None
