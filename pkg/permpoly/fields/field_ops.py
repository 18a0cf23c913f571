"""Module: Frobenius, trace, norm and quadratic character"""

import logging
from typing import Optional, Tuple

import numpy as np

from permpoly.exceptions import FieldError
from permpoly.fields.galois_field import FieldCtx, FieldElement, check_same_field

LOG = logging.getLogger(__name__)


def frobenius(x: FieldElement, iterate: int) -> FieldElement:
    """Function: x^(p^iterate)"""

    if iterate < 0:
        raise FieldError("frobenius iterate must be non-negative")
    ctx = x.ctx
    return FieldElement(ctx, ctx.pow(x.index, ctx.p ** iterate))


def conjugate(x: FieldElement, base_degree: int) -> FieldElement:
    """Function: x^q with q = p^base_degree"""

    return frobenius(x, base_degree)


def _trace_shape(ctx: FieldCtx, r: int, base_degree: int) -> Tuple[int, int]:
    if base_degree < 1 or ctx.m % base_degree:
        raise FieldError(f"base degree {base_degree} does not divide {ctx.m}")
    n = ctx.m // base_degree
    if r < 1 or n % r:
        raise FieldError(f"subfield degree {r} does not divide {n}")
    return n, base_degree * r


def trace(x: FieldElement, r: int = 1, base_degree: int = 1) -> FieldElement:
    """Function: Tr from F_{q^n} down to F_{q^r}, q = p^base_degree

    Tr(x) = x + x^(q^r) + x^(q^2r) + ... + x^(q^(n-r)).
    """

    ctx = x.ctx
    n, step = _trace_shape(ctx, r, base_degree)
    total = 0
    for i in range(n // r):
        total = ctx.add(total, ctx.pow(x.index, ctx.p ** (step * i)))
    return FieldElement(ctx, total)


def trace_many(ctx: FieldCtx, values, r: int = 1, base_degree: int = 1) -> np.ndarray:
    """Function: vectorised trace over an index array"""

    n, step = _trace_shape(ctx, r, base_degree)
    values = np.asarray(values, dtype=np.int64)
    total = np.zeros(values.shape, dtype=np.int64)
    for i in range(n // r):
        total = ctx.add_many(total, ctx.frobenius_many(values, step * i))
    return total


def norm(x: FieldElement, base_degree: int = 1) -> FieldElement:
    """Function: N from F_{q^n} to F_q, the product of the conjugates of x"""

    ctx = x.ctx
    n, _ = _trace_shape(ctx, 1, base_degree)
    q = ctx.p ** base_degree
    exponent = sum(q ** i for i in range(n))
    return FieldElement(ctx, ctx.pow(x.index, exponent))


def in_subfield(x: FieldElement, degree: int) -> bool:
    """Function: x lies in F_{p^degree}, i.e. x^(p^degree) == x"""

    return frobenius(x, degree) == x


def _require_odd(ctx: FieldCtx) -> None:
    if ctx.p == 2:
        raise FieldError("quadratic character needs odd characteristic")


def is_square(x: FieldElement) -> bool:
    """Function: Euler criterion x^((N-1)/2) == 1; zero counts as a square"""

    ctx = x.ctx
    _require_odd(ctx)
    if x.index == 0:
        return True
    return ctx.pow(x.index, (ctx.order - 1) // 2) == 1


def is_square_many(ctx: FieldCtx, values) -> np.ndarray:
    """Function: vectorised quadratic character test, zero counts as a square"""

    _require_odd(ctx)
    values = np.asarray(values, dtype=np.int64)
    return (values == 0) | (ctx.pow_many(values, (ctx.order - 1) // 2) == 1)


def _tonelli_shanks(ctx: FieldCtx, value: int) -> int:
    # N - 1 = 2^s * t with t odd; the generator is a non-residue
    group_order = ctx.order - 1
    twos, odd = 0, group_order
    while odd % 2 == 0:
        twos += 1
        odd //= 2
    z = ctx.pow(ctx.generator, odd)
    x = ctx.pow(value, (odd + 1) // 2)
    b = ctx.pow(value, odd)
    level = twos
    while b != 1:
        i, power = 0, b
        while power != 1:
            power = ctx.mul(power, power)
            i += 1
        scale = ctx.pow(z, 2 ** (level - i - 1))
        x = ctx.mul(x, scale)
        z = ctx.mul(scale, scale)
        b = ctx.mul(b, z)
        level = i
    return x


def sqrt(x: FieldElement) -> Optional[FieldElement]:
    """Function: square root of smaller index, None for non-squares"""

    ctx = x.ctx
    _require_odd(ctx)
    if x.index == 0:
        return FieldElement(ctx, 0)
    if not is_square(x):
        return None
    if ctx.has_tables:
        root = ctx.exp_table[ctx.log_table[x.index] // 2]
    else:
        root = _tonelli_shanks(ctx, x.index)
    other = ctx.neg(int(root))
    return FieldElement(ctx, min(int(root), other))


def quad_discriminant_irreducible(a: FieldElement, b: FieldElement) -> Tuple[FieldElement, bool]:
    """Function: discriminant of u^2 + a u + b and its irreducibility verdict"""

    check_same_field(a, b)
    _require_odd(a.ctx)
    discriminant = a * a - 4 * b
    return discriminant, not is_square(discriminant)


def has_root_exhaustive(a: FieldElement, b: FieldElement) -> bool:
    """Function: does u^2 + a u + b vanish somewhere in the field"""

    ctx = check_same_field(a, b)
    values = ctx.all_indices()
    evaluated = ctx.add_many(ctx.mul_many(values, ctx.add_many(values, a.index)), b.index)
    return bool(np.any(evaluated == 0))
