"""Module: Subgroup views

Explicit, sorted element lists for the subsets the permutation arguments live
on: mu_{q+1} inside F_{q^2}, its halves {x^2} and {-x^2}, and the square
classes of F^*.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from permpoly.constants import SUMMARY_HEAD
from permpoly.exceptions import ViewError
from permpoly.fields.field_ops import is_square
from permpoly.fields.galois_field import FieldCtx, FieldElement, check_same_field

LOG = logging.getLogger(__name__)

VIEW_KINDS = ("mu", "omega-plus", "omega-minus", "omega-sq", "omega-2sq", "full-star")


@dataclass(frozen=True)
class SubgroupView:
    """Data Class: enumerable subset of a field, sorted by element index"""

    ctx: FieldCtx
    kind: str
    elements: Tuple[int, ...]
    q: Optional[int] = None

    def __post_init__(self):
        if self.kind not in VIEW_KINDS:
            raise ViewError(f"unknown view kind {self.kind!r}")
        object.__setattr__(self, "elements", tuple(sorted(set(int(e) for e in self.elements))))

    @cached_property
    def indices(self) -> np.ndarray:
        """Method: read-only numpy copy of the elements"""

        indices = np.array(self.elements, dtype=np.int64)
        indices.setflags(write=False)
        return indices

    @cached_property
    def occupancy(self) -> np.ndarray:
        """Method: boolean membership array indexed by element index"""

        table = np.zeros(self.ctx.order, dtype=bool)
        table[self.indices] = True
        table.setflags(write=False)
        return table

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[FieldElement]:
        for index in self.elements:
            yield FieldElement(self.ctx, index)

    def __contains__(self, item: Union[FieldElement, int]) -> bool:
        index = item.index if isinstance(item, FieldElement) else int(item)
        return 0 <= index < self.ctx.order and bool(self.occupancy[index])

    def summary(self) -> Dict[str, Any]:
        """Method: kind, size, q and the first few indices"""

        return {"kind": self.kind, "size": len(self), "q": self.q, "head": list(self.elements[:SUMMARY_HEAD])}


@dataclass(frozen=True)
class PartitionCheck:
    """Data Class: verdict on parts forming a partition of a whole"""

    disjoint: bool
    covers: bool
    sizes: Tuple[int, ...]
    whole_size: int

    @property
    def ok(self) -> bool:
        return self.disjoint and self.covers


def mu_view(ctx: FieldCtx, q: int) -> SubgroupView:
    """Function: mu_{q+1} = {x : x^(q+1) = 1} inside F_{q^2}, as powers of w^(q-1)"""

    if ctx.order != q * q:
        raise ViewError(f"mu_{q + 1} needs a field of order {q * q}, got {ctx.order}")
    step = ctx.pow(ctx.generator, q - 1)
    elements = []
    current = 1
    for _ in range(q + 1):
        elements.append(current)
        current = ctx.mul(current, step)
    return SubgroupView(ctx, "mu", tuple(elements), q)


def full_star_view(ctx: FieldCtx) -> SubgroupView:
    """Function: F^* as a view"""

    return SubgroupView(ctx, "full-star", tuple(range(1, ctx.order)))


def omega_split(mu: SubgroupView) -> Tuple[SubgroupView, SubgroupView]:
    """Function: ({x^2}, {-x^2}) over x in mu"""

    if mu.kind != "mu":
        raise ViewError(f"omega split needs a mu view, got {mu.kind}")
    ctx = mu.ctx
    squares = np.unique(ctx.mul_many(mu.indices, mu.indices))
    negated = np.unique(ctx.neg_many(squares))
    plus = SubgroupView(ctx, "omega-plus", tuple(squares.tolist()), mu.q)
    minus = SubgroupView(ctx, "omega-minus", tuple(negated.tolist()), mu.q)
    LOG.debug("Omega split of mu_%d: %d / %d", len(mu), len(plus), len(minus))
    return plus, minus


def square_class_split(ctx: FieldCtx) -> Tuple[SubgroupView, SubgroupView]:
    """Function: ({x^2}, {2x^2}) over x in F^*; requires 2 to be a non-square"""

    two = FieldElement(ctx, ctx.from_int(2))
    if ctx.p == 2 or is_square(two):
        raise ViewError(f"2 is a square in F_{ctx.p}^{ctx.m}; the square classes do not split by 2")
    nonzero = np.arange(1, ctx.order, dtype=np.int64)
    squares = np.unique(ctx.mul_many(nonzero, nonzero))
    doubled = np.unique(ctx.mul_many(squares, two.index))
    return (
        SubgroupView(ctx, "omega-sq", tuple(squares.tolist())),
        SubgroupView(ctx, "omega-2sq", tuple(doubled.tolist())),
    )


def check_partition(parts: Sequence[SubgroupView], whole: Union[SubgroupView, Sequence[int]]) -> PartitionCheck:
    """Function: are the parts pairwise disjoint with union equal to whole"""

    whole_set = set(whole.elements) if isinstance(whole, SubgroupView) else set(int(e) for e in whole)
    seen: set = set()
    disjoint = True
    for part in parts:
        members = set(part.elements)
        if seen & members:
            disjoint = False
        seen |= members
    return PartitionCheck(
        disjoint=disjoint,
        covers=seen == whole_set,
        sizes=tuple(len(part) for part in parts),
        whole_size=len(whole_set),
    )


def check_sum_product_system(view: SubgroupView, total: FieldElement, product: FieldElement) -> int:
    """Function: number of unordered pairs {x, y} in view with x + y = total and x * y = product

    x = y is allowed, matching the two roots of u^2 - total*u + product.
    """

    ctx = view.ctx
    check_same_field(FieldElement(ctx, 0), total, product)
    xs = view.indices
    ys = ctx.sub_many(total.index, xs)
    matches = view.occupancy[ys] & (ctx.mul_many(xs, ys) == product.index) & (xs <= ys)
    return int(np.count_nonzero(matches))


def group_closure_failures(view: SubgroupView) -> List[str]:
    """Function: reasons the view is not closed under products and inverses"""

    ctx = view.ctx
    failures = []
    products = ctx.mul_many(view.indices[:, None], view.indices[None, :])
    if not np.all(view.occupancy[products]):
        failures.append("product")
    nonzero = view.indices[view.indices != 0]
    if nonzero.size != view.indices.size or not np.all(view.occupancy[ctx.inv_many(nonzero)]):
        failures.append("inverse")
    return failures
