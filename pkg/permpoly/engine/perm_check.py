"""Module: Bijection checks

Maps are evaluated over the domain in ascending index order, in chunks of
doubling size. An occupancy array indexed by element index remembers the first
preimage of every value seen, so the first collision (and, for views, the
first value escaping the view) is found deterministically.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from permpoly.exceptions import FieldMismatchError
from permpoly.maps.base_map import BaseMap, Domain, domain_descriptor, domain_field, domain_indices
from permpoly.utils import stopwatch

LOG = logging.getLogger(__name__)

FIRST_CHUNK = 64
MAX_CHUNK = 1 << 16


@dataclass
class PermReport:
    """Data Class: verdict of a bijection check"""

    field: Dict[str, Any]
    map: Dict[str, Any]
    domain: Dict[str, Any]
    is_pp: bool
    witness: Optional[Tuple[int, int]]
    evals: int
    ms: float
    closure: Optional[bool] = None
    injective: Optional[bool] = None
    escapee: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """Method: JSON-ready form"""

        return {
            "field": self.field,
            "map": self.map,
            "domain": self.domain,
            "is_pp": self.is_pp,
            "witness": list(self.witness) if self.witness else None,
            "evals": self.evals,
            "ms": round(self.ms, 3),
            "closure": self.closure,
            "injective": self.injective,
            "escapee": self.escapee,
        }


@dataclass
class ValueSetProfile:
    """Data Class: image size and multiplicity histogram"""

    map: Dict[str, Any]
    domain: Dict[str, Any]
    image_size: int
    histogram: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Method: JSON-ready form"""

        return {
            "map": self.map,
            "domain": self.domain,
            "image_size": self.image_size,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
        }


def _check_field(fmap: BaseMap, domain: Domain) -> None:
    ctx = domain_field(domain)
    if fmap.field != ctx:
        raise FieldMismatchError(f"{fmap.kind} map over {fmap.field!r} checked on a domain of {ctx!r}")


def _membership(domain: Domain) -> Optional[np.ndarray]:
    indices = domain_indices(domain)
    if indices.size == domain_field(domain).order:
        return None
    return domain.occupancy


def is_permutation(fmap: BaseMap, domain: Domain, early_abort: bool = True) -> PermReport:
    """Function: is fmap a bijection of domain onto itself

    With early_abort the check stops at the first collision or escape;
    without it the whole domain is evaluated and closure and injectivity
    are both decided.
    """

    _check_field(fmap, domain)
    ctx = domain_field(domain)
    indices = domain_indices(domain)
    membership = _membership(domain)
    occupancy = np.full(ctx.order, -1, dtype=np.int64)
    witness: Optional[Tuple[int, int]] = None
    escapee: Optional[int] = None
    evals = 0
    aborted = False
    with stopwatch() as timing:
        start, size = 0, FIRST_CHUNK
        while start < indices.size and not aborted:
            block = indices[start : start + size]
            values = fmap.evaluate_many(block)
            evals += block.size
            clean = np.unique(values).size == values.size and not np.any(occupancy[values] >= 0)
            if membership is not None:
                clean = clean and bool(np.all(membership[values]))
            if clean:
                occupancy[values] = block
            else:
                for x, y in zip(block.tolist(), values.tolist()):
                    if membership is not None and not membership[y] and escapee is None:
                        escapee = x
                        if early_abort:
                            aborted = True
                            break
                    previous = occupancy[y]
                    if previous >= 0:
                        if witness is None:
                            witness = (int(previous), x)
                        if early_abort:
                            aborted = True
                            break
                    else:
                        occupancy[y] = x
            start += size
            size = min(size * 2, MAX_CHUNK)
    is_pp = witness is None and escapee is None
    report = PermReport(
        field=ctx.descriptor(),
        map=fmap.describe(),
        domain=domain_descriptor(domain),
        is_pp=is_pp,
        witness=witness,
        evals=evals,
        ms=timing["ms"],
    )
    if not aborted:
        report.injective = witness is None
        report.closure = escapee is None
    elif witness is not None:
        report.injective = False
    else:
        report.closure = False
    LOG.debug("%s on %s: is_pp=%s after %d evaluation(s)", fmap.kind, report.domain["kind"], is_pp, evals)
    return report


def permutes_subset(fmap: BaseMap, view: Domain) -> PermReport:
    """Function: closure f(S) in S and injectivity on S, both decided"""

    return is_permutation(fmap, view, early_abort=False)


def is_permutation_by_sorting(fmap: BaseMap, domain: Domain) -> PermReport:
    """Function: full evaluation, sort and compare against the domain"""

    _check_field(fmap, domain)
    ctx = domain_field(domain)
    indices = domain_indices(domain)
    with stopwatch() as timing:
        values = fmap.evaluate_many(indices)
        order = np.argsort(values, kind="stable")
        ordered = values[order]
        is_pp = bool(np.array_equal(ordered, indices))
        witness = None
        escapee = None
        if not is_pp:
            repeats = np.flatnonzero(ordered[1:] == ordered[:-1])
            if repeats.size:
                position = int(repeats[0])
                witness = (int(indices[order[position]]), int(indices[order[position + 1]]))
            outside = np.flatnonzero(~np.isin(values, indices))
            if outside.size:
                escapee = int(indices[outside[0]])
    return PermReport(
        field=ctx.descriptor(),
        map=fmap.describe(),
        domain=domain_descriptor(domain),
        is_pp=is_pp,
        witness=witness,
        evals=int(indices.size),
        ms=timing["ms"],
        closure=escapee is None,
        injective=witness is None,
        escapee=escapee,
    )


def value_set_profile(fmap: BaseMap, domain: Domain) -> ValueSetProfile:
    """Function: image size and how many outputs are hit once, twice, ..."""

    _check_field(fmap, domain)
    values = fmap.evaluate_many(domain_indices(domain))
    _, counts = np.unique(values, return_counts=True)
    histogram = Counter(int(c) for c in counts)
    return ValueSetProfile(
        map=fmap.describe(),
        domain=domain_descriptor(domain),
        image_size=int(counts.size),
        histogram=dict(histogram),
    )


def witness_is_collision(fmap: BaseMap, report: PermReport) -> bool:
    """Function: re-evaluate a refuting witness"""

    if report.witness is None:
        return False
    first, second = report.witness
    return first != second and fmap.evaluate(first) == fmap.evaluate(second)
