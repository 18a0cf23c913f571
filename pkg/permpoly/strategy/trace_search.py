"""Module: Exhaustive search for permutations x + gamma * Tr_{q^n/q}(x^k)

Work unit = (p, j, n, k) with k a coset leader; the gamma loop runs inside
the unit. Tr(x^k) is shared by every gamma of a unit. A batched prefilter
evaluates all gamma at once on a prefix of the field and drops those with a
collision there; survivors are checked the same way on the whole field.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from permpoly.config import SearchConfig
from permpoly.constants import ORDER_CAP
from permpoly.engine.perm_check import PermReport, is_permutation, is_permutation_by_sorting
from permpoly.exceptions import FieldError
from permpoly.fields.field_ops import trace_many
from permpoly.fields.galois_field import FieldCtx, field_new
from permpoly.maps.trace_map import TraceMap
from permpoly.strategy.base_strategy import BaseSearch
from permpoly.strategy.cosets import coset, coset_leaders
from permpoly.strategy.family_tags import family_tag
from permpoly.utils import is_prime

LOG = logging.getLogger(__name__)

# rows x prefix entries evaluated per prefilter block
PREFILTER_BLOCK = 1 << 20

TraceUnit = Tuple[int, int, int, int]


@dataclass(frozen=True)
class SearchRecord:
    """Data Class: one permutation x + gamma * Tr(x^k) found by the search"""

    p: int
    j: int
    n: int
    modulus: Tuple[int, ...]
    k: int
    k_coset: Tuple[int, ...]
    gamma: int
    is_pp: bool = True
    family_tag: Optional[str] = None

    @property
    def q(self) -> int:
        return self.p ** self.j

    @property
    def sort_key(self) -> Tuple[int, int, int, int, int]:
        return self.p, self.j, self.n, self.k, self.gamma

    def to_map(self) -> TraceMap:
        """Method: the record as a TraceMap, modulus checked"""

        ctx = field_new(self.p, self.j * self.n)
        if ctx.modulus != self.modulus:
            raise FieldError(f"record modulus {list(self.modulus)} differs from the field's {list(ctx.modulus)}")
        return TraceMap(ctx, self.j, self.k, self.gamma)

    def to_dict(self) -> Dict[str, Any]:
        """Method: JSON form, field first"""

        return {
            "field": {"p": self.p, "j": self.j, "n": self.n, "modulus": list(self.modulus)},
            "k": self.k,
            "k_coset": list(self.k_coset),
            "gamma": self.gamma,
            "is_pp": self.is_pp,
            "family_tag": self.family_tag,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchRecord":
        """Method: record from its JSON form"""

        field_data = data["field"]
        return cls(
            p=int(field_data["p"]),
            j=int(field_data["j"]),
            n=int(field_data["n"]),
            modulus=tuple(int(c) for c in field_data["modulus"]),
            k=int(data["k"]),
            k_coset=tuple(int(k) for k in data["k_coset"]),
            gamma=int(data["gamma"]),
            is_pp=bool(data.get("is_pp", True)),
            family_tag=data.get("family_tag"),
        )


def search_fields(max_order: int) -> List[Tuple[int, int, int]]:
    """Function: every (p, j, n) with n > 1 and p^(j n) <= max_order, ascending"""

    if max_order > ORDER_CAP:
        raise FieldError(f"search bound {max_order} exceeds the cap {ORDER_CAP}")
    triples = []
    for p in range(2, max_order + 1):
        if p * p > max_order:
            break
        if not is_prime(p):
            continue
        j = 1
        while p ** (2 * j) <= max_order:
            n = 2
            while p ** (j * n) <= max_order:
                triples.append((p, j, n))
                n += 1
            j += 1
    return triples


def injective_gammas(ctx: FieldCtx, xs: np.ndarray, traces: np.ndarray, gammas: np.ndarray) -> np.ndarray:
    """Function: mask of the gammas for which x + gamma * t is injective on xs

    traces holds Tr(x^k) for each x in xs; it does not depend on gamma, so
    one array serves every gamma of a work unit.
    """

    if xs.size < 2 or gammas.size == 0:
        return np.ones(gammas.size, dtype=bool)
    rows = max(1, PREFILTER_BLOCK // xs.size)
    masks = []
    for start in range(0, gammas.size, rows):
        block = gammas[start : start + rows]
        values = ctx.add_many(xs[None, :], ctx.mul_many(block[:, None], traces[None, :]))
        values.sort(axis=1)
        masks.append(np.all(values[:, 1:] != values[:, :-1], axis=1))
    return np.concatenate(masks)


def prefilter_gammas(ctx: FieldCtx, base_degree: int, k: int, gammas: np.ndarray, prefix: int) -> np.ndarray:
    """Function: gammas whose map is injective on the first `prefix` elements"""

    xs = ctx.all_indices()[:prefix]
    traces = trace_many(ctx, ctx.pow_many(xs, k), 1, base_degree)
    return gammas[injective_gammas(ctx, xs, traces, gammas)]


def run_trace_unit(unit: TraceUnit, options: Dict[str, Any]) -> List[SearchRecord]:
    """Function: all permutation gammas for one (p, j, n, k)

    Tr(x^k) is computed once over the whole field. With early abort the
    gammas are first screened on a prefix of it, then the survivors are
    checked on every element.
    """

    p, j, n, k = unit
    ctx = field_new(p, j * n)
    q = p ** j
    xs = ctx.all_indices()
    traces = trace_many(ctx, ctx.pow_many(xs, k), 1, j)
    gammas = np.arange(1, ctx.order, dtype=np.int64)
    prefix = options.get("prefilter", 0)
    if options.get("early_abort", True) and 1 < prefix < ctx.order:
        gammas = gammas[injective_gammas(ctx, xs[:prefix], traces[:prefix], gammas)]
    gammas = gammas[injective_gammas(ctx, xs, traces, gammas)]
    k_coset = tuple(coset(k, q, n))
    return [
        SearchRecord(p, j, n, ctx.modulus, k, k_coset, gamma, True, family_tag(ctx, j, n, k, gamma))
        for gamma in gammas.tolist()
    ]


class TraceSearch(BaseSearch):
    """Class: search over every admissible field below the bound"""

    name = "trace search"

    def work_units(self) -> List[TraceUnit]:
        """Method: (p, j, n, k) for every admissible field and coset leader"""

        units = []
        for p, j, n in search_fields(self.cfg.max_order):
            if not self.cfg.allows(p, j, n):
                continue
            q = p ** j
            ks = coset_leaders(q, n) if self.cfg.use_cosets else range(1, q ** n - 1)
            units.extend((p, j, n, k) for k in ks)
            LOG.debug("Field q=%d n=%d: %d exponent(s)", q, n, len(ks))
        return units

    def unit_runner(self) -> Callable[[Any, Dict[str, Any]], List[Any]]:
        return run_trace_unit

    def run(self, sink: Optional[Callable[[List[Any]], None]] = None) -> List[SearchRecord]:
        """Method: records of every unit, counting the untagged ones as they arrive"""

        self.counts["novel"] = 0

        def counting_sink(batch: List[Any]) -> None:
            self.counts["novel"] += sum(1 for record in batch if record.family_tag is None)
            if sink is not None:
                sink(batch)

        return super().run(counting_sink)


def search_trace_pps(cfg: SearchConfig, sink: Optional[Callable[[List[Any]], None]] = None) -> List[SearchRecord]:
    """Function: records sorted by (p, j, n, k, gamma); gamma = 0 is never tried

    sink receives the records unit by unit, in the same order, while the
    search runs.
    """

    return TraceSearch(cfg).run(sink)


def brute_force_trace_pps(p: int, j: int, n: int) -> List[SearchRecord]:
    """Function: every k and gamma, sort-based check, no cosets or early abort"""

    ctx = field_new(p, j * n)
    q = p ** j
    records = []
    for k in range(1, ctx.order - 1):
        k_coset = tuple(coset(k, q, n))
        for gamma in range(1, ctx.order):
            if is_permutation_by_sorting(TraceMap(ctx, j, k, gamma), ctx).is_pp:
                records.append(SearchRecord(p, j, n, ctx.modulus, k, k_coset, gamma))
    return records


def header_line(cfg: SearchConfig) -> Dict[str, Any]:
    """Function: first JSON line of a search file, describing the search"""

    return {
        "header": {
            "search": "x + gamma * Tr(x^k)",
            "max_order": cfg.max_order,
            "fields": cfg.fields,
            "k": "coset leaders of k*q^i mod q^n - 1" if cfg.use_cosets else "all 1 <= k < q^n - 1",
            "gamma": "all nonzero gamma; gamma = 0 gives the identity map and is skipped",
        }
    }


def load_records(path: Path) -> List[SearchRecord]:
    """Function: records of a JSON-lines file, header lines skipped"""

    records = []
    with open(path) as file:
        for line in file:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            if "header" in data:
                continue
            records.append(SearchRecord.from_dict(data))
    return records


def reverify_records(path: Path) -> List[Tuple[SearchRecord, PermReport]]:
    """Function: re-check every stored record as a permutation"""

    results = []
    for record in load_records(path):
        tmap = record.to_map()
        results.append((record, is_permutation(tmap, tmap.field)))
    failed = sum(1 for _, report in results if not report.is_pp)
    LOG.info("Re-verified %d record(s) from %s, %d failed", len(results), path, failed)
    return results
