"""Module: Niho trinomial enumeration over F_{5^(2k)}"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from permpoly.config import SearchConfig
from permpoly.engine.perm_check import is_permutation
from permpoly.exceptions import HypothesisError
from permpoly.families.niho import NIHO_PRIME, NihoParams, niho_trinomial
from permpoly.strategy.base_strategy import BaseSearch

LOG = logging.getLogger(__name__)

TRIVIAL_TAG = "trivial"

# (lambda1, lambda2) pairs; (-1, 1) is the swap image of (1, -1)
LAMBDA_PAIRS = ((1, 1), (1, -1), (-1, -1))

NihoUnit = Tuple[int, int]


@dataclass(frozen=True)
class NihoRecord:
    """Data Class: one permutation trinomial"""

    k: int
    s: int
    t: int
    lambda1: int
    lambda2: int
    is_pp: bool = True
    family_tag: Optional[str] = None

    @property
    def params(self) -> NihoParams:
        """Method: the record as NihoParams"""

        return NihoParams(self.k, self.s, self.t, self.lambda1, self.lambda2)

    def to_dict(self) -> Dict[str, Any]:
        """Method: JSON-ready form"""

        data: Dict[str, Any] = self.params.to_dict()
        data["exponents"] = list(self.params.exponents)
        data.update({"is_pp": self.is_pp, "family_tag": self.family_tag})
        return data


def niho_candidates(k: int, s: int) -> List[NihoParams]:
    """Function: parameter sets with first index s, deduplicated under swapping"""

    q = NIHO_PRIME ** k
    candidates = []
    for lambda1, lambda2 in LAMBDA_PAIRS:
        first_t = s if lambda1 == lambda2 else 1
        candidates.extend(NihoParams(k, s, t, lambda1, lambda2) for t in range(first_t, q + 1))
    return candidates


def run_niho_unit(unit: NihoUnit, options: Dict[str, Any]) -> List[NihoRecord]:
    """Function: permutation trinomials for one first index s"""

    k, s = unit
    records = []
    for params in niho_candidates(k, s):
        poly = niho_trinomial(params)
        if not is_permutation(poly, poly.field, early_abort=options.get("early_abort", True)).is_pp:
            continue
        tag = TRIVIAL_TAG if poly.is_monomial_function() else None
        records.append(NihoRecord(params.k, params.s, params.t, params.lambda1, params.lambda2, True, tag))
    return records


class NihoSearch(BaseSearch):
    """Class: one work unit per first Niho index s"""

    name = "niho search"

    def __init__(self, k: int, cfg: SearchConfig):
        super().__init__(cfg)
        if k < 1:
            raise HypothesisError(f"k must be positive, got {k}")
        if NIHO_PRIME ** (2 * k) > cfg.max_order:
            raise HypothesisError(f"F_5^{2 * k} exceeds the search bound {cfg.max_order}")
        self.k = k

    def work_units(self) -> List[NihoUnit]:
        """Method: one unit per s in 1 .. 5^k"""

        return [(self.k, s) for s in range(1, NIHO_PRIME ** self.k + 1)]

    def unit_runner(self) -> Callable[[Any, Dict[str, Any]], List[Any]]:
        return run_niho_unit


def search_niho(k: int, cfg: SearchConfig) -> List[NihoRecord]:
    """Function: permutation trinomials sorted by (s, lambda pair, t)"""

    return NihoSearch(k, cfg).run()
