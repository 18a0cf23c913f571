"""Module: Niho-exponent trinomials x + l1 x^(s(5^k-1)+1) + l2 x^(t(5^k-1)+1)"""

from dataclasses import dataclass
from typing import Any, Dict

from permpoly.exceptions import HypothesisError
from permpoly.fields.galois_field import field_new
from permpoly.maps.sparse import SparsePolynomial

NIHO_PRIME = 5


@dataclass(frozen=True)
class NihoParams:
    """Data Class: trinomial parameters over F_{5^(2k)}"""

    k: int
    s: int
    t: int
    lambda1: int
    lambda2: int

    def __post_init__(self):
        if self.k < 1:
            raise HypothesisError(f"k must be positive, got {self.k}")
        for name in ("s", "t"):
            value = getattr(self, name)
            if not 1 <= value <= self.q:
                raise HypothesisError(f"{name}={value} outside [1, {self.q}]")
        for name in ("lambda1", "lambda2"):
            if getattr(self, name) not in (1, -1):
                raise HypothesisError(f"{name} must be 1 or -1")
        if max(self.exponents) >= self.q ** 2:
            raise HypothesisError("Niho exponent reaches the field order")

    @property
    def q(self) -> int:
        return NIHO_PRIME ** self.k

    @property
    def exponents(self):
        """Method: the three exponents of the trinomial"""

        return self.s * (self.q - 1) + 1, self.t * (self.q - 1) + 1

    def swapped(self) -> "NihoParams":
        """Method: parameters with (s, lambda1) and (t, lambda2) exchanged"""

        return NihoParams(self.k, self.t, self.s, self.lambda2, self.lambda1)

    def to_dict(self) -> Dict[str, Any]:
        """Method: JSON-ready form"""

        return {"k": self.k, "s": self.s, "t": self.t, "lambda1": self.lambda1, "lambda2": self.lambda2}


def niho_trinomial(params: NihoParams) -> SparsePolynomial:
    """Function: the trinomial as a merged sparse polynomial over F_{5^(2k)}"""

    ctx = field_new(NIHO_PRIME, 2 * params.k)
    first, second = params.exponents
    return SparsePolynomial(
        ctx,
        ((1, 1), (first, ctx.from_int(params.lambda1)), (second, ctx.from_int(params.lambda2))),
    )
