"""Module: Dense polynomials"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from permpoly.exceptions import FieldError
from permpoly.fields.galois_field import FieldCtx, FieldElement
from permpoly.maps.base_map import BaseMap


@dataclass(frozen=True)
class DensePolynomial(BaseMap):
    """Data Class: coefficient list over the field, constant term first"""

    ctx: FieldCtx
    coeffs: Tuple[int, ...]

    kind = "dense"

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        for coeff in coeffs:
            if not 0 <= coeff < self.ctx.order:
                raise FieldError(f"coefficient {coeff} outside the field")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_ints(cls, ctx: FieldCtx, coeffs: Sequence[int]) -> "DensePolynomial":
        """Method: polynomial with prime-subfield coefficients given as integers"""

        return cls(ctx, tuple(ctx.from_int(c) for c in coeffs))

    @property
    def field(self) -> FieldCtx:
        return self.ctx

    @property
    def degree(self) -> int:
        """Method: degree, -1 for the zero polynomial"""

        return len(self.coeffs) - 1

    def evaluate(self, index: int) -> int:
        acc = 0
        for coeff in reversed(self.coeffs):
            acc = self.ctx.add(self.ctx.mul(acc, index), coeff)
        return acc

    def evaluate_many(self, indices) -> np.ndarray:
        """Method: Horner evaluation over an index array"""

        indices = np.asarray(indices, dtype=np.int64)
        acc = np.zeros(indices.shape, dtype=np.int64)
        for coeff in reversed(self.coeffs):
            acc = self.ctx.add_many(self.ctx.mul_many(acc, indices), coeff)
        return acc

    def to_sparse(self):
        """Method: nonzero terms as a SparsePolynomial"""

        from permpoly.maps.sparse import SparsePolynomial  # pylint: disable=import-outside-toplevel

        return SparsePolynomial(self.ctx, tuple((e, c) for e, c in enumerate(self.coeffs) if c))

    def describe(self) -> Dict[str, Any]:
        return {"coeffs": list(self.coeffs)}


def eval_dense(poly: DensePolynomial, x: FieldElement) -> FieldElement:
    """Function: Horner evaluation"""

    return poly(x)
