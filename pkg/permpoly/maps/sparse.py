"""Module: Sparse polynomials with arbitrarily large exponents"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from permpoly.exceptions import FieldError
from permpoly.fields.galois_field import FieldCtx, FieldElement
from permpoly.maps.base_map import BaseMap
from permpoly.maps.dense import DensePolynomial

Term = Tuple[int, int]


@dataclass(frozen=True)
class SparsePolynomial(BaseMap):
    """Data Class: (exponent, coefficient index) terms

    Terms sharing an exponent are merged and zero coefficients dropped, so
    exponents are strictly increasing.
    """

    ctx: FieldCtx
    terms: Tuple[Term, ...]

    kind = "sparse"

    def __post_init__(self):
        merged: Dict[int, int] = {}
        limit = self.ctx.order ** 2
        for exponent, coeff in self.terms:
            exponent, coeff = int(exponent), int(coeff)
            if exponent < 0 or exponent > limit:
                raise FieldError(f"exponent {exponent} outside [0, {limit}]")
            if not 0 <= coeff < self.ctx.order:
                raise FieldError(f"coefficient {coeff} outside the field")
            merged[exponent] = self.ctx.add(merged.get(exponent, 0), coeff)
        terms = tuple((e, c) for e, c in sorted(merged.items()) if c)
        object.__setattr__(self, "terms", terms)

    @property
    def field(self) -> FieldCtx:
        return self.ctx

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    def evaluate(self, index: int) -> int:
        total = 0
        for exponent, coeff in self.terms:
            total = self.ctx.add(total, self.ctx.mul(coeff, self.ctx.pow(index, exponent)))
        return total

    def evaluate_many(self, indices) -> np.ndarray:
        """Method: sum of c * x^e over an index array"""

        indices = np.asarray(indices, dtype=np.int64)
        total = np.zeros(indices.shape, dtype=np.int64)
        for exponent, coeff in self.terms:
            total = self.ctx.add_many(total, self.ctx.mul_many(coeff, self.ctx.pow_many(indices, exponent)))
        return total

    def reduced_exponent(self, exponent: int) -> int:
        """Method: smallest exponent giving the same function as x^exponent"""

        if exponent == 0:
            return 0
        return (exponent - 1) % (self.ctx.order - 1) + 1

    def to_dense(self) -> DensePolynomial:
        """Method: function-equivalent dense polynomial of degree below the field order"""

        coeffs = [0] * self.ctx.order
        for exponent, coeff in self.terms:
            reduced = self.reduced_exponent(exponent)
            coeffs[reduced] = self.ctx.add(coeffs[reduced], coeff)
        return DensePolynomial(self.ctx, tuple(coeffs))

    def is_monomial_function(self) -> bool:
        """Method: the polynomial acts as a single monomial c*x^e (or zero)"""

        return len(self.to_dense().to_sparse().terms) <= 1

    def describe(self) -> Dict[str, Any]:
        return {"terms": [[e, c] for e, c in self.terms]}


def eval_sparse(poly: SparsePolynomial, x: FieldElement) -> FieldElement:
    """Function: sum of c_i * x^(e_i) via the power ladder"""

    return poly(x)
