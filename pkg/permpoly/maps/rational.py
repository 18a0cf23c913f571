"""Module: Rational maps

A RationalMap evaluates prefactor(x) * (numerator(x) / denominator(x)) ** power
pointwise; the quotient is never cleared into one polynomial.
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

import numpy as np

from permpoly.exceptions import FieldError, PoleError
from permpoly.fields.galois_field import FieldCtx, FieldElement
from permpoly.maps.base_map import BaseMap, Domain, domain_descriptor, domain_field, domain_indices
from permpoly.maps.dense import DensePolynomial

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalMap(BaseMap):
    """Data Class: quotient of dense polynomials with an optional certified domain"""

    numerator: DensePolynomial
    denominator: DensePolynomial
    prefactor: Optional[DensePolynomial] = None
    power: int = 1
    domain: Optional[Domain] = None

    kind = "rational"

    def __post_init__(self):
        if not self.denominator.coeffs:
            raise FieldError("denominator is the zero polynomial")
        if self.numerator.ctx != self.denominator.ctx:
            raise FieldError("numerator and denominator over different fields")
        if self.prefactor is not None and self.prefactor.ctx != self.numerator.ctx:
            raise FieldError("prefactor over a different field")

    @property
    def field(self) -> FieldCtx:
        return self.numerator.ctx

    def evaluate(self, index: int) -> int:
        ctx = self.field
        denominator = self.denominator.evaluate(index)
        if denominator == 0:
            raise PoleError(index)
        value = ctx.pow(ctx.div(self.numerator.evaluate(index), denominator), self.power)
        if self.prefactor is not None:
            value = ctx.mul(self.prefactor.evaluate(index), value)
        return value

    def evaluate_many(self, indices) -> np.ndarray:
        """Method: vectorised evaluation, PoleError at the first pole"""

        ctx = self.field
        indices = np.asarray(indices, dtype=np.int64)
        denominators = self.denominator.evaluate_many(indices)
        poles = np.flatnonzero(denominators == 0)
        if poles.size:
            raise PoleError(int(indices.ravel()[poles[0]]))
        values = ctx.pow_many(ctx.mul_many(self.numerator.evaluate_many(indices), ctx.inv_many(denominators)), self.power)
        if self.prefactor is not None:
            values = ctx.mul_many(self.prefactor.evaluate_many(indices), values)
        return values

    def poles_on(self, domain: Domain) -> np.ndarray:
        """Method: indices of domain elements where the denominator vanishes"""

        indices = domain_indices(domain)
        return indices[self.denominator.evaluate_many(indices) == 0]

    def certify(self, domain: Domain) -> "RationalMap":
        """Method: copy of the map with domain certified pole-free by enumeration"""

        if domain_field(domain) != self.field:
            raise FieldError("certification domain lives in another field")
        poles = self.poles_on(domain)
        if poles.size:
            raise PoleError(int(poles[0]), f"denominator vanishes at {poles.size} domain element(s)")
        LOG.debug("Certified %s pole-free on %s", self.describe(), domain_descriptor(domain)["kind"])
        return replace(self, domain=domain)

    @property
    def certified(self) -> bool:
        """Method: no pole on the field was found at construction"""

        return self.domain is not None

    def describe(self) -> Dict[str, Any]:
        return {
            "numerator": list(self.numerator.coeffs),
            "denominator": list(self.denominator.coeffs),
            "prefactor": list(self.prefactor.coeffs) if self.prefactor is not None else None,
            "power": self.power,
            "domain": domain_descriptor(self.domain)["kind"] if self.domain is not None else None,
        }


def eval_rational(rmap: RationalMap, x: FieldElement) -> FieldElement:
    """Function: pointwise evaluation, PoleError at denominator roots"""

    return rmap(x)
