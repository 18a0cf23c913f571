"""Module: Base Map"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Union

import numpy as np

from permpoly.exceptions import FieldMismatchError
from permpoly.fields.galois_field import FieldCtx, FieldElement


class BaseMap(ABC):
    """Class: a function F_{p^m} -> F_{p^m} given by a formula"""

    kind = "map"

    @property
    @abstractmethod
    def field(self) -> FieldCtx:
        raise NotImplementedError()

    @abstractmethod
    def evaluate(self, index: int) -> int:
        """Method: value at one element index"""

        raise NotImplementedError()

    def evaluate_many(self, indices) -> np.ndarray:
        """Method: values at an index array"""

        indices = np.asarray(indices, dtype=np.int64)
        return np.array([self.evaluate(int(index)) for index in indices.ravel()], dtype=np.int64).reshape(
            indices.shape
        )

    @abstractmethod
    def describe(self) -> Dict[str, Any]:
        """Method: map-specific part of the descriptor"""

        raise NotImplementedError()

    def descriptor(self) -> Dict[str, Any]:
        """Method: serialisable descriptor, kind tag + parameters + field"""

        data = {"kind": self.kind}
        data.update(self.describe())
        data["field"] = self.field.descriptor()
        return data

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.ctx is not self.field and x.ctx != self.field:
            raise FieldMismatchError(f"{self.kind} map over {self.field!r} applied to {x!r}")
        return FieldElement(self.field, self.evaluate(x.index))


Domain = Union[FieldCtx, Any]


def domain_indices(domain: Domain) -> np.ndarray:
    """Function: ascending element indices of a field or view"""

    if isinstance(domain, FieldCtx):
        return domain.all_indices()
    return domain.indices


def domain_field(domain: Domain) -> FieldCtx:
    """Function: field a domain lives in"""

    if isinstance(domain, FieldCtx):
        return domain
    return domain.ctx


def domain_descriptor(domain: Domain) -> Dict[str, Any]:
    """Function: kind and size of a domain"""

    if isinstance(domain, FieldCtx):
        return {"kind": "field", "size": domain.order}
    return domain.summary()
