"""Module: Galois field contexts and elements

An element of F_{p^m} is stored as the integer index sum(c_i * p^i) of its
coefficient vector in the polynomial basis 1, x, ..., x^(m-1).
"""

import functools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from permpoly.constants import ORDER_CAP, table_cap_from_env
from permpoly.exceptions import FieldError, FieldMismatchError
from permpoly.fields.irreducible import find_modulus
from permpoly.utils import is_prime, prime_factors

LOG = logging.getLogger(__name__)

IndexArray = np.ndarray


class FieldCtx:
    """Class: finite field F_{p^m}

    Immutable after construction. Scalar methods take and return element
    indices; the `*_many` methods do the same on numpy index arrays.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int], table_cap: int):
        self.p = p
        self.m = m
        self.modulus: Tuple[int, ...] = tuple(modulus)
        self.order = p ** m
        self.table_cap = table_cap
        self._weights = tuple(p ** i for i in range(m))
        self._weights_arr = np.array(self._weights, dtype=np.int64)
        self.exp_table: Optional[np.ndarray] = None
        self.log_table: Optional[np.ndarray] = None
        self._exp_list: List[int] = []
        self._log_list: List[int] = []
        self.generator = self._find_generator()
        if self.order <= table_cap:
            self._build_tables()

    # identity

    @property
    def key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return self.p, self.m, self.modulus

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    @property
    def has_tables(self) -> bool:
        return self.exp_table is not None

    def descriptor(self) -> Dict[str, object]:
        """Method: serialisable field descriptor"""

        return {"p": self.p, "m": self.m, "modulus": list(self.modulus), "generator": self.generator}

    # elements

    def element(self, index: int) -> "FieldElement":
        """Method: FieldElement wrapping an index"""

        return FieldElement(self, int(index))

    def from_int(self, number: int) -> int:
        """Method: index of the prime-subfield image of an integer"""

        return number % self.p

    def elements(self) -> Iterator["FieldElement"]:
        """Method: every element in ascending index order"""

        for index in range(self.order):
            yield FieldElement(self, index)

    def all_indices(self) -> IndexArray:
        """Method: every element index, ascending"""

        return np.arange(self.order, dtype=np.int64)

    def digits(self, index: int) -> List[int]:
        """Method: coefficient list of an index, constant term first"""

        result = []
        for _ in range(self.m):
            result.append(index % self.p)
            index //= self.p
        return result

    def from_digits(self, digits: Sequence[int]) -> int:
        """Method: index of a coefficient list"""

        return sum((digit % self.p) * weight for digit, weight in zip(digits, self._weights))

    # scalar arithmetic

    def add(self, left: int, right: int) -> int:
        """Method: left + right, coefficient-wise mod p"""

        if self.p == 2:
            return left ^ right
        if self.m == 1:
            return (left + right) % self.p
        result = 0
        for weight in self._weights:
            result += (((left // weight) + (right // weight)) % self.p) * weight
        return result

    def neg(self, value: int) -> int:
        """Method: additive inverse"""

        if self.p == 2:
            return value
        if self.m == 1:
            return (-value) % self.p
        result = 0
        for weight in self._weights:
            result += ((-(value // weight)) % self.p) * weight
        return result

    def sub(self, left: int, right: int) -> int:
        """Method: left - right"""

        return self.add(left, self.neg(right))

    def mul(self, left: int, right: int) -> int:
        """Method: product through the exp/log tables, schoolbook reduction without them"""

        if left == 0 or right == 0:
            return 0
        if self.m == 1:
            return (left * right) % self.p
        if self._exp_list:
            return self._exp_list[(self._log_list[left] + self._log_list[right]) % (self.order - 1)]
        return self._mul_schoolbook(left, right)

    def inv(self, value: int) -> int:
        """Method: multiplicative inverse, ZeroDivisionError on zero"""

        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp_list:
            return self._exp_list[(-self._log_list[value]) % (self.order - 1)]
        return self.pow(value, self.order - 2)

    def div(self, left: int, right: int) -> int:
        """Method: left / right"""

        return self.mul(left, self.inv(right))

    def pow(self, value: int, exponent: int) -> int:
        """Method: value**exponent; exponents of any size, negative ones invert"""

        if exponent < 0:
            return self.pow(self.inv(value), -exponent)
        if value == 0:
            return 1 if exponent == 0 else 0
        if exponent == 0:
            return 1
        reduced = exponent % (self.order - 1)
        if self._exp_list:
            return self._exp_list[(self._log_list[value] * reduced) % (self.order - 1)]
        return self._pow_schoolbook(value, reduced)

    def _mul_schoolbook(self, left: int, right: int) -> int:
        p, m = self.p, self.m
        ldig, rdig = self.digits(left), self.digits(right)
        product = [0] * (2 * m - 1)
        for i, lcoeff in enumerate(ldig):
            if lcoeff == 0:
                continue
            for j, rcoeff in enumerate(rdig):
                product[i + j] += lcoeff * rcoeff
        # x^m = -(c_0 + c_1 x + ... + c_{m-1} x^(m-1))
        for top in range(2 * m - 2, m - 1, -1):
            coeff = product[top] % p
            if coeff:
                for j in range(m):
                    product[top - m + j] -= coeff * self.modulus[j]
            product[top] = 0
        return self.from_digits(product[:m])

    def _pow_schoolbook(self, value: int, exponent: int) -> int:
        result = 1
        base = value
        while exponent > 0:
            if exponent & 1:
                result = self.mul(result, base) if self.m == 1 else self._mul_schoolbook(result, base)
            base = self.mul(base, base) if self.m == 1 else self._mul_schoolbook(base, base)
            exponent >>= 1
        return result

    # vectorised arithmetic

    def _arr(self, values) -> IndexArray:
        return np.asarray(values, dtype=np.int64)

    def digits_many(self, values) -> np.ndarray:
        """Method: coefficient vectors, shape values.shape + (m,)"""

        values = self._arr(values)
        return (values[..., None] // self._weights_arr) % self.p

    def from_digits_many(self, digits: np.ndarray) -> IndexArray:
        return ((digits % self.p) * self._weights_arr).sum(axis=-1)

    def add_many(self, left, right) -> IndexArray:
        """Method: broadcast add over index arrays"""

        left, right = self._arr(left), self._arr(right)
        if self.p == 2:
            return np.bitwise_xor(left, right)
        if self.m == 1:
            return (left + right) % self.p
        result = np.zeros(np.broadcast(left, right).shape, dtype=np.int64)
        for weight in self._weights:
            result += (((left // weight) + (right // weight)) % self.p) * weight
        return result

    def neg_many(self, values) -> IndexArray:
        """Method: broadcast additive inverse"""

        values = self._arr(values)
        if self.p == 2:
            return values.copy()
        if self.m == 1:
            return (-values) % self.p
        result = np.zeros(values.shape, dtype=np.int64)
        for weight in self._weights:
            result += ((-(values // weight)) % self.p) * weight
        return result

    def sub_many(self, left, right) -> IndexArray:
        """Method: broadcast subtraction"""

        return self.add_many(left, self.neg_many(right))

    def mul_many(self, left, right) -> IndexArray:
        """Method: broadcast multiply over index arrays"""

        left, right = np.broadcast_arrays(self._arr(left), self._arr(right))
        if self.m == 1:
            return (left * right) % self.p
        if self.log_table is None or self.exp_table is None:
            return np.vectorize(self.mul, otypes=[np.int64])(left, right)
        logs = (self.log_table[left] + self.log_table[right]) % (self.order - 1)
        return np.where((left == 0) | (right == 0), 0, self.exp_table[logs])

    def inv_many(self, values) -> IndexArray:
        """Method: broadcast inverse, ZeroDivisionError if any entry is zero"""

        values = self._arr(values)
        if np.any(values == 0):
            raise ZeroDivisionError("inverse of zero")
        if self.log_table is None or self.exp_table is None:
            return np.vectorize(self.inv, otypes=[np.int64])(values)
        return self.exp_table[(-self.log_table[values]) % (self.order - 1)]

    def pow_many(self, values, exponent: int) -> IndexArray:
        """Method: broadcast power through the log table"""

        values = self._arr(values)
        if exponent < 0:
            return self.pow_many(self.inv_many(values), -exponent)
        if exponent == 0:
            return np.ones(values.shape, dtype=np.int64)
        if self.log_table is None or self.exp_table is None:
            return np.vectorize(lambda v: self.pow(int(v), exponent), otypes=[np.int64])(values)
        reduced = exponent % (self.order - 1)
        result = self.exp_table[(self.log_table[values] * reduced) % (self.order - 1)]
        return np.where(values == 0, 0, result)

    def frobenius_many(self, values, iterate: int) -> IndexArray:
        """Method: x^(p^iterate) over an index array"""

        return self.pow_many(values, self.p ** iterate)

    # construction helpers

    def _find_generator(self) -> int:
        group_order = self.order - 1
        cofactors = [group_order // prime for prime in prime_factors(group_order)]
        for candidate in range(1, self.order):
            if all(self._pow_schoolbook(candidate, cofactor) != 1 for cofactor in cofactors):
                return candidate
        raise FieldError(f"no primitive element found in F_{self.p}^{self.m}")

    def _scale_matrix(self, constant: int) -> np.ndarray:
        # row i holds the coefficients of constant * x^i
        rows = [self.digits(self._mul_schoolbook(constant, weight)) for weight in self._weights]
        return np.array(rows, dtype=np.int64)

    def _build_tables(self) -> None:
        size = self.order - 1
        exp_table = np.empty(size, dtype=np.int64)
        exp_table[0] = 1
        filled = 1
        # doubling: exp[f + i] = exp[i] * g^f, multiplication by a constant being F_p-linear
        while filled < size:
            step = min(filled, size - filled)
            shift = self._pow_schoolbook(self.generator, filled) if self.m > 1 else pow(self.generator, filled, self.p)
            if self.m == 1:
                exp_table[filled : filled + step] = (exp_table[:step] * shift) % self.p
            else:
                matrix = self._scale_matrix(shift)
                block = self.digits_many(exp_table[:step]) @ matrix
                exp_table[filled : filled + step] = self.from_digits_many(block)
            filled += step
        log_table = np.full(self.order, -1, dtype=np.int64)
        log_table[exp_table] = np.arange(size, dtype=np.int64)
        exp_table.setflags(write=False)
        log_table.setflags(write=False)
        self.exp_table = exp_table
        self.log_table = log_table
        self._exp_list = exp_table.tolist()
        self._log_list = log_table.tolist()
        LOG.debug("Built exp/log tables for F_%d^%d (%d entries)", self.p, self.m, size)


@dataclass(frozen=True)
class FieldElement:
    """Data Class: one element of a FieldCtx"""

    ctx: FieldCtx
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ctx.order:
            raise FieldError(f"index {self.index} outside F_{self.ctx.p}^{self.ctx.m}")

    def _peer(self, other: Union["FieldElement", int]) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatchError(f"{self.ctx!r} and {other.ctx!r} mixed in one operation")
            return other.index
        if isinstance(other, (int, np.integer)):
            return self.ctx.from_int(int(other))
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def _wrap(self, index: int) -> "FieldElement":
        return FieldElement(self.ctx, int(index))

    def __add__(self, other):
        return self._wrap(self.ctx.add(self.index, self._peer(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.ctx.sub(self.index, self._peer(other)))

    def __rsub__(self, other):
        return self._wrap(self.ctx.sub(self._peer(other), self.index))

    def __mul__(self, other):
        return self._wrap(self.ctx.mul(self.index, self._peer(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.ctx.div(self.index, self._peer(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.ctx.div(self._peer(other), self.index))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.index))

    def __pow__(self, exponent: int):
        return self._wrap(self.ctx.pow(self.index, exponent))

    def __int__(self):
        return self.index

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"F{self.ctx.p}^{self.ctx.m}[{self.index}]"

    def inverse(self) -> "FieldElement":
        """Method: multiplicative inverse"""

        return self._wrap(self.ctx.inv(self.index))

    def same_field(self, other: "FieldElement") -> None:
        """Method: raise FieldMismatchError unless other lives in the same field"""

        self._peer(other)


def build_field(p: int, m: int, table_cap: Optional[int] = None) -> FieldCtx:
    """Function: construct F_{p^m} without the cache"""

    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree {m} must be at least 1")
    if p ** m > ORDER_CAP:
        raise FieldError(f"order {p}^{m} exceeds the cap {ORDER_CAP}")
    cap = table_cap_from_env() if table_cap is None else table_cap
    modulus = find_modulus(p, m)
    ctx = FieldCtx(p, m, modulus, cap)
    LOG.debug("Constructed %r with generator %d", ctx, ctx.generator)
    return ctx


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, table_cap: Optional[int]) -> FieldCtx:
    return build_field(p, m, table_cap)


def field_new(p: int, m: int, table_cap: Optional[int] = None) -> FieldCtx:
    """Function: canonical field F_{p^m}, shared per (p, m, table cap)"""

    return _cached_field(p, m, table_cap)


def check_same_field(*elements: FieldElement) -> FieldCtx:
    """Function: common context of the arguments"""

    ctx = elements[0].ctx
    for element in elements[1:]:
        elements[0].same_field(element)
    return ctx
