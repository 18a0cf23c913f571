"""Module: Conjecture maps over F_{5^k}

conj1: f(x) = x((x^2 - x + 2)/(x^2 + x + 2))^2, a permutation of F_{5^k} for odd k.
conj2: g(x) = -x((x^2 - 2)/(x^2 + 2))^2, a permutation of mu_{q+1}, q = 5^k, k even.
"""

import logging
from typing import Tuple

from permpoly.exceptions import HypothesisError, PoleError
from permpoly.fields.galois_field import field_new
from permpoly.maps.dense import DensePolynomial
from permpoly.maps.rational import RationalMap
from permpoly.views.subgroup_view import SubgroupView, mu_view

LOG = logging.getLogger(__name__)

CONJ_PRIME = 5


def _check_k(k: int, want_odd: bool, force: bool) -> None:
    if k < 1:
        raise HypothesisError(f"k must be positive, got {k}")
    if (k % 2 == 1) != want_odd:
        parity = "odd" if want_odd else "even"
        if not force:
            raise HypothesisError(f"k must be {parity}, got {k}")
        LOG.warning("Building the map for k=%d outside its hypothesis (k %s required)", k, parity)


def conj1_map(k: int, force: bool = False) -> RationalMap:
    """Function: x((x^2 - x + 2)/(x^2 + x + 2))^2 over F_{5^k}, certified pole-free on the field"""

    _check_k(k, want_odd=True, force=force)
    ctx = field_new(CONJ_PRIME, k)
    rmap = RationalMap(
        numerator=DensePolynomial.from_ints(ctx, [2, -1, 1]),
        denominator=DensePolynomial.from_ints(ctx, [2, 1, 1]),
        prefactor=DensePolynomial.from_ints(ctx, [0, 1]),
        power=2,
    )
    try:
        return rmap.certify(ctx)
    except PoleError as error:
        if not force:
            raise
        LOG.warning("conj1 map for k=%d left uncertified: %s", k, error)
        return rmap


def conj2_map(k: int, force: bool = False) -> Tuple[RationalMap, SubgroupView]:
    """Function: -x((x^2 - 2)/(x^2 + 2))^2 over F_{5^(2k)} with mu_{q+1}, certified on mu"""

    _check_k(k, want_odd=False, force=force)
    q = CONJ_PRIME ** k
    ctx = field_new(CONJ_PRIME, 2 * k)
    mu = mu_view(ctx, q)
    rmap = RationalMap(
        numerator=DensePolynomial.from_ints(ctx, [-2, 0, 1]),
        denominator=DensePolynomial.from_ints(ctx, [2, 0, 1]),
        prefactor=DensePolynomial.from_ints(ctx, [0, -1]),
        power=2,
    )
    try:
        return rmap.certify(mu), mu
    except PoleError as error:
        if not force:
            raise
        LOG.warning("conj2 map for k=%d left uncertified on mu: %s", k, error)
        return rmap, mu
