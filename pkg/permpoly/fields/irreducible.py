"""Module: Polynomials over F_p and modulus selection

Polynomials are coefficient lists over F_p, constant term first, with trailing
zeros trimmed (the zero polynomial is the empty list).
"""

import logging
from typing import List, Sequence, Tuple

LOG = logging.getLogger(__name__)

Poly = List[int]


def trim(poly: Sequence[int]) -> Poly:
    """Function: drop trailing zero coefficients"""

    result = list(poly)
    while result and result[-1] == 0:
        result.pop()
    return result


def degree(poly: Sequence[int]) -> int:
    """Function: degree, -1 for the zero polynomial"""

    return len(trim(poly)) - 1


def int_to_coeffs(code: int, p: int, length: int) -> Poly:
    """Function: base-p digits of code, lowest first"""

    coeffs = []
    for _ in range(length):
        coeffs.append(code % p)
        code //= p
    return coeffs


def poly_sub(left: Sequence[int], right: Sequence[int], p: int) -> Poly:
    """Function: difference in F_p[x]"""

    size = max(len(left), len(right))
    result = [0] * size
    for i, coeff in enumerate(left):
        result[i] = coeff
    for i, coeff in enumerate(right):
        result[i] = (result[i] - coeff) % p
    return trim(result)


def poly_mul(left: Sequence[int], right: Sequence[int], p: int) -> Poly:
    """Function: product in F_p[x]"""

    if not left or not right:
        return []
    result = [0] * (len(left) + len(right) - 1)
    for i, lcoeff in enumerate(left):
        if lcoeff == 0:
            continue
        for j, rcoeff in enumerate(right):
            result[i + j] = (result[i + j] + lcoeff * rcoeff) % p
    return trim(result)


def poly_mod(poly: Sequence[int], modulus: Sequence[int], p: int) -> Poly:
    """Function: remainder of poly divided by modulus"""

    modulus = trim(modulus)
    if not modulus:
        raise ZeroDivisionError("polynomial division by zero")
    result = [c % p for c in trim(poly)]
    mod_deg = len(modulus) - 1
    lead_inv = pow(modulus[-1], p - 2, p)
    while len(result) - 1 >= mod_deg:
        factor = (result[-1] * lead_inv) % p
        shift = len(result) - 1 - mod_deg
        for i, coeff in enumerate(modulus):
            result[shift + i] = (result[shift + i] - factor * coeff) % p
        result = trim(result)
    return result


def poly_powmod(base: Sequence[int], exponent: int, modulus: Sequence[int], p: int) -> Poly:
    """Function: base**exponent mod modulus by square-and-multiply"""

    result: Poly = [1]
    base = poly_mod(base, modulus, p)
    while exponent > 0:
        if exponent & 1:
            result = poly_mod(poly_mul(result, base, p), modulus, p)
        base = poly_mod(poly_mul(base, base, p), modulus, p)
        exponent >>= 1
    return result


def poly_gcd(left: Sequence[int], right: Sequence[int], p: int) -> Poly:
    """Function: monic gcd"""

    left, right = trim(left), trim(right)
    while right:
        left, right = right, poly_mod(left, right, p)
    if not left:
        return []
    lead_inv = pow(left[-1], p - 2, p)
    return [(c * lead_inv) % p for c in left]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Function: irreducibility over F_p

    f of degree d is irreducible iff gcd(x^(p^i) - x, f) = 1 for i = 1 .. d//2.
    """

    poly = trim(poly)
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:
        return False
    if deg <= 3:
        return not has_root(poly, p)
    x_poly = [0, 1]
    power = x_poly
    for _ in range(deg // 2):
        power = poly_powmod(power, p, poly, p)
        if degree(poly_gcd(poly_sub(power, x_poly, p), poly, p)) > 0:
            return False
    return True


def has_root(poly: Sequence[int], p: int) -> bool:
    """Function: exhaustive root search over F_p"""

    for value in range(p):
        acc = 0
        for coeff in reversed(trim(poly)):
            acc = (acc * value + coeff) % p
        if acc == 0:
            return True
    return False


def find_modulus(p: int, m: int) -> Tuple[int, ...]:
    """Function: canonical monic irreducible of degree m over F_p

    Candidates x^m + c_{m-1}x^{m-1} + ... + c_0 are scanned by increasing
    code c_0 + c_1 p + ... + c_{m-1} p^{m-1}; the first irreducible one wins.
    """

    for code in range(p ** m):
        candidate = int_to_coeffs(code, p, m) + [1]
        if is_irreducible(candidate, p):
            LOG.debug("Modulus for F_%d^%d: %s", p, m, candidate)
            return tuple(candidate)
    raise ArithmeticError(f"no irreducible polynomial of degree {m} over F_{p}")
