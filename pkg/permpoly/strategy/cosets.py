"""Module: Multiplicative cyclotomic cosets of trace exponents

Tr(y^q) = Tr(y), so x + gamma*Tr(x^k) and x + gamma*Tr(x^(kq)) are the same
function; one representative per coset {k q^i mod q^n - 1} is enough.
"""

from typing import List, Tuple


def coset(k: int, q: int, n: int) -> List[int]:
    """Function: {k q^i mod q^n - 1}, ascending"""

    modulus = q ** n - 1
    members = []
    current = k % modulus
    while current not in members:
        members.append(current)
        current = current * q % modulus
    return sorted(members)


def canonical_k(k: int, q: int, n: int) -> Tuple[int, List[int]]:
    """Function: (minimal coset member, sorted coset) for 1 <= k < q^n - 1"""

    if not 1 <= k < q ** n - 1:
        raise ValueError(f"k={k} outside [1, {q ** n - 2}]")
    members = coset(k, q, n)
    return members[0], members


def coset_leaders(q: int, n: int) -> List[int]:
    """Function: ascending canonical exponents of [1, q^n - 2]"""

    modulus = q ** n - 1
    seen = bytearray(modulus)
    leaders = []
    for k in range(1, modulus):
        if seen[k]:
            continue
        leaders.append(k)
        current = k
        while not seen[current]:
            seen[current] = 1
            current = current * q % modulus
    return leaders
