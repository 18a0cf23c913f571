"""Module: Utils"""

import logging
import time
from contextlib import contextmanager
from typing import Dict, Iterator, List

LOG = logging.getLogger(__name__)


def is_prime(number: int) -> bool:
    """Function: trial-division primality test"""

    if number < 2:
        return False
    if number % 2 == 0:
        return number == 2
    divisor = 3
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 2
    return True


def prime_factors(number: int) -> List[int]:
    """Function: distinct prime factors in increasing order"""

    factors = []
    divisor = 2
    while divisor * divisor <= number:
        if number % divisor == 0:
            factors.append(divisor)
            while number % divisor == 0:
                number //= divisor
        divisor += 1
    if number > 1:
        factors.append(number)
    return factors


@contextmanager
def stopwatch() -> Iterator[Dict[str, float]]:
    """Function: measure wall time of a block in milliseconds"""

    timing = {"ms": 0.0}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["ms"] = (time.perf_counter() - start) * 1000.0


def log_counts(title: str, counts: Dict[str, int]) -> None:
    """Function: log a summary of counters"""

    for key in sorted(counts):
        if counts[key]:
            LOG.info("%s %s: %d", title.upper(), key, counts[key])
        else:
            LOG.debug("%s %s: 0", title.upper(), key)
