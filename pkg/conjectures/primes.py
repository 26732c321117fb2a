# conjectures/primes.py
"""
First odd primes, distinct-prime counting, and the prime-sum scan: for the
first n odd primes, either the set is complete, or their sum L is prime, or
L has exactly two distinct prime factors.
"""
import logging
import math
import multiprocessing
from typing import List, Optional, Tuple

import numpy as np

from config.settings import get_settings
from conjectures.schemas import PrimeFinding, ScanSummary
from core.completeness import is_complete, make_set, set_sum
from core.schemas import IntSet
from utils.decorators import log_execution_time
from utils.errors import InvalidParameter, ZeroInput

logger = logging.getLogger(__name__)


def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return np.nonzero(flags)[0]


def first_odd_primes(n: int) -> IntSet:
    """
    {3, 5, 7, ...} with exactly n elements

    The sieve limit starts from the usual n-th prime estimate and doubles
    until enough odd primes are found.
    """
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")

    limit = max(16, int(n * (math.log(n + 1) + math.log(math.log(n + 2)) + 2)))
    while True:
        odd = _sieve(limit)[1:]
        if len(odd) >= n:
            return make_set(int(p) for p in odd[:n])
        limit *= 2


def distinct_prime_factors(m: int) -> List[int]:
    """Distinct primes dividing |m|, ascending, by trial division"""
    if m == 0:
        raise ZeroInput("0 has no finite factorization")
    m = abs(m)
    factors = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            factors.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append(m)
    return factors


def omega(m: int) -> int:
    """Number of distinct prime divisors of |m|"""
    return len(distinct_prime_factors(m))


def is_prime(m: int) -> bool:
    """Deterministic trial-division primality"""
    if m < 2:
        return False
    return distinct_prime_factors(m) == [m]


def prime_finding(primes: Tuple[int, ...]) -> PrimeFinding:
    """Evaluate one prefix of the odd primes"""
    prefix = make_set(primes)
    total = set_sum(prefix)
    complete = is_complete(prefix)
    total_is_prime = is_prime(total)
    w = omega(total)
    return PrimeFinding(
        n=len(primes),
        primes=prefix,
        L=total,
        is_complete=complete,
        L_is_prime=total_is_prime,
        omega_L=w,
        holds=complete or total_is_prime or w == 2,
    )


@log_execution_time
def scan_prime_conjecture(max_n: int, include_even: bool = False,
                          workers: Optional[int] = 1) -> List[PrimeFinding]:
    """
    One finding per odd n in [3, max_n] (every n >= 2 when include_even is set)

    Violations are reported, never raised. Findings come back in ascending n
    whatever the worker count.
    """
    if max_n < 3:
        raise InvalidParameter(f"max_n must be at least 3, got {max_n}")
    if include_even:
        logger.warning("Scanning even n as well; the statement only concerns odd n")
    if workers is None:
        workers = get_settings().threads

    primes = first_odd_primes(max_n).elements
    step = 1 if include_even else 2
    first = 2 if include_even else 3
    tasks = [primes[:n] for n in range(first, max_n + 1, step)]

    if workers <= 1:
        findings = [prime_finding(task) for task in tasks]
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            findings = pool.map(prime_finding, tasks)

    violations = [f.n for f in findings if not f.holds]
    logger.info(f"Prime-sum scan up to n={max_n}: {len(findings)} findings, {len(violations)} violations")
    return findings


def summarize(findings: List[PrimeFinding]) -> ScanSummary:
    violations = sorted(f.n for f in findings if not f.holds)
    return ScanSummary(
        scanned=len(findings),
        holds=len(findings) - len(violations),
        violations=violations,
    )
