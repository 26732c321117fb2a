# brute_force_oracle.py
"""
Reference answers computed the slow way: full arbitrary-precision products and
plain subset enumeration. Nothing here imports the toolkit.
"""
import math
from itertools import combinations
from typing import Dict, Sequence


def oracle_is_complete(values: Sequence[int]) -> bool:
    """product == b * sum for some integer b, decided on the exact product"""
    if not values:
        raise ValueError("empty set")
    product = math.prod(values)
    total = sum(values)
    if total == 0:
        return product == 0
    return product % total == 0


def oracle_census(n: int, min_size: int = 2) -> Dict[int, int]:
    """size -> number of complete subsets of {1..n}, sizes min_size..n"""
    counts = {}
    universe = range(1, n + 1)
    for size in range(min_size, n + 1):
        counts[size] = sum(1 for subset in combinations(universe, size) if oracle_is_complete(subset))
    return counts
