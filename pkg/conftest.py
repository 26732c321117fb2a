# conftest.py
"""
Shared pytest fixtures: a seeded random source and generators of random
(complete) sets
"""
import random
from typing import List

import pytest

from core.completeness import make_set
from core.schemas import IntSet

SEED = 20240611


def random_values(rng: random.Random, max_size: int = 8, lo: int = -50, hi: int = 50) -> List[int]:
    """Distinct values, size 1..max_size"""
    size = rng.randint(1, max_size)
    return rng.sample(range(lo, hi + 1), size)


def random_complete_set(rng: random.Random, max_size: int = 5, lo: int = -30, hi: int = 30) -> IntSet:
    """
    A complete set with nonzero sum

    Scaling a set of n >= 2 elements by its own sum S leaves product/sum = S^(n-2) * prod,
    so the scaled set is complete. Odd-length homogeneous progressions are mixed in.
    """
    while True:
        if rng.random() < 0.25:
            d = rng.choice([x for x in range(-9, 10) if x != 0])
            n = rng.choice([1, 3, 5])
            values = [d * k for k in range(1, n + 1)]
        else:
            values = rng.sample(range(lo, hi + 1), rng.randint(2, max_size))
            total = sum(values)
            if total == 0:
                continue
            values = [total * value for value in values]
        if sum(values) != 0 and len(set(values)) == len(values):
            return make_set(values)


def random_zero_sum_set(rng: random.Random, avoid: IntSet, max_pairs: int = 3) -> IntSet:
    """Balanced pairs {x, -x}, plus sometimes a triple {x, y, -(x+y)}, disjoint from avoid"""
    taken = set(avoid.elements)
    values: List[int] = []
    for _ in range(rng.randint(1, max_pairs)):
        x = rng.randint(1, 500)
        if x in taken or -x in taken:
            continue
        values.extend((x, -x))
        taken.update((x, -x))
    if rng.random() < 0.3:
        x, y = rng.randint(501, 900), rng.randint(901, 1300)
        triple = (x, y, -(x + y))
        if not taken.intersection(triple):
            values.extend(triple)
    if not values:
        x = max(abs(v) for v in taken) + 1 if taken else 1
        values = [x, -x]
    return make_set(values)


@pytest.fixture
def rng():
    return random.Random(SEED)
