# algebra/operations.py
"""
Set operations: scaling, translation, prodsets, 2-fold sumsets and
homogeneous arithmetic progressions
"""
import logging
from typing import Optional

from algebra.schemas import HomogeneousAP
from core.completeness import from_results
from core.schemas import IntSet
from utils.decorators import validate_inputs
from utils.errors import InvalidParameter

logger = logging.getLogger(__name__)


def scale(q: int, a: IntSet) -> IntSet:
    """q * A = {q * a_i}; q must be nonzero so cardinality is kept"""
    if q == 0:
        raise InvalidParameter("Scale factor must be nonzero")
    return from_results(q * value for value in a.elements)


def translate(a: IntSet, s: int) -> IntSet:
    """A + {s} = {a_i + s}"""
    return from_results(value + s for value in a.elements)


def prodset(a: IntSet, b: IntSet) -> IntSet:
    """All pairwise products a_i * b_j, deduplicated"""
    return from_results(x * y for x in a.elements for y in b.elements)


def sumset2(a: IntSet) -> IntSet:
    """2A = {a_i + a_j : i <= j}, deduplicated"""
    values = a.elements
    return from_results(
        values[i] + values[j]
        for i in range(len(values))
        for j in range(i, len(values))
    )


@validate_inputs(d=int, n=int)
def make_homogeneous_ap(d: int, n: int) -> IntSet:
    """
    Materialize {d, 2d, ..., nd}

    Args:
        d: Nonzero common value (negative allowed)
        n: Length, at least 1
    """
    if d == 0:
        raise InvalidParameter("Common value d must be nonzero")
    if n < 1:
        raise InvalidParameter(f"Length n must be positive, got {n}")
    return from_results(HomogeneousAP(d=d, n=n).materialize())


def recognize_homogeneous_ap(a: IntSet) -> Optional[HomogeneousAP]:
    """
    Return (d, n) when A is exactly {d, 2d, ..., nd}, else None

    For negative d the multiples run downward, so the element nearest zero is d.
    """
    values = a.elements
    if not values:
        return None

    if values[0] > 0:
        d = values[0]
        multiples = values
    elif values[-1] < 0:
        d = values[-1]
        multiples = tuple(reversed(values))
    else:
        return None

    for k, value in enumerate(multiples, start=1):
        if value != k * d:
            return None
    return HomogeneousAP(d=d, n=len(values))
