# core/completeness.py
"""
The completeness predicate: a finite integer set is complete when the product
of its elements is an integer multiple of their sum.
"""
import logging
import math
from functools import reduce
from typing import Iterable, Sequence

from pydantic import ValidationError

from core.schemas import INT64_MAX, INT64_MIN, Certificate, IntSet, NormalFormResult
from utils.errors import DegenerateSet, DuplicateElement, EmptyInput, InvalidParameter, Overflow

logger = logging.getLogger(__name__)


def _check_int64(value: int, what: str) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise Overflow(f"{what} {value} exceeds the signed 64-bit range")
    return value


def make_set(values: Iterable[int]) -> IntSet:
    """
    Build the canonical IntSet from raw values

    Args:
        values: Non-empty collection of distinct integers, any order

    Returns:
        IntSet sorted ascending
    """
    values = list(values)
    if not values:
        raise EmptyInput("A set needs at least one element")

    seen = set()
    for value in values:
        if value in seen:
            raise DuplicateElement(f"Value {value} appears more than once")
        seen.add(value)
        _check_int64(value, "Element")

    try:
        return IntSet(elements=tuple(sorted(values)))
    except ValidationError as e:
        raise Overflow(str(e))


def empty_set() -> IntSet:
    """The empty set, allowed only as an operation result"""
    return IntSet(elements=())


def from_results(values: Iterable[int]) -> IntSet:
    """Canonical set from operation results; duplicates collapse, empty allowed"""
    values = sorted(set(values))
    for value in values:
        _check_int64(value, "Result element")
    return IntSet(elements=tuple(values))


def set_sum(a: IntSet) -> int:
    """Exact sum of the elements; Overflow if it leaves the 64-bit range"""
    return _check_int64(sum(a.elements), "Sum")


def product_mod(a: IntSet, m: int) -> int:
    """
    Product of the elements reduced mod m, always in [0, m)

    Each factor is reduced before multiplying, so intermediates stay below m^2.
    """
    if m < 1:
        raise InvalidParameter(f"Modulus must be a positive integer, got {m}")
    return _product_mod_values(a.elements, m)


def _product_mod_values(values: Iterable[int], m: int) -> int:
    result = 1 % m
    for value in values:
        result = (result * (value % m)) % m
        if result == 0:
            break
    return result


def is_complete(a: IntSet) -> bool:
    """
    Decide whether some integer b satisfies product = b * sum

    A zero sum forces the product to be 0, i.e. the set must contain 0.
    """
    if len(a) == 0:
        raise EmptyInput("Completeness is undefined for the empty set")

    total = set_sum(a)
    if total == 0:
        return 0 in a
    return product_mod(a, abs(total)) == 0


def is_complete_values(values: Sequence[int]) -> bool:
    """
    Completeness of an arbitrary-precision sequence of distinct integers

    Used where elements may leave the 64-bit range (geometric sets).
    """
    if not values:
        raise EmptyInput("Completeness is undefined for the empty set")
    total = sum(values)
    if total == 0:
        return 0 in values
    return _product_mod_values(values, abs(total)) == 0


def certificate(a: IntSet) -> Certificate:
    """
    Compute the completeness certificate of a set

    The witness is the exact quotient product / sum, computed with Python's
    arbitrary-precision integers, and is present exactly when the set is complete.
    """
    if len(a) == 0:
        raise EmptyInput("Completeness is undefined for the empty set")

    total = set_sum(a)
    if total == 0:
        witness = 0 if 0 in a else None
        return Certificate(set=a, sum=total, witness=witness, residue=None)

    residue = product_mod(a, abs(total))
    witness = None
    if residue == 0:
        product = math.prod(a.elements)
        witness = product // total
        if witness * total != product:
            raise ArithmeticError(f"Witness check failed for {a}")
    logger.debug(f"Certificate for {a}: sum={total} residue={residue}")
    return Certificate(set=a, sum=total, witness=witness, residue=residue)


def gcd_of_differences(a: IntSet) -> int:
    """gcd of a_i - a_0; 0 exactly for singletons"""
    if len(a) == 0:
        raise EmptyInput("gcd of differences needs a non-empty set")
    base = a.elements[0]
    return reduce(math.gcd, (value - base for value in a.elements[1:]), 0)


def normal_form(a: IntSet) -> NormalFormResult:
    """
    Translate to start at 0 and divide by the gcd of differences

    Returns:
        NormalFormResult whose normalized set contains 0 and is therefore complete
    """
    if len(a) < 2:
        raise DegenerateSet(f"Normal form needs at least two elements, got {a}")

    d = gcd_of_differences(a)
    base = a.elements[0]
    try:
        normalized = IntSet(elements=tuple((value - base) // d for value in a.elements))
    except ValidationError as e:
        raise Overflow(str(e))
    return NormalFormResult(original=a, d=d, normalized=normalized)
