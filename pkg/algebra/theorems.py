# algebra/theorems.py
"""
Checkers for the closure theorems on complete sets

Every checker tests the side condition, builds the object the theorem talks
about, and re-verifies completeness with the core predicate. Nothing is
asserted from the theorem alone.
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from algebra.operations import make_homogeneous_ap, prodset, scale, sumset2
from algebra.schemas import MultisetAggregate, TheoremId, TheoremReport
from core.completeness import certificate, from_results, is_complete, make_set, set_sum
from core.schemas import IntSet
from utils.errors import (
    InvalidParameter,
    NonZeroSum,
    NoSuchT,
    NotComplete,
    NotDisjoint,
    ZeroSum,
)

logger = logging.getLogger(__name__)


def _require_complete(a: IntSet, label: str):
    if not is_complete(a):
        raise NotComplete(f"{label} {a} is not complete")


def _verified_report(theorem_id: TheoremId, constructed: IntSet, **fields) -> TheoremReport:
    """Attach the re-verified status and witness of a constructed set"""
    cert = certificate(constructed)
    return TheoremReport(
        theorem_id=theorem_id,
        constructed=constructed,
        constructed_complete=cert.complete,
        witness=cert.witness,
        **fields,
    )


def _multiset_aggregate(count: int, total: int, residue_of, product_is_zero: bool) -> MultisetAggregate:
    residue = residue_of(abs(total)) if total != 0 else None
    return MultisetAggregate(
        count=count,
        total=total,
        product_residue=residue,
        product_is_zero=product_is_zero,
    )


def prodset_multiset(a: IntSet, b: IntSet) -> MultisetAggregate:
    """
    Quantities over all |A|*|B| pairwise products with multiplicity

    The members a_i*b_j sum to sum(A)*sum(B) and multiply to
    prod(A)^|B| * prod(B)^|A|.
    """
    n, m = len(a), len(b)
    total = sum(a.elements) * sum(b.elements)

    def residue_of(modulus: int) -> int:
        pa = math.prod(x % modulus for x in a.elements) % modulus
        pb = math.prod(y % modulus for y in b.elements) % modulus
        return (pow(pa, m, modulus) * pow(pb, n, modulus)) % modulus

    return _multiset_aggregate(n * m, total, residue_of, 0 in a or 0 in b)


def sumset2_multiset(a: IntSet) -> MultisetAggregate:
    """Quantities over all n(n+1)/2 sums a_i + a_j with i <= j"""
    values = a.elements
    n = len(values)
    members = [values[i] + values[j] for i in range(n) for j in range(i, n)]
    total = sum(members)

    def residue_of(modulus: int) -> int:
        result = 1 % modulus
        for member in members:
            result = (result * (member % modulus)) % modulus
        return result

    return _multiset_aggregate(len(members), total, residue_of, 0 in members)


def check_prodset_theorem(a: IntSet, b: IntSet) -> TheoremReport:
    """
    Prodset closure, evaluated over the multiset of all pairwise products

    The deduplicated prodset is reported separately in `set_complete`; the two
    readings can disagree ({1,2,3}*{1,2,3} is the standard example).
    """
    _require_complete(a, "First set")
    _require_complete(b, "Second set")
    if set_sum(a) == 0 or set_sum(b) == 0:
        raise ZeroSum("Prodset check needs both sums nonzero")

    aggregate = prodset_multiset(a, b)
    constructed = prodset(a, b)
    cert = certificate(constructed)
    detail = (
        f"multiset of {aggregate.count} products: total {aggregate.total}, "
        f"{'divisible' if aggregate.divisible else 'not divisible'}; "
        f"deduplicated set of {len(constructed)} elements "
        f"{'complete' if cert.complete else 'not complete'}"
    )
    logger.debug(detail)
    return TheoremReport(
        theorem_id=TheoremId.PRODSET,
        condition_met=True,
        condition_detail=detail,
        constructed=constructed,
        multiset=aggregate,
        constructed_complete=aggregate.divisible,
        set_complete=cert.complete,
        witness=cert.witness,
    )


def find_union_t(a: IntSet, b: IntSet) -> Tuple[Optional[int], str]:
    """
    Solve a_i*b_j = t*(a_i + b_j) for a single integer t across all pairs

    t comes from the first pair and is then verified on every pair.

    Returns:
        (t or None, explanation)
    """
    x, y = a.elements[0], b.elements[0]
    if x + y == 0:
        return None, f"pair ({x}, {y}) has zero sum, no t solves it"
    t = Fraction(x * y, x + y)
    if t.denominator != 1:
        return None, f"t from pair ({x}, {y}) is {t}, not an integer"
    t = int(t)
    for p in a.elements:
        for q in b.elements:
            if p * q != t * (p + q):
                return None, f"t = {t} fails on pair ({p}, {q})"
    return t, f"t = {t} satisfies all {len(a) * len(b)} pairs"


def check_union_t_condition(a: IntSet, b: IntSet, strict: bool = False) -> TheoremReport:
    """
    Union closure under a common t with a_i*b_j = t*(a_i + b_j)

    When no integer t exists the report has condition_met = False and no
    conclusion about the union; strict=True raises NoSuchT instead.
    """
    _require_complete(a, "First set")
    _require_complete(b, "Second set")
    if set(a.elements) & set(b.elements):
        raise NotDisjoint(f"{a} and {b} share elements")

    t, detail = find_union_t(a, b)
    if t is None:
        if strict:
            raise NoSuchT(detail)
        return TheoremReport(
            theorem_id=TheoremId.UNION_T,
            condition_met=False,
            condition_detail=f"NoSuchT: {detail}",
            constructed_complete=False,
        )

    union = from_results(a.elements + b.elements)
    return _verified_report(
        TheoremId.UNION_T,
        union,
        condition_met=True,
        condition_detail=detail,
        parameter=(t,),
    )


def augment_zero_sum(a: IntSet, h: IntSet) -> TheoremReport:
    """Union of a complete set with a disjoint zero-sum set"""
    _require_complete(a, "Base set")
    shared = set(a.elements) & set(h.elements)
    if shared:
        raise NotDisjoint(f"Sets share elements {sorted(shared)}")
    h_sum = sum(h.elements)
    if h_sum != 0:
        raise NonZeroSum(f"Added set {h} sums to {h_sum}")

    union = from_results(a.elements + h.elements)
    return _verified_report(
        TheoremId.ZERO_SUM_AUGMENT,
        union,
        condition_met=True,
        condition_detail=f"disjoint zero-sum set of {len(h)} elements added",
    )


def extend_by_balanced_pairs(a: IntSet, pairs: int) -> TheoremReport:
    """
    Grow a complete set by `pairs` balanced pairs {x, -x}

    Picks the smallest positive x with neither x nor -x already present.
    """
    if pairs < 1:
        raise InvalidParameter(f"Number of pairs must be positive, got {pairs}")
    present = set(a.elements)
    added: List[int] = []
    x = 1
    while len(added) < 2 * pairs:
        if x not in present and -x not in present:
            added.extend((x, -x))
        x += 1
    return augment_zero_sum(a, make_set(added))


def check_scaled_difference(a: IntSet, t: int) -> TheoremReport:
    """B = {t*a_i}, the H minus A of the scaled-difference statement"""
    if t == 0:
        raise InvalidParameter("t must be nonzero")
    _require_complete(a, "Set")
    return _verified_report(
        TheoremId.SCALED_DIFFERENCE,
        scale(t, a),
        condition_met=True,
        condition_detail=f"b_i = {t} * a_i for every i",
        parameter=(t,),
    )


def check_scalar_theorem(a: IntSet, q: int) -> TheoremReport:
    """q * A stays complete"""
    if q == 0:
        raise InvalidParameter("q must be nonzero")
    _require_complete(a, "Set")
    return _verified_report(
        TheoremId.SCALAR,
        scale(q, a),
        condition_met=True,
        condition_detail=f"scaled by q = {q}",
        parameter=(q,),
    )


def check_sumset2_theorem(a: IntSet) -> TheoremReport:
    """
    2-fold sumset closure

    Condition: all n(n+1)/2 sums distinct, and (n+1) | (a_i + a_j) for some i != j.
    The sumset is always built and verified; the pair found is reported 1-based.
    """
    _require_complete(a, "Set")
    values = a.elements
    n = len(values)
    constructed = sumset2(a)
    expected = n * (n + 1) // 2

    pair = None
    for i in range(n):
        for j in range(i + 1, n):
            if (values[i] + values[j]) % (n + 1) == 0:
                pair = (i + 1, j + 1)
                break
        if pair:
            break

    if len(constructed) != expected:
        detail = f"|2A| = {len(constructed)}, expected {expected}"
        met = False
    elif pair is None:
        detail = f"no pair i != j with {n + 1} | (a_i + a_j)"
        met = False
    else:
        i, j = pair
        detail = f"|2A| = {expected}; {n + 1} | ({values[i - 1]} + {values[j - 1]})"
        met = True

    cert = certificate(constructed)
    return TheoremReport(
        theorem_id=TheoremId.SUMSET2,
        condition_met=met,
        condition_detail=detail,
        parameter=pair if met else None,
        constructed=constructed,
        multiset=sumset2_multiset(a),
        constructed_complete=cert.complete,
        set_complete=cert.complete,
        witness=cert.witness,
    )


def ap_witness(d: int, n: int) -> int:
    """
    Closed-form witness of {d, ..., nd} for odd n:
    d^(n-1) * (2(n-2)! - 4(n-2)!/(n+1)), and 1 for n = 1
    """
    if n < 1 or n % 2 == 0:
        raise InvalidParameter(f"Closed-form witness needs odd n >= 1, got {n}")
    if n == 1:
        return 1
    f = math.factorial(n - 2)
    quotient, remainder = divmod(4 * f, n + 1)
    if remainder:
        raise ArithmeticError(f"{n + 1} does not divide 4*({n}-2)!")
    return d ** (n - 1) * (2 * f - quotient)


def check_homogeneous_ap_theorem(d: int, n: int) -> TheoremReport:
    """
    Odd-length homogeneous progressions are complete

    Even n is evaluated and reported, never claimed.
    """
    ap = make_homogeneous_ap(d, n)
    odd = n % 2 == 1
    if odd:
        detail = f"odd length {n}"
        closed_form = ap_witness(d, n)
    else:
        detail = f"even length {n}, no claim"
        closed_form = None

    report = _verified_report(
        TheoremId.HOMOGENEOUS_AP,
        ap,
        condition_met=odd,
        condition_detail=detail,
        parameter=(d,),
    )
    if closed_form is not None and report.witness != closed_form:
        raise ArithmeticError(
            f"Closed-form witness {closed_form} disagrees with certificate {report.witness} for d={d}, n={n}"
        )
    return report
