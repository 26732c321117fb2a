# conjectures/searches.py
"""
Bounded searches: completing a set of positive integers, complete geometric
sets {r, ..., r^n}, and complete translates F + {s}
"""
import logging
import math
from itertools import combinations
from typing import List, Optional

from algebra.operations import translate
from conjectures.schemas import ExtensionResult, GeometricFinding, TranslateFinding
from core.completeness import certificate, empty_set, is_complete, is_complete_values, make_set
from core.schemas import IntSet
from utils.errors import InvalidParameter, NotComplete

logger = logging.getLogger(__name__)

DEGENERATE_RATIOS = (-1, 0, 1)


def complete_extension(t: IntSet, bound: int, max_added: int) -> Optional[ExtensionResult]:
    """
    Smallest set of new positive integers <= bound whose union with t is complete

    Fewer added elements win; among equal sizes the lexicographically smallest.

    Args:
        t: Set of positive integers
        bound: Largest candidate
        max_added: Largest number of elements to add

    Returns:
        ExtensionResult, or None if nothing within bounds works
    """
    if any(value < 1 for value in t.elements):
        raise InvalidParameter(f"Only sets of positive integers can be extended, got {t}")
    if bound < 1 or max_added < 1:
        raise InvalidParameter("bound and max_added must be positive")

    if is_complete(t):
        return ExtensionResult(base=t, added=empty_set(), combined_complete=True, search_bound=bound)

    present = set(t.elements)
    candidates = [x for x in range(1, bound + 1) if x not in present]
    for size in range(1, max_added + 1):
        for extra in combinations(candidates, size):
            if is_complete_values(t.elements + extra):
                combined = make_set(t.elements + extra)
                logger.info(f"Completed {t} by adding {list(extra)}")
                return ExtensionResult(
                    base=t,
                    added=make_set(extra),
                    combined_complete=is_complete(combined),
                    search_bound=bound,
                )

    logger.info(f"No completion of {t} with at most {max_added} elements <= {bound}")
    return None


def geometric_search(r_min: int, r_max: int, n_max: int) -> List[GeometricFinding]:
    """
    All (r, n) with r_min <= r <= r_max, 2 <= n <= n_max and {r, ..., r^n} complete

    r in {-1, 0, 1} is skipped since the powers repeat or vanish. Arithmetic is
    exact, so large powers are fine.
    """
    if n_max < 2:
        raise InvalidParameter(f"n_max must be at least 2, got {n_max}")
    if r_min > r_max:
        raise InvalidParameter(f"Empty ratio range [{r_min}, {r_max}]")

    findings = []
    for r in range(r_min, r_max + 1):
        if r in DEGENERATE_RATIOS:
            continue
        powers = [r]
        for n in range(2, n_max + 1):
            powers.append(powers[-1] * r)
            if is_complete_values(powers):
                total = sum(powers)
                findings.append(GeometricFinding(r=r, n=n, total=total, witness=math.prod(powers) // total))
    logger.info(f"Geometric scan r in [{r_min}, {r_max}], n <= {n_max}: {len(findings)} complete")
    return findings


def translate_search(f: IntSet, m: int) -> TranslateFinding:
    """
    Smallest s with 1 <= s < m such that F + {s} is complete

    Returns:
        TranslateFinding; its s is None when no shift below m works
    """
    if m < 1:
        raise InvalidParameter(f"Bound must be positive, got {m}")
    if not is_complete(f):
        raise NotComplete(f"{f} is not complete")

    for s in range(1, m):
        shifted = translate(f, s)
        cert = certificate(shifted)
        if cert.complete:
            return TranslateFinding(base=f, s=s, translated=shifted, witness=cert.witness, search_bound=m)
    return TranslateFinding(base=f, search_bound=m)
