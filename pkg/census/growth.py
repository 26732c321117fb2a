# census/growth.py
"""
Growth table: exact counts where enumeration is feasible, the AP lower bound
beyond, each normalised by N ln N and N ln N ln ln N
"""
import logging
import math
from typing import List, Optional, Sequence

import pandas as pd

from census.bounds import ap_lower_bound
from census.enumerator import MAX_N, census
from census.schemas import GrowthFlavor, GrowthRow
from utils.errors import InvalidParameter, NTooLarge

logger = logging.getLogger(__name__)


def growth_row(n: int, value: int, flavor: GrowthFlavor) -> GrowthRow:
    nlogn = n * math.log(n)
    if n < 3:
        return GrowthRow(n=n, count_or_bound=value, flavor=flavor, nlogn=nlogn)
    nloglog = nlogn * math.log(math.log(n))
    return GrowthRow(
        n=n,
        count_or_bound=value,
        flavor=flavor,
        nlogn=nlogn,
        nloglog=nloglog,
        ratio_lower=value / nlogn,
        ratio_upper=value / nloglog,
    )


def growth_table(ns: Sequence[int], exact_up_to: int, min_size: int = 2,
                 workers: Optional[int] = None) -> List[GrowthRow]:
    """
    Build one GrowthRow per N

    Args:
        ns: Ascending list of N values
        exact_up_to: N at or below this are counted exactly (at most 30)
        min_size: Size filter for exact rows
        workers: Worker count for exact rows
    """
    if exact_up_to > MAX_N:
        raise NTooLarge(f"exact_up_to = {exact_up_to} exceeds the enumeration cap of {MAX_N}")
    if any(later < earlier for earlier, later in zip(ns, ns[1:])):
        raise InvalidParameter("N values must be ascending")

    rows = []
    for n in ns:
        if n < 1:
            raise InvalidParameter(f"N must be positive, got {n}")
        if n <= exact_up_to:
            value = census(n, min_size=min_size, workers=workers).total
            rows.append(growth_row(n, value, GrowthFlavor.EXACT))
        else:
            rows.append(growth_row(n, ap_lower_bound(n), GrowthFlavor.AP_BOUND))
        logger.debug(f"Growth row N={n}: {rows[-1].count_or_bound} ({rows[-1].flavor.value})")
    return rows


def growth_frame(rows: Sequence[GrowthRow]) -> pd.DataFrame:
    """Tabular view of growth rows, one column per field"""
    return pd.DataFrame(
        [row.model_dump(mode='json') for row in rows],
        columns=['n', 'count_or_bound', 'flavor', 'nlogn', 'nloglog', 'ratio_lower', 'ratio_upper'],
    )
