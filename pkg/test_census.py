# test_census.py
"""
Tests for the exhaustive census, the AP lower bound and the growth table
"""
import math
import sys

import pytest

from brute_force_oracle import oracle_census
from census.bounds import ap_lower_bound, harmonic_ratio
from census.enumerator import (
    census,
    elements_to_mask,
    enumerate_complete,
    evaluate_block,
    make_blocks,
    mask_to_elements,
)
from census.growth import growth_frame, growth_table
from census.schemas import GrowthFlavor
from utils.errors import InvalidParameter, NTooLarge


def collect(n, min_size, max_size, **kwargs):
    found = []
    count = enumerate_complete(n, min_size, max_size, found.append, **kwargs)
    assert count == len(found)
    return [subset.elements for subset in found]


def test_ap_lower_bound_values():
    """Test 1: closed-form bound"""
    assert ap_lower_bound(10) == 7
    assert ap_lower_bound(3) == 1
    assert ap_lower_bound(9) == 6
    assert ap_lower_bound(2) == 0
    with pytest.raises(InvalidParameter):
        ap_lower_bound(0)


def test_ap_lower_bound_ratio():
    """Test 2: bound / (N ln N) stays in [0.40, 0.50] and does not decrease"""
    ratios = [ap_lower_bound(n) / (n * math.log(n)) for n in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6)]
    for ratio in ratios:
        assert 0.40 <= ratio <= 0.50
    assert ratios == sorted(ratios)


def test_harmonic_ratio_near_one():
    """Test 3: harmonic sum over ln N"""
    assert 1.0 < harmonic_ratio(10 ** 6) < 1.05
    with pytest.raises(InvalidParameter):
        harmonic_ratio(1)


def test_mask_helpers():
    """Test 4: bitmask conversions"""
    assert mask_to_elements(0b1011) == [1, 2, 4]
    assert elements_to_mask([1, 2, 4]) == 0b1011
    assert make_blocks(10, 8) == [(10, 0, 256), (10, 256, 512), (10, 512, 768), (10, 768, 1024)]


def test_evaluate_block_small():
    """Test 5: block evaluation marks {1,2,3} as the only complete pair-or-larger subset of [1, 3]"""
    masks, sizes, complete = evaluate_block(3, 0, 8)
    complete_masks = sorted(int(m) for m, s, c in zip(masks, sizes, complete) if c and s >= 2)
    assert complete_masks == [0b111]


def test_census_small_values():
    """Test 6: hand-checked counts"""
    assert census(3, 2, workers=1).total == 1
    assert census(4, 2, workers=1).total == 1
    report = census(10, 2, workers=1)
    assert report.total >= 10
    assert report.ap_lower_bound == 7
    assert report.ap_shortfall == report.total - 7
    assert not report.singletons_included
    assert set(report.by_size) == set(range(2, 11))

    with_singletons = census(10, 1, workers=1)
    assert with_singletons.singletons_included
    assert with_singletons.total == report.total + 10


def test_census_limits():
    """Test 7: N outside [1, 30] is rejected"""
    with pytest.raises(NTooLarge):
        census(31)
    with pytest.raises(InvalidParameter):
        census(0)
    with pytest.raises(InvalidParameter):
        census(5, min_size=0)


def test_census_matches_naive_enumeration():
    """Test 8: census agrees with a plain subset scan for N <= 16"""
    for n in range(1, 17):
        expected = oracle_census(n, 2)
        report = census(n, 2, workers=1, block_bits=8)
        assert report.by_size == expected, f"N={n}"
        assert report.total == sum(expected.values())


@pytest.mark.parametrize('n', [10, 16, 20])
def test_census_deterministic_across_workers(n):
    """Test 9: identical reports for 1, 2 and 8 workers"""
    reports = [census(n, 2, workers=workers, block_bits=8) for workers in (1, 2, 8)]
    for report in reports[1:]:
        assert report.total == reports[0].total
        assert report.by_size == reports[0].by_size
    assert [r.worker_count for r in reports] == [1, 2, 8]


def test_census_dominates_ap_bound():
    """Test 10: exact count with size >= 3 is at least the AP bound for N <= 22"""
    for n in range(1, 23):
        assert census(n, 3, workers=2).total >= ap_lower_bound(n), f"N={n}"


def test_enumerate_known_sets():
    """Test 11: enumeration finds the worked size-3 examples"""
    triples = collect(10, 3, 3, workers=1)
    for expected in [(1, 2, 3), (2, 4, 6), (3, 6, 9), (3, 5, 7), (2, 5, 7), (2, 3, 5)]:
        assert expected in triples

    assert collect(3, 2, 9, workers=1) == [(1, 2, 3)]
    assert collect(1, 2, 9, workers=1) == []


def test_enumerate_order_independent_of_workers():
    """Test 12: streamed order is ascending bitmask order for any worker count"""
    serial = collect(14, 2, 14, workers=1, block_bits=8)
    parallel = collect(14, 2, 14, workers=4, block_bits=8)
    assert serial == parallel
    masks = [elements_to_mask(subset) for subset in serial]
    assert masks == sorted(masks)
    assert len(serial) == census(14, 2, workers=1).total


def test_growth_table():
    """Test 13: exact rows below the cutoff, bound rows above"""
    rows = growth_table([3, 10, 10 ** 6], exact_up_to=10, workers=1)
    assert [row.flavor for row in rows] == [GrowthFlavor.EXACT, GrowthFlavor.EXACT, GrowthFlavor.AP_BOUND]
    assert rows[0].count_or_bound == 1
    assert rows[0].nlogn == pytest.approx(3 * math.log(3))
    assert rows[1].count_or_bound == census(10, 2, workers=1).total
    assert 0.40 <= rows[2].ratio_lower <= 0.50

    frame = growth_frame(rows)
    assert list(frame.columns) == ['n', 'count_or_bound', 'flavor', 'nlogn', 'nloglog', 'ratio_lower', 'ratio_upper']
    assert len(frame) == 3

    small = growth_table([2], exact_up_to=2, workers=1)[0]
    assert small.ratio_lower is None and small.nloglog is None


def test_growth_table_errors():
    """Test 14: bad growth inputs"""
    with pytest.raises(NTooLarge):
        growth_table([10], exact_up_to=31)
    with pytest.raises(InvalidParameter):
        growth_table([100, 10], exact_up_to=0)


def test_enumeration_contains_every_odd_progression():
    """Test 15: every odd-length progression {d, 2d, ..., jd} inside [1, N] is enumerated for N <= 24"""
    found = set(collect(24, 3, 24, workers=2))
    for n in range(3, 25):
        progressions = [
            tuple(d * k for k in range(1, j + 1))
            for j in range(3, n + 1, 2)
            for d in range(1, n // j + 1)
        ]
        assert len(progressions) == ap_lower_bound(n)
        missing = [p for p in progressions if p not in found]
        assert not missing, f"N={n}: {missing}"


def test_census_counts_do_not_decrease():
    """Test 16: counts for size >= 2 and size >= 3 never drop as N grows"""
    reports = [census(n, 2, workers=1) for n in range(1, 21)]
    totals = [report.total for report in reports]
    at_least_three = [sum(c for size, c in report.by_size.items() if size >= 3) for report in reports]
    assert totals == sorted(totals)
    assert at_least_three == sorted(at_least_three)
    assert at_least_three[-1] >= ap_lower_bound(20)


def test_enumerate_parameter_checks():
    """Test 17: inverted size bounds and out-of-range block sizes are rejected"""
    with pytest.raises(InvalidParameter):
        collect(10, 4, 3, workers=1)

    for bits in (0, 7, 25):
        with pytest.raises(InvalidParameter):
            census(10, 2, workers=1, block_bits=bits)
        with pytest.raises(InvalidParameter):
            collect(10, 2, 10, workers=1, block_bits=bits)

    assert collect(10, 3, 3, workers=1, block_bits=24) == collect(10, 3, 3, workers=1, block_bits=8)


def main():
    return pytest.main([__file__, '-v'])


if __name__ == "__main__":
    sys.exit(main())
