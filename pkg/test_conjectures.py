# test_conjectures.py
"""
Tests for the prime-sum scan and the bounded searches
"""
import sys

import pytest

from brute_force_oracle import oracle_is_complete
from conjectures.primes import (
    distinct_prime_factors,
    first_odd_primes,
    is_prime,
    omega,
    prime_finding,
    scan_prime_conjecture,
    summarize,
)
from conjectures.searches import complete_extension, geometric_search, translate_search
from core.completeness import is_complete, make_set
from utils.errors import InvalidParameter, NotComplete, ZeroInput


def test_first_odd_primes():
    """Test 1: sieve output"""
    assert first_odd_primes(3).elements == (3, 5, 7)
    assert first_odd_primes(1).elements == (3,)
    assert first_odd_primes(7).elements == (3, 5, 7, 11, 13, 17, 19)

    primes = first_odd_primes(1000).elements
    assert len(primes) == 1000
    assert 2 not in primes
    assert all(is_prime(p) for p in primes[:200])


def test_omega():
    """Test 2: distinct prime divisors"""
    assert omega(1) == 0
    assert omega(75) == 2
    assert omega(30) == 3
    assert omega(-30) == 3
    assert distinct_prime_factors(360) == [2, 3, 5]
    assert all(omega(p) == 1 for p in (2,) + first_odd_primes(99).elements)
    with pytest.raises(ZeroInput):
        omega(0)


def test_prime_findings_small():
    """Test 3: n = 3, 5, 7"""
    findings = {f.n: f for f in scan_prime_conjecture(7)}
    assert sorted(findings) == [3, 5, 7]

    assert findings[3].is_complete and findings[3].holds
    assert findings[5].L == 39 and findings[5].is_complete
    assert findings[7].L == 75
    assert not findings[7].is_complete
    assert not findings[7].L_is_prime
    assert findings[7].omega_L == 2 and findings[7].holds


def test_prime_scan_to_201():
    """Test 4: every odd n <= 201 yields a well-formed, recomputable finding"""
    findings = scan_prime_conjecture(201)
    assert [f.n for f in findings] == list(range(3, 202, 2))
    for finding in findings:
        values = list(finding.primes.elements)
        assert len(values) == finding.n
        assert finding.L == sum(values)
        assert finding.is_complete == oracle_is_complete(values)
        assert finding.is_complete == is_complete(finding.primes)
        assert finding.omega_L == len(distinct_prime_factors(finding.L))
        assert finding.holds == (finding.is_complete or finding.L_is_prime or finding.omega_L == 2)

    summary = summarize(findings)
    assert summary.scanned == len(findings)
    assert summary.holds + len(summary.violations) == summary.scanned
    assert summary.violations == sorted(f.n for f in findings if not f.holds)


def test_prime_scan_options():
    """Test 5: even n on request, parallel scan matches serial"""
    with_even = scan_prime_conjecture(8, include_even=True)
    assert [f.n for f in with_even] == [2, 3, 4, 5, 6, 7, 8]

    assert scan_prime_conjecture(31, workers=2) == scan_prime_conjecture(31, workers=1)
    with pytest.raises(InvalidParameter):
        scan_prime_conjecture(1)


def test_prime_finding_validator():
    """Test 6: holds must match the flags"""
    finding = prime_finding((3, 5, 7))
    with pytest.raises(ValueError):
        finding.model_validate({**finding.model_dump(), 'holds': False})


def test_complete_extension():
    """Test 7: completing sets with one new element"""
    result = complete_extension(make_set([3, 7, 9, 4, 2]), 100, 1)
    assert result.added.elements == (5,)
    assert result.combined_complete

    result = complete_extension(make_set([1, 18, 17, 3]), 100, 1)
    assert result.added.elements == (12,)
    assert is_complete(make_set([1, 3, 12, 17, 18]))

    result = complete_extension(make_set([3, 5, 7]), 100, 1)
    assert len(result.added) == 0 and result.combined_complete

    with pytest.raises(InvalidParameter):
        complete_extension(make_set([-1, 2]), 100, 1)


def test_complete_extension_minimal(rng):
    """Test 8: no smaller single element completes the set"""
    for _ in range(50):
        base = make_set(rng.sample(range(1, 40), rng.randint(2, 5)))
        result = complete_extension(base, 60, 1)
        if result is None or len(result.added) == 0:
            continue
        (x,) = result.added.elements
        assert oracle_is_complete(list(base.elements) + [x])
        for smaller in range(1, x):
            if smaller not in base:
                assert not oracle_is_complete(list(base.elements) + [smaller])


def test_geometric_search():
    """Test 9: r = -2, n = 2 is complete, r = 2 never"""
    findings = geometric_search(-10, 10, 12)
    pairs = {(f.r, f.n) for f in findings}
    assert (-2, 2) in pairs
    assert not any(r == 2 for r, _ in pairs)
    assert all(r not in (-1, 0, 1) for r, _ in pairs)

    hit = next(f for f in findings if (f.r, f.n) == (-2, 2))
    assert hit.total == 2 and hit.witness == -4
    for finding in findings:
        powers = [finding.r ** k for k in range(1, finding.n + 1)]
        assert oracle_is_complete(powers)

    with pytest.raises(InvalidParameter):
        geometric_search(-3, 3, 1)


def test_translate_search():
    """Test 10: smallest complete translate"""
    result = translate_search(make_set([3, 5, 7]), 10)
    assert result.s == 2
    assert result.translated.elements == (5, 7, 9)
    assert result.witness == 15
    assert is_complete(make_set([6, 8, 10]))

    assert translate_search(make_set([1, 2, 3]), 2).s is None
    assert translate_search(make_set([2, 4, 6]), 3).s == 1

    with pytest.raises(NotComplete):
        translate_search(make_set([7, 11, 13, 15]), 10)


def main():
    return pytest.main([__file__, '-v'])


if __name__ == "__main__":
    sys.exit(main())
