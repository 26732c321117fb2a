# census/bounds.py
"""
Closed-form lower bound for the complete-subset count and harmonic diagnostics
"""
import numpy as np

from utils.errors import InvalidParameter


def ap_lower_bound(n: int) -> int:
    """
    Number of odd-length (>= 3) homogeneous APs {d, 2d, ..., jd} inside [1, N]

    Equals the sum over odd j in [3, N] of floor(N / j).
    """
    if n < 1:
        raise InvalidParameter(f"N must be positive, got {n}")
    if n < 3:
        return 0
    lengths = np.arange(3, n + 1, 2, dtype=np.int64)
    return int((n // lengths).sum())


def harmonic_ratio(n: int) -> float:
    """sum_{k <= N} 1/k divided by ln N; tends to 1"""
    if n < 2:
        raise InvalidParameter(f"Harmonic ratio needs N >= 2, got {n}")
    harmonic = float(np.sum(1.0 / np.arange(1, n + 1, dtype=np.float64)))
    return harmonic / float(np.log(n))
