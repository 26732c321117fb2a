# census/enumerator.py
"""
Exhaustive census of complete subsets of {1..N}

Subsets are bitmasks (element k <-> bit k-1). The mask space is cut into
contiguous blocks; each block is evaluated with numpy in one pass, and blocks
are merged in mask order, so results do not depend on the worker count.
"""
import logging
import multiprocessing
import time
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from census.bounds import ap_lower_bound
from census.schemas import CensusReport
from config.settings import get_settings
from core.completeness import make_set
from core.schemas import IntSet
from utils.decorators import log_execution_time, validate_inputs
from utils.errors import InvalidParameter, NTooLarge

logger = logging.getLogger(__name__)

MAX_N = 30
MIN_BLOCK_BITS = 8
MAX_BLOCK_BITS = 24

Block = Tuple[int, int, int]


def check_n(n: int):
    if n > MAX_N:
        raise NTooLarge(f"N = {n} exceeds the enumeration cap of {MAX_N}")
    if n < 1:
        raise InvalidParameter(f"N must be positive, got {n}")


def mask_to_elements(mask: int) -> List[int]:
    """Elements of {1..N} selected by a bitmask, ascending"""
    elements = []
    k = 1
    while mask:
        if mask & 1:
            elements.append(k)
        mask >>= 1
        k += 1
    return elements


def elements_to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for value in elements:
        if value < 1:
            raise InvalidParameter(f"Only positive elements have a mask, got {value}")
        mask |= 1 << (value - 1)
    return mask


def evaluate_block(n: int, lo: int, hi: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Evaluate completeness for every mask in [lo, hi)

    Product-mod-sum is carried incrementally: each selected factor k updates
    prod <- (prod * k) mod sum. Sums are at most N(N+1)/2, so int64 never overflows.

    Returns:
        (masks, sizes, complete flags)
    """
    masks = np.arange(max(lo, 1), hi, dtype=np.int64)
    sums = np.zeros_like(masks)
    sizes = np.zeros_like(masks)
    for k in range(1, n + 1):
        bit = (masks >> (k - 1)) & 1
        sums += bit * k
        sizes += bit

    prod = 1 % sums
    for k in range(1, n + 1):
        selected = ((masks >> (k - 1)) & 1).astype(bool)
        prod = np.where(selected, (prod * k) % sums, prod)

    return masks, sizes, prod == 0


def _count_block(block: Block) -> np.ndarray:
    n, lo, hi = block
    _, sizes, complete = evaluate_block(n, lo, hi)
    return np.bincount(sizes[complete], minlength=n + 1)


def _list_block(task: Tuple[int, int, int, int, int]) -> List[int]:
    n, lo, hi, min_size, max_size = task
    masks, sizes, complete = evaluate_block(n, lo, hi)
    keep = complete & (sizes >= min_size) & (sizes <= max_size)
    return [int(mask) for mask in masks[keep]]


def make_blocks(n: int, block_bits: int) -> List[Block]:
    """Contiguous mask ranges covering [1, 2^N)"""
    end = 1 << n
    step = 1 << block_bits
    return [(n, lo, min(lo + step, end)) for lo in range(0, end, step)]


def _run_ordered(func: Callable, tasks: Sequence, workers: int) -> Iterable:
    """Map func over tasks, yielding results in task order"""
    if workers <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield func(task)
        return

    with multiprocessing.Pool(processes=min(workers, len(tasks))) as pool:
        for result in pool.imap(func, tasks):
            yield result


def _resolve(workers: Optional[int], block_bits: Optional[int]) -> Tuple[int, int]:
    if workers is None or block_bits is None:
        settings = get_settings()
        workers = workers if workers is not None else settings.threads
        block_bits = block_bits if block_bits is not None else settings.block_bits
    if workers < 1:
        raise InvalidParameter(f"Worker count must be positive, got {workers}")
    if not MIN_BLOCK_BITS <= block_bits <= MAX_BLOCK_BITS:
        raise InvalidParameter(
            f"block_bits must lie in [{MIN_BLOCK_BITS}, {MAX_BLOCK_BITS}], got {block_bits}"
        )
    return workers, block_bits


@log_execution_time
@validate_inputs(n=int, min_size=int)
def census(n: int, min_size: int = 2, workers: Optional[int] = None,
           block_bits: Optional[int] = None) -> CensusReport:
    """
    Count complete subsets of {1..N} with at least min_size elements

    Args:
        n: 1 <= N <= 30
        min_size: Smallest size counted (2 leaves out the N singletons)
        workers: Worker processes; defaults to CSET_THREADS
        block_bits: log2 of the block size; defaults to CSET_BLOCK_BITS

    Returns:
        CensusReport with histogram and AP lower bound
    """
    check_n(n)
    if min_size < 1:
        raise InvalidParameter(f"min_size must be positive, got {min_size}")
    workers, block_bits = _resolve(workers, block_bits)

    started = time.perf_counter()
    blocks = make_blocks(n, block_bits)
    histogram = np.zeros(n + 1, dtype=np.int64)
    for merged, partial in enumerate(_run_ordered(_count_block, blocks, workers), start=1):
        histogram += partial
        logger.debug(f"Merged block {merged}/{len(blocks)}")
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    by_size = {size: int(histogram[size]) for size in range(min_size, n + 1)}
    total = sum(by_size.values())
    bound = ap_lower_bound(n)
    logger.info(f"✅ C({n}) with size >= {min_size}: {total} ({len(blocks)} blocks, {workers} workers)")

    return CensusReport(
        n=n,
        min_size=min_size,
        total=total,
        by_size=by_size,
        ap_lower_bound=bound,
        ap_shortfall=total - bound,
        singletons_included=min_size <= 1,
        worker_count=workers,
        elapsed_ms=elapsed_ms,
    )


@log_execution_time
@validate_inputs(n=int, min_size=int, max_size=int)
def enumerate_complete(n: int, min_size: int, max_size: int, sink: Callable[[IntSet], None],
                       workers: Optional[int] = None, block_bits: Optional[int] = None) -> int:
    """
    Stream every complete subset with min_size <= size <= max_size to sink

    Subsets arrive in ascending bitmask order regardless of worker count.

    Returns:
        Number of subsets emitted
    """
    check_n(n)
    if min_size < 1:
        raise InvalidParameter(f"min_size must be positive, got {min_size}")
    if max_size < min_size:
        raise InvalidParameter(f"max_size {max_size} is below min_size {min_size}")
    workers, block_bits = _resolve(workers, block_bits)

    tasks = [(n, lo, hi, min_size, max_size) for (_, lo, hi) in make_blocks(n, block_bits)]
    emitted = 0
    for masks in _run_ordered(_list_block, tasks, workers):
        for mask in masks:
            sink(make_set(mask_to_elements(mask)))
            emitted += 1

    logger.info(f"Emitted {emitted} complete subsets of [1, {n}]")
    return emitted
