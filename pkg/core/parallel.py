import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar("T")


def partitioned_sum(
    partial: Callable[[T], complex | np.ndarray],
    partitions: Iterable[T],
    threads: int = 1,
) -> complex | np.ndarray:
    """
    Sum partial(x) over partitions.

    Partial results are always reduced in partition order, so the value does
    not depend on how many worker threads computed them.
    """
    items = list(partitions)

    if threads <= 1 or len(items) <= 1:
        results = [partial(x) for x in items]
    else:
        logger.debug("summing %d partitions on %d threads", len(items), threads)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(partial, items))

    total = 0j
    for r in results:
        total += r
    return total
