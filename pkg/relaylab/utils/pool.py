import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


def ordered_map[T, R](fn: Callable[[T], R], items: Iterable[T], workers: int) -> list[R]:
    """``[fn(x) for x in items]``, spread over ``workers`` threads when > 1.

    Results come back in input order whatever the completion order.
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    batch = list(items)
    if workers == 1 or len(batch) <= 1:
        return [fn(x) for x in batch]
    logger.debug("mapping %d items over %d threads", len(batch), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, batch))
