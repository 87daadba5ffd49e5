import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from poroshock.core.config import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], max_workers: Optional[int] = None) -> List[R]:
    """Order-preserving map over independent tasks.

    Runs inline when one worker is configured.
    """
    items = list(items)
    workers = max_workers or get_settings().MAX_WORKERS
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug(f"Fanning out {len(items)} tasks over {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
