"""Worker pool shared by the parameter scans and the CLI grids."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_grid(task: Callable[[T], R], points: Iterable[T], jobs: int = 1) -> list[R]:
    """Evaluate ``task`` on every point; results keep the order of ``points``."""
    points = list(points)
    if jobs <= 1 or len(points) <= 1:
        return [task(point) for point in points]
    logger.debug(f"Dispatching {len(points)} points to {jobs} workers")
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task, points))
