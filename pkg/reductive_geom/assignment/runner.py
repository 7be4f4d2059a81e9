"""Evaluation of parameter grids.

Provides different ways to evaluate the grid points:

    - Serial: one point after another
    - Parallel: up to `jobs` points at the same time in worker threads

Results are always returned in grid order, independent of completion order.
"""
import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

PointType = TypeVar("PointType")
ResultType = TypeVar("ResultType")


async def run_serial(
    points: Sequence[PointType], evaluate: Callable[[PointType], ResultType]
) -> List[ResultType]:
    """Evaluate grid points serially.

    Parameters:
        points(Sequence): grid points in grid order
        evaluate(Callable): pure function evaluating one point
    Returns:
        results(List): one result per point, in grid order
    """
    results: List[ResultType] = []
    for index, point in enumerate(points):
        logger.debug("evaluating grid point %d in serial", index)
        results.append(evaluate(point))

    return results


async def run_parallel(
    points: Sequence[PointType], evaluate: Callable[[PointType], ResultType], jobs: int
) -> List[ResultType]:
    """Evaluate grid points in a pool of `jobs` worker threads."""
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        futures = [loop.run_in_executor(executor, evaluate, point) for point in points]
        return list(await asyncio.gather(*futures))


async def run(
    points: Sequence[PointType], evaluate: Callable[[PointType], ResultType], jobs: int = 1
) -> List[ResultType]:
    """Evaluate all grid points."""
    logger.info("running %d grid point(s) with %d job(s)", len(points), jobs)
    if jobs > 1 and len(points) > 1:
        return await run_parallel(points, evaluate, jobs)

    return await run_serial(points, evaluate)
