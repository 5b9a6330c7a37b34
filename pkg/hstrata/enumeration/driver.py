"""
枚举驱动

把 DFS 树按前缀切成互不相交的子树，分发给进程池，每个 worker 返回局部直方图，
合并只做逐维相加，因此结果与 worker 数和完成顺序无关。
"""
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Tuple
import logging
import random

from hstrata.core.exceptions import EnumerationCapError, ValidationError
from hstrata.core.models import DimensionHistogram
from hstrata.diagrams.reduced_word import (
    Diagram,
    Prefix,
    build_reduced_word,
    collect_cauchon,
    enumerate_cauchon,
    enumerate_prefixes,
)
from hstrata.pipes.pipe_dreams import classify_cycles, diagram_dimension, diagram_tau
from hstrata.series.polynomial import PolyT
from hstrata.weyl.signed_permutation import SignedPermutation

logger = logging.getLogger(__name__)

DEFAULT_CAP_WITH_DIMENSIONS = 8
DEFAULT_CAP_COUNTS_ONLY = 10

# (已完成前缀数, 前缀总数)
ProgressCallback = Callable[[int, int], None]


def check_cap(n: int, cap: int, unsafe: bool = False) -> None:
    """n 超过上限且未显式放开时抛出 EnumerationCapError"""
    if n < 1:
        raise ValidationError(f"Rank must be positive, got {n}")
    if n > cap and not unsafe:
        raise EnumerationCapError(
            f"Rank {n} exceeds the enumeration cap {cap}; pass --unsafe-no-cap to override"
        )


def _histogram_worker(task: Tuple[int, int, int, bool]) -> Dict[int, int]:
    """
    进程池 worker：枚举一个前缀下的子树

    Returns:
        {维数: 个数}；只计数时键为 -1
    """
    n, depth, members, counts_only = task
    word = build_reduced_word(n)
    prefix = Prefix(depth, members)
    if counts_only:
        return {-1: enumerate_cauchon(word, prefix=prefix)}

    counts: Dict[int, int] = {}

    def visit(d: Diagram, _w: SignedPermutation) -> None:
        dim = diagram_dimension(word, d)
        counts[dim] = counts.get(dim, 0) + 1

    enumerate_cauchon(word, visit, prefix)
    return counts


def _run_tasks(
    n: int,
    prefixes: List[Prefix],
    counts_only: bool,
    jobs: int,
    progress_callback: Optional[ProgressCallback],
) -> List[Dict[int, int]]:
    tasks = [(n, p.depth, p.members, counts_only) for p in prefixes]
    results: List[Dict[int, int]] = []
    total = len(tasks)
    if jobs == 1:
        for done, task in enumerate(tasks, 1):
            results.append(_histogram_worker(task))
            if progress_callback:
                progress_callback(done, total)
        return results

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(_histogram_worker, task) for task in tasks]
        for done, future in enumerate(as_completed(futures), 1):
            results.append(future.result())
            if progress_callback:
                progress_callback(done, total)
    return results


def _split(n: int, jobs: int, prefix_depth: int) -> List[Prefix]:
    if jobs < 1:
        raise ValidationError(f"Worker count must be at least 1, got {jobs}")
    word = build_reduced_word(n)
    depth = prefix_depth if jobs > 1 else 0
    prefixes = enumerate_prefixes(word, depth)
    logger.info(f"Rank {n}: {len(prefixes)} subtrees at depth {depth} across {jobs} worker(s)")
    return prefixes


def enumerate_histogram(
    n: int,
    jobs: int = 1,
    prefix_depth: int = 6,
    cap: int = DEFAULT_CAP_WITH_DIMENSIONS,
    unsafe: bool = False,
    progress_callback: Optional[ProgressCallback] = None,
) -> DimensionHistogram:
    """
    枚举秩 n 的全部 Cauchon 图并按管道梦维数统计

    Args:
        n: 秩
        jobs: worker 数，1 表示在当前进程内执行
        prefix_depth: 切分子树时固定的位置数
        cap: 秩上限
        unsafe: 忽略上限
        progress_callback: 每完成一个子树调用一次

    Returns:
        维数直方图
    """
    check_cap(n, cap, unsafe)
    prefixes = _split(n, jobs, prefix_depth)
    histogram = DimensionHistogram(n)
    for counts in _run_tasks(n, prefixes, False, jobs, progress_callback):
        histogram = histogram.merge(DimensionHistogram(n, counts))
    logger.info(f"Rank {n}: {histogram.total} Cauchon diagrams")
    return histogram


def count_diagrams(
    n: int,
    jobs: int = 1,
    prefix_depth: int = 6,
    cap: int = DEFAULT_CAP_COUNTS_ONLY,
    unsafe: bool = False,
    progress_callback: Optional[ProgressCallback] = None,
) -> int:
    """只计数，不计算维数"""
    check_cap(n, cap, unsafe)
    prefixes = _split(n, jobs, prefix_depth)
    total = sum(
        counts[-1] for counts in _run_tasks(n, prefixes, True, jobs, progress_callback)
    )
    logger.info(f"Rank {n}: {total} Cauchon diagrams (counts only)")
    return total


def component_weight_polynomial(n: int) -> PolyT:
    """
    只含一个分组轮换的图按 t^维数 加权求和

    与 D(x,t) 的 x^n/n! 系数比较，用来检查指数公式。
    """
    word = build_reduced_word(n)
    weights: Dict[int, int] = {}

    def visit(d: Diagram, _w: SignedPermutation) -> None:
        classification = classify_cycles(diagram_tau(word, d))
        if len(classification.cycles) == 1:
            dim = classification.dimension
            weights[dim] = weights.get(dim, 0) + 1

    enumerate_cauchon(word, visit)
    return PolyT(tuple(weights.get(d, 0) for d in range(n + 1)))


def sample_cauchon(n: int, samples: int, seed: int = 0) -> List[Diagram]:
    """
    按种子抽样 Cauchon 图

    总数不超过 samples 时返回全部（规范顺序）。
    """
    diagrams = collect_cauchon(build_reduced_word(n))
    if len(diagrams) <= samples:
        return diagrams
    chosen = random.Random(seed).sample(diagrams, samples)
    logger.debug(f"Rank {n}: sampled {samples} of {len(diagrams)} diagrams with seed {seed}")
    return chosen
