"""Bruhat 区间：沿反射覆盖关系向下的广度优先闭包"""
from typing import Set
import logging

import networkx as nx

from hstrata.weyl.signed_permutation import SignedPermutation, compose, length, reflections

logger = logging.getLogger(__name__)


def bruhat_graph(w: SignedPermutation) -> nx.DiGraph:
    """
    构建 [id, w] 的 Hasse 图

    边 v -> u 表示覆盖关系 u = v·t（t 为反射）且 ℓ(u) = ℓ(v) - 1。
    规模随秩指数增长，只用于 n ≤ 4 的验证。

    Args:
        w: 区间上端

    Returns:
        有向图，节点带 length 属性
    """
    graph = nx.DiGraph()
    top_length = length(w)
    graph.add_node(w, length=top_length)

    all_reflections = reflections(w.n)
    layer = {w}
    current_length = top_length
    while current_length > 0:
        next_layer: Set[SignedPermutation] = set()
        for v in layer:
            for t in all_reflections:
                u = compose(v, t)
                if length(u) == current_length - 1:
                    if u not in graph:
                        graph.add_node(u, length=current_length - 1)
                    graph.add_edge(v, u)
                    next_layer.add(u)
        layer = next_layer
        current_length -= 1
        logger.debug(f"Bruhat layer at length {current_length}: {len(layer)} elements")

    logger.info(f"Bruhat interval below {w.to_window_string()}: {graph.number_of_nodes()} elements")
    return graph


def bruhat_interval(w: SignedPermutation) -> Set[SignedPermutation]:
    """[id, w] 中的全部元素"""
    return set(bruhat_graph(w).nodes)

