"""
带状图同构判定

只识别保持每个星形循环顺序的同构（保定向）；镜像图（所有循环顺序同时
反转）视为不同构。
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.errors import EmptyMapError
from src.ribbon.ribbon_map import RibbonMap, involution
from src.ribbon.surface import num_faces, trace_faces
from src.utils.log import get_logger

logger = get_logger("Isomorphism")


@dataclass(frozen=True)
class DartBijection:
    """两个带状图之间的半边双射，mapping[d] 为 d 的像"""

    mapping: Tuple[int, ...]

    def __call__(self, dart: int) -> int:
        return self.mapping[dart]

    def verify(self, source: RibbonMap, target: RibbonMap) -> bool:
        """检查 β∘σ₁ = σ₂∘β 且 β∘ι₁ = ι₂∘β"""
        if len(self.mapping) != source.num_darts or source.num_darts != target.num_darts:
            return False
        if sorted(self.mapping) != list(range(target.num_darts)):
            return False
        for dart, image in enumerate(self.mapping):
            if self.mapping[source.rotation[dart]] != target.rotation[image]:
                return False
            if self.mapping[involution(dart)] != involution(image):
                return False
        return True


def _bfs_order(ribbon_map: RibbonMap, root: int) -> List[int]:
    """从 root 出发，按 (σ, ι) 的固定顺序广度优先给半边重新编号"""
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        dart = queue.popleft()
        for nxt in (ribbon_map.rotation[dart], involution(dart)):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def _encoding_from_root(ribbon_map: RibbonMap, root: int) -> Tuple[int, ...]:
    order = _bfs_order(ribbon_map, root)
    relabel = {dart: i for i, dart in enumerate(order)}
    code = []
    for dart in order:
        code.append(relabel[ribbon_map.rotation[dart]])
        code.append(relabel[involution(dart)])
    return tuple(code)


def canonical_encoding(ribbon_map: RibbonMap) -> bytes:
    """规范编码：所有根半边的 BFS 重编号编码中字典序最小者

    两个图编码相同当且仅当它们同构。

    Raises:
        EmptyMapError: 图没有边
    """
    if ribbon_map.num_edges == 0:
        raise EmptyMapError("没有边的图没有规范编码")
    best = min(_encoding_from_root(ribbon_map, root) for root in range(ribbon_map.num_darts))
    header = [ribbon_map.num_edges]
    return np.asarray(header + list(best), dtype=">u4").tobytes()


def _invariants(ribbon_map: RibbonMap):
    if ribbon_map.num_edges == 0:
        return (ribbon_map.num_vertices, 0, 1, ())
    face_lengths = Counter(len(face) for face in trace_faces(ribbon_map))
    vertex_degrees = Counter(len(orbit) for orbit in ribbon_map.orbits)
    return (
        ribbon_map.num_vertices,
        ribbon_map.num_edges,
        num_faces(ribbon_map),
        tuple(sorted(face_lengths.items())),
        tuple(sorted(vertex_degrees.items())),
    )


def _extend(source: RibbonMap, target: RibbonMap, root: int, image: int) -> Optional[Dict[int, int]]:
    """把 root -> image 沿 σ 和 ι 扩展成完整双射，矛盾时返回 None"""
    mapping = {root: image}
    used = {image}
    queue = deque([root])
    while queue:
        dart = queue.popleft()
        mapped = mapping[dart]
        pairs = (
            (source.rotation[dart], target.rotation[mapped]),
            (involution(dart), involution(mapped)),
        )
        for nxt, nxt_image in pairs:
            if nxt in mapping:
                if mapping[nxt] != nxt_image:
                    return None
                continue
            if nxt_image in used:
                return None
            mapping[nxt] = nxt_image
            used.add(nxt_image)
            queue.append(nxt)
    if len(mapping) != source.num_darts:
        return None
    return mapping


def are_isomorphic(first: RibbonMap, second: RibbonMap) -> Optional[DartBijection]:
    """判定两个带状图是否同构，同构时返回经过校验的半边双射"""
    if _invariants(first) != _invariants(second):
        return None
    if first.num_edges == 0:
        return DartBijection(())
    for image in range(second.num_darts):
        mapping = _extend(first, second, 0, image)
        if mapping is None:
            continue
        bijection = DartBijection(tuple(mapping[d] for d in range(first.num_darts)))
        if bijection.verify(first, second):
            logger.debug("找到同构: 0 -> %d", image)
            return bijection
    return None
