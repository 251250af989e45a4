"""
Cayley 图的有限球与关系子 2-胞腔

从单位元出发广度优先扩展，新字只有在与已有元素都不相等时才成为新顶点
（用字问题算法判定 u·v⁻¹ 是否平凡），代表元取最先发现的字。
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.config.topology_config import config
from src.errors import InternalInvariantViolation
from src.group.presentation import Presentation
from src.group.word_problem import select_solver
from src.group.words import GroupWord
from src.utils.log import get_logger

logger = get_logger("Cayley")

Edge = Tuple[int, str, int]
Cell = Tuple[int, int, Tuple[int, ...]]


@dataclass(frozen=True)
class CayleyBall:
    """半径 radius 的 Cayley 球

    edges 只记录正向生成元 (u, a, v) 即 u·a = v；cells 为
    (基点, 关系子编号, 顶点循环)，每个基点和关系子记录一次。
    """

    presentation: Presentation
    radius: int
    vertices: Tuple[GroupWord, ...]
    edges: Tuple[Edge, ...]
    cells: Tuple[Cell, ...]

    def neighbours(self, vertex: int) -> List[Tuple[str, int, int]]:
        """球内的所有一步移动 (生成元, ±1, 目标)"""
        moves = []
        for source, label, target in self.edges:
            if source == vertex:
                moves.append((label, 1, target))
            if target == vertex:
                moves.append((label, -1, source))
        return moves

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph(radius=self.radius, cells=list(self.cells))
        for index, word in enumerate(self.vertices):
            graph.add_node(index, word=str(word))
        for source, label, target in self.edges:
            graph.add_edge(source, target, key=label, label=label)
        return graph


class _ElementIndex:
    """已发现的群元素；按阿贝尔化分桶后逐一用字问题算法比较"""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.solver = select_solver(presentation)
        self.free = presentation.is_free and presentation.genus_hint != 0
        # 所有关系子指数和为 0 时，阿贝尔化的像是群元素的不变量
        self.bucketed = all(not relator.exponent_sums(presentation.generators).any()
                            for relator in presentation.relators)
        self.words: List[GroupWord] = []
        self.buckets: Dict[object, List[int]] = {}

    def _key(self, word: GroupWord):
        if self.free:
            return word.letters
        if self.bucketed:
            return tuple(int(x) for x in word.exponent_sums(self.presentation.generators))
        return None

    def find(self, word: GroupWord) -> Optional[int]:
        candidates = self.buckets.get(self._key(word), [])
        if self.free:
            return candidates[0] if candidates else None
        for index in candidates:
            if self.solver(word * self.words[index].inverse()):
                return index
        return None

    def add(self, word: GroupWord) -> int:
        self.words.append(word)
        self.buckets.setdefault(self._key(word), []).append(len(self.words) - 1)
        return len(self.words) - 1


def cayley_ball(presentation: Presentation, radius: int) -> CayleyBall:
    """构造 Cayley 图中以单位元为中心、半径 radius 的球

    Raises:
        UnsupportedPresentationError: 表示没有可用的字问题算法
        ValueError: 半径为负或超过 config.MAX_CAYLEY_RADIUS
    """
    if radius < 0 or radius > config.MAX_CAYLEY_RADIUS:
        raise ValueError(f"半径必须在 0..{config.MAX_CAYLEY_RADIUS} 之间: {radius}")
    index = _ElementIndex(presentation)
    alphabet = [(g, s) for g in presentation.generators for s in (1, -1)]

    index.add(GroupWord())
    frontier = [0]
    for depth in range(1, radius + 1):
        layer = []
        for u in frontier:
            for letter in alphabet:
                candidate = (index.words[u] * GroupWord((letter,))).reduced()
                if index.find(candidate) is None:
                    layer.append(index.add(candidate))
        frontier = layer
        logger.debug("第 %d 层: %d 个新元素", depth, len(layer))

    step: Dict[Tuple[int, str, int], int] = {}
    for u, word in enumerate(index.words):
        for label, sign in alphabet:
            target = index.find((word * GroupWord(((label, sign),))).reduced())
            if target is not None:
                step[(u, label, sign)] = target

    edges = tuple((u, label, v) for (u, label, sign), v in step.items() if sign > 0)
    cells = _collect_cells(presentation, len(index.words), step)
    logger.info("Cayley 球: 半径 %d, %d 个顶点, %d 条边, %d 个胞腔",
                radius, len(index.words), len(edges), len(cells))
    return CayleyBall(presentation, radius, tuple(index.words), edges, cells)


def _collect_cells(presentation: Presentation, size: int, step) -> Tuple[Cell, ...]:
    cells = []
    for base in range(size):
        for j, relator in enumerate(presentation.relators):
            if not relator:
                continue
            cycle = [base]
            current = base
            for label, sign in relator:
                current = step.get((current, label, sign))
                if current is None:
                    break
                cycle.append(current)
            if current is None:
                continue
            if cycle[-1] != base:
                raise InternalInvariantViolation(f"关系子 {relator} 从 {base} 出发没有回到起点")
            cells.append((base, j, tuple(cycle[:-1])))
    return tuple(cells)
