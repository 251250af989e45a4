"""
曲面分类：约化 -> 多边形字 -> 规范化，并与欧拉示性数交叉校验
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from src.classify.moves import ContractEdge, DeleteEdge, MoveTrace, apply_word_move
from src.classify.normalizer import normalize
from src.classify.polygon_word import PolygonWord, polygon_word
from src.classify.reduction import contract_edge, delete_edge, reduce_to_one_vertex_one_face
from src.config.topology_config import config
from src.errors import InternalInvariantViolation
from src.ribbon.ribbon_map import RibbonMap
from src.ribbon.surface import genus as map_genus
from src.utils.log import get_logger

logger = get_logger("Classifier")

SPHERE_MARKER = "S0"


@dataclass(frozen=True)
class ClassificationResult:
    """分类结果；canonical_word 为 None 表示球面 S_0"""

    genus: int
    canonical_word: Optional[PolygonWord]
    trace: MoveTrace

    @property
    def is_sphere(self) -> bool:
        return self.canonical_word is None or len(self.canonical_word) == 0

    @property
    def surface_name(self) -> str:
        return f"S{self.genus}"


def classify(ribbon_map: RibbonMap) -> ClassificationResult:
    """判定带状图所在闭曲面 S_g

    Raises:
        InternalInvariantViolation: 规范字给出的亏格与欧拉示性数不一致
    """
    if ribbon_map.num_edges == 0:
        return ClassificationResult(0, None, MoveTrace())

    reduced, map_trace = reduce_to_one_vertex_one_face(ribbon_map)
    if reduced.num_edges == 0:
        result = ClassificationResult(0, None, map_trace)
    else:
        canonical, word_trace = normalize(polygon_word(reduced))
        result = ClassificationResult(len(canonical) // 4, canonical, map_trace + word_trace)

    if config.VERIFY_CLASSIFICATION:
        expected = map_genus(ribbon_map)
        if expected != result.genus:
            raise InternalInvariantViolation(
                f"规范字给出亏格 {result.genus}，欧拉示性数给出 {expected}")
    logger.info("分类完成: %s, %d 步", result.surface_name, len(result.trace))
    return result


def replay(ribbon_map: RibbonMap, trace: MoveTrace) -> Tuple[RibbonMap, Optional[PolygonWord]]:
    """从输入重放移动记录

    先依次执行图上的移动，遇到第一条字上的移动时读出多边形字，再继续在字上
    重放。

    Returns:
        (约化后的图, 最终的字)；约化到 S_0 时字为 None
    """
    current = ribbon_map
    letters = None
    for move in trace:
        if isinstance(move, (DeleteEdge, ContractEdge)):
            if letters is not None:
                raise InternalInvariantViolation("图上的移动出现在字上的移动之后")
            if isinstance(move, DeleteEdge):
                current = delete_edge(current, move.label)
            else:
                current = contract_edge(current, move.label)
            continue
        if letters is None:
            letters = polygon_word(current).letters
        letters = apply_word_move(letters, move)

    if letters is None:
        if current.num_edges == 0:
            return current, None
        letters = polygon_word(current).letters
    return current, PolygonWord(tuple(letters))
