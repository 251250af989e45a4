"""
约化：先消面，再消点，直到只剩一个顶点和一个面
"""
from typing import List, Optional, Tuple

from src.classify.moves import ContractEdge, DeleteEdge, MoveTrace
from src.config.topology_config import config
from src.errors import (
    InternalInvariantViolation,
    LoopNotContractibleError,
    RibbonValidationError,
)
from src.ribbon.ribbon_map import RibbonMap, from_rotation_lists, involution, sphere
from src.ribbon.surface import euler_characteristic, face_of
from src.utils.log import get_logger

logger = get_logger("Reduction")


def _rebuild(ribbon_map: RibbonMap, removed: str, rotations: List[List[int]]) -> RibbonMap:
    labels = [label for label in ribbon_map.edge_labels if label != removed]
    if not labels:
        return sphere()
    token_rotations = [[ribbon_map.dart_token(d) for d in rotation] for rotation in rotations]
    try:
        return from_rotation_lists(labels, token_rotations)
    except RibbonValidationError as exc:
        raise InternalInvariantViolation(f"移除边 {removed!r} 后图不再合法: {exc}") from exc


def delete_edge(ribbon_map: RibbonMap, label: str) -> RibbonMap:
    """从两端的旋转中去掉边 label 的两个半边"""
    k = ribbon_map.edge_index(label)
    removed = (2 * k, 2 * k + 1)
    rotations = [[d for d in orbit if d not in removed] for orbit in ribbon_map.orbits]
    return _rebuild(ribbon_map, label, rotations)


def delete_face_merging_edge(ribbon_map: RibbonMap) -> Optional[Tuple[RibbonMap, str]]:
    """删除第一条两侧属于不同面的边

    Returns:
        (新图, 边标签)；所有边两侧都在同一个面时返回 None
    """
    if ribbon_map.num_edges == 0:
        return None
    owner = face_of(ribbon_map)
    for k, label in enumerate(ribbon_map.edge_labels):
        if owner[2 * k] != owner[2 * k + 1]:
            return delete_edge(ribbon_map, label), label
    return None


def contract_edge(ribbon_map: RibbonMap, label: str) -> RibbonMap:
    """收缩非自环边，把终点的星形拼接进起点的星形

    起点循环里的 e 换成 σ(ē), σ²(ē), ...，即终点星形中 ē 之后的所有半边。

    Raises:
        LoopNotContractibleError: label 是自环
    """
    k = ribbon_map.edge_index(label)
    dart = 2 * k
    reverse = involution(dart)
    start_vertex = ribbon_map.tail(dart)
    end_vertex = ribbon_map.tail(reverse)
    if start_vertex == end_vertex:
        raise LoopNotContractibleError(f"边 {label!r} 是自环，不能收缩")

    spliced = []
    nxt = ribbon_map.sigma(reverse)
    while nxt != reverse:
        spliced.append(nxt)
        nxt = ribbon_map.sigma(nxt)

    rotations = []
    for v, orbit in enumerate(ribbon_map.orbits):
        if v == end_vertex:
            continue
        if v == start_vertex:
            rotation = []
            for d in orbit:
                if d == dart:
                    rotation.extend(spliced)
                else:
                    rotation.append(d)
            rotations.append(rotation)
        else:
            rotations.append(list(orbit))
    return _rebuild(ribbon_map, label, rotations)


def _first_contractible(ribbon_map: RibbonMap) -> str:
    for k, label in enumerate(ribbon_map.edge_labels):
        if ribbon_map.tail(2 * k) != ribbon_map.head(2 * k):
            return label
    raise InternalInvariantViolation("多个顶点但没有可收缩的边，图不连通")


def reduce_to_one_vertex_one_face(ribbon_map: RibbonMap) -> Tuple[RibbonMap, MoveTrace]:
    """反复消面再反复消点

    Returns:
        (单顶点单面图或 S_0, 移动记录)
    """
    chi = euler_characteristic(ribbon_map)
    moves = []
    current = ribbon_map

    def check(move):
        if config.VERIFY_CLASSIFICATION and euler_characteristic(current) != chi:
            raise InternalInvariantViolation(f"{move.kind}({move.label}) 改变了欧拉示性数")

    while True:
        step = delete_face_merging_edge(current)
        if step is None:
            break
        current, label = step
        moves.append(DeleteEdge(label))
        check(moves[-1])

    while current.num_vertices > 1:
        label = _first_contractible(current)
        current = contract_edge(current, label)
        moves.append(ContractEdge(label))
        check(moves[-1])

    logger.info("约化完成: 删除 %d 条边, 收缩 %d 条边",
                sum(isinstance(m, DeleteEdge) for m in moves),
                sum(isinstance(m, ContractEdge) for m in moves))
    return current, MoveTrace(tuple(moves))
