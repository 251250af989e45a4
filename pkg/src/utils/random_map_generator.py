"""
随机带状图生成器 - 从花瓣图出发做随机的逆向约化移动

两种逆向移动都保持欧拉示性数和连通性：
- 插入边：在同一个面的两个角之间连一条新边，把面一分为二（消面的逆）
- 拆分顶点：把一个顶点星形中连续的一段分给新顶点，两者用新边相连（收缩的逆）
"""
import random
from typing import List, Optional, Tuple

from src.config.topology_config import config
from src.ribbon.ribbon_map import (
    RibbonMap,
    from_rotation_lists,
    involution,
    rotation_tokens,
)
from src.ribbon.surface import petal, trace_faces
from src.utils.labels import MINUS, PLUS, format_dart_token, fresh_label
from src.utils.log import get_logger

logger = get_logger("RandomMap")

Rotations = List[List[str]]


def _insert_after(rotations: Rotations, anchor: str, tokens: List[str]):
    """在 anchor 之后依次插入 tokens"""
    for rotation in rotations:
        if anchor in rotation:
            position = rotation.index(anchor) + 1
            rotation[position:position] = tokens
            return
    raise KeyError(anchor)


def insert_edge(current: RibbonMap, rng: random.Random) -> Tuple[List[str], Rotations]:
    """在某个面的两个角之间插入一条新边

    面 (d_0, ..., d_{L-1}) 中 d_p 之后的角位于 ι(d_p) 所在星形里 ι(d_p) 之后。
    两个角相同时新边是一个把面切出一个单边小面的自环。
    """
    labels = list(current.edge_labels)
    new = fresh_label(config.RANDOM_EDGE_PREFIX, labels)
    plus, minus = format_dart_token(new, PLUS), format_dart_token(new, MINUS)
    labels.append(new)

    if current.num_edges == 0:
        return labels, [[plus, minus]]

    rotations = rotation_tokens(current)
    face = rng.choice(trace_faces(current)).darts
    p, q = sorted((rng.randrange(len(face)), rng.randrange(len(face))))
    first = current.dart_token(involution(face[p]))
    if p == q:
        _insert_after(rotations, first, [plus, minus])
    else:
        second = current.dart_token(involution(face[q]))
        _insert_after(rotations, first, [plus])
        _insert_after(rotations, second, [minus])
    return labels, rotations


def split_vertex(current: RibbonMap, rng: random.Random) -> Tuple[List[str], Rotations]:
    """把一个顶点星形中连续的一段（可以为空）移到新顶点上"""
    labels = list(current.edge_labels)
    new = fresh_label(config.RANDOM_EDGE_PREFIX, labels)
    plus, minus = format_dart_token(new, PLUS), format_dart_token(new, MINUS)
    labels.append(new)

    if current.num_edges == 0:
        return labels, [[plus], [minus]]

    rotations = rotation_tokens(current)
    v = rng.randrange(len(rotations))
    star = rotations[v]
    offset = rng.randrange(len(star))
    turned = star[offset:] + star[:offset]
    length = rng.randint(0, len(star))
    rotations[v] = [plus] + turned[length:]
    rotations.append([minus] + turned[:length])
    return labels, rotations


def random_filling_map(genus: int, moves: int, seed: Optional[int] = None) -> RibbonMap:
    """
    生成亏格为 genus 的随机带状图

    Args:
        genus: 目标亏格
        moves: 逆向移动次数
        seed: 随机种子（None 时使用 config.DEFAULT_SEED）

    Returns:
        连通、亏格为 genus 的带状图；moves 为 0 时就是 petal(genus)
    """
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    current = petal(genus)
    for _ in range(moves):
        if rng.random() < config.INSERT_EDGE_PROBABILITY:
            labels, rotations = insert_edge(current, rng)
        else:
            labels, rotations = split_vertex(current, rng)
        current = from_rotation_lists(labels, rotations)

    logger.debug("生成随机图: 亏格 %d, %d 次移动, V=%d, m=%d",
                 genus, moves, current.num_vertices, current.num_edges)
    return current
