"""
面、欧拉示性数与亏格

面就是面后继映射 φ(e) = σ(ē) 的轨道：沿着 e 走到终点，在终点的星形里
取 ē 的循环后继作为下一条边。
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from src.errors import EmptyMapError, InternalInvariantViolation
from src.ribbon.ribbon_map import (
    RibbonMap,
    from_rotation_lists,
    involution,
    sphere,
)
from src.utils.labels import MINUS, PLUS, format_dart_token, petal_labels


@dataclass(frozen=True)
class Face:
    """一个面：半边的循环序列，从最小半边开始"""

    darts: Tuple[int, ...]

    def __len__(self):
        return len(self.darts)

    def letters(self, ribbon_map: RibbonMap) -> List[Tuple[str, int]]:
        return [ribbon_map.letter(d) for d in self.darts]

    def tokens(self, ribbon_map: RibbonMap) -> List[str]:
        return [ribbon_map.dart_token(d) for d in self.darts]


@dataclass(frozen=True)
class SurfaceReport:
    """闭曲面的完整同胚不变量"""

    V: int
    m: int
    F: int
    chi: int
    genus: int
    face_words: Tuple[Tuple[Tuple[str, int], ...], ...]


def face_successor(ribbon_map: RibbonMap, dart: int) -> int:
    """φ(e) = σ(ē)"""
    return ribbon_map.rotation[involution(dart)]


def trace_faces(ribbon_map: RibbonMap) -> List[Face]:
    """追踪所有面

    Raises:
        EmptyMapError: 没有边（S_0 按约定只有一个空面，见 euler_characteristic）
    """
    if ribbon_map.num_edges == 0:
        raise EmptyMapError("没有边的图无法追踪面")
    seen = [False] * ribbon_map.num_darts
    faces = []
    for start in range(ribbon_map.num_darts):
        if seen[start]:
            continue
        darts = []
        dart = start
        while not seen[dart]:
            seen[dart] = True
            darts.append(dart)
            dart = face_successor(ribbon_map, dart)
        if dart != start:
            raise InternalInvariantViolation("面后继映射不是置换")
        faces.append(Face(tuple(darts)))
    return faces


def face_of(ribbon_map: RibbonMap) -> List[int]:
    """半边 -> 所在面的编号"""
    owner = [0] * ribbon_map.num_darts
    for index, face in enumerate(trace_faces(ribbon_map)):
        for dart in face.darts:
            owner[dart] = index
    return owner


def num_faces(ribbon_map: RibbonMap) -> int:
    """面数；S_0 按约定为 1"""
    if ribbon_map.num_edges == 0:
        return 1
    return len(trace_faces(ribbon_map))


def euler_characteristic(ribbon_map: RibbonMap) -> int:
    """χ = V - m + F"""
    return ribbon_map.num_vertices - ribbon_map.num_edges + num_faces(ribbon_map)


def genus(ribbon_map: RibbonMap) -> int:
    """亏格 (2 - χ) / 2

    Raises:
        InternalInvariantViolation: χ 为奇数或亏格为负（连通的可定向图不会出现）
    """
    chi = euler_characteristic(ribbon_map)
    if chi % 2 != 0 or chi > 2:
        raise InternalInvariantViolation(f"欧拉示性数 {chi} 不可能来自连通的可定向带状图")
    return (2 - chi) // 2


def surface_report(ribbon_map: RibbonMap) -> SurfaceReport:
    """汇总 V、m、F、χ、亏格和所有面的字"""
    if ribbon_map.num_edges == 0:
        face_words = ((),)
    else:
        face_words = tuple(tuple(face.letters(ribbon_map)) for face in trace_faces(ribbon_map))
    chi = euler_characteristic(ribbon_map)
    return SurfaceReport(
        V=ribbon_map.num_vertices,
        m=ribbon_map.num_edges,
        F=len(face_words),
        chi=chi,
        genus=genus(ribbon_map),
        face_words=face_words,
    )


def petal(g: int) -> RibbonMap:
    """花瓣图 Γ_g：一个顶点、2g 个自环

    每个花瓣的旋转块取 (a_i, b̄_i, ā_i, b_i)，这样唯一的面恰好读作
    a_1 b_1 ā_1 b̄_1 ... a_g b_g ā_g b̄_g。g = 0 返回 S_0。
    """
    if g < 0:
        raise ValueError(f"亏格必须非负: {g}")
    if g == 0:
        return sphere()
    labels = petal_labels(g)
    rotation = []
    for i in range(g):
        a, b = labels[2 * i], labels[2 * i + 1]
        rotation.extend([
            format_dart_token(a, PLUS),
            format_dart_token(b, MINUS),
            format_dart_token(a, MINUS),
            format_dart_token(b, PLUS),
        ])
    return from_rotation_lists(labels, [rotation])
