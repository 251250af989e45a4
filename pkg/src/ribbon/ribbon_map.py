"""
带状图（旋转系统）数据模型

半边编号约定：第 k 条几何边有两个半边，2k 是正向 "label+"，2k+1 是反向
"label-"，对合 ι 就是 d ^ 1，天然无不动点。顶点的星形由置换 σ 的轨道给出，
轨道按最小半边排序得到顶点编号。
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from src.errors import (
    DisconnectedError,
    DuplicateDartError,
    DuplicateLabelError,
    IndexOutOfRangeError,
    InternalInvariantViolation,
    InvalidTokenError,
    IsolatedVertexError,
    MissingDartError,
    RibbonValidationError,
    UnknownLabelError,
)
from src.config.topology_config import config
from src.utils.labels import (
    MINUS,
    PLUS,
    format_dart_token,
    is_valid_label,
    parse_dart_token,
    suffixed_label,
)
from src.utils.log import get_logger

logger = get_logger("RibbonMap")


def involution(dart: int) -> int:
    """ι：同一条几何边的另一个半边"""
    return dart ^ 1


@dataclass(frozen=True)
class DartRef:
    """有向边 e / ē 的文字表示"""

    label: str
    sign: int

    @classmethod
    def from_token(cls, token: str) -> "DartRef":
        label, sign = parse_dart_token(token)
        return cls(label, sign)

    @property
    def token(self) -> str:
        return format_dart_token(self.label, self.sign)


@dataclass(frozen=True)
class ValidationReport:
    """校验结果：issues 为 (错误码, 说明) 列表，ok 当且仅当没有问题"""

    issues: Tuple[Tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.issues


@dataclass(frozen=True)
class RibbonMap:
    """带状图：边标签 + 半边上的旋转置换 σ

    只有一个孤立顶点、没有边的图代表球面 S_0，这是唯一允许孤立顶点的情形。
    """

    edge_labels: Tuple[str, ...]
    rotation: Tuple[int, ...]
    num_isolated_vertices: int = 0

    def __post_init__(self):
        if len(self.rotation) != 2 * len(self.edge_labels):
            raise InternalInvariantViolation(
                f"半边数 {len(self.rotation)} 与边数 {len(self.edge_labels)} 不匹配")
        if sorted(self.rotation) != list(range(len(self.rotation))):
            raise InternalInvariantViolation("旋转 σ 不是半边集合上的双射")

    # ------------------------------------------------------------------ #
    # 基本计数
    # ------------------------------------------------------------------ #
    @property
    def num_edges(self) -> int:
        return len(self.edge_labels)

    @property
    def num_darts(self) -> int:
        return len(self.rotation)

    @property
    def num_vertices(self) -> int:
        return len(self.orbits) + self.num_isolated_vertices

    @property
    def is_sphere_representative(self) -> bool:
        """没有边的单顶点图（S_0）"""
        return self.num_edges == 0

    # ------------------------------------------------------------------ #
    # 派生结构
    # ------------------------------------------------------------------ #
    @cached_property
    def orbits(self) -> Tuple[Tuple[int, ...], ...]:
        """σ 的轨道，每条从最小半边开始，按最小半边排序"""
        seen = [False] * self.num_darts
        orbits = []
        for start in range(self.num_darts):
            if seen[start]:
                continue
            cycle = []
            dart = start
            while not seen[dart]:
                seen[dart] = True
                cycle.append(dart)
                dart = self.rotation[dart]
            orbits.append(tuple(cycle))
        return tuple(orbits)

    @cached_property
    def vertex_of(self) -> Tuple[int, ...]:
        owner = [0] * self.num_darts
        for index, orbit in enumerate(self.orbits):
            for dart in orbit:
                owner[dart] = index
        return tuple(owner)

    @cached_property
    def label_index(self) -> Dict[str, int]:
        return {label: k for k, label in enumerate(self.edge_labels)}

    def sigma(self, dart: int) -> int:
        return self.rotation[dart]

    def tail(self, dart: int) -> int:
        """半边的起点（它所在星形的顶点）"""
        return self.vertex_of[dart]

    def head(self, dart: int) -> int:
        """半边的终点"""
        return self.vertex_of[involution(dart)]

    def is_loop(self, label: str) -> bool:
        k = self.edge_index(label)
        return self.tail(2 * k) == self.head(2 * k)

    def star(self, vertex: int) -> Tuple[int, ...]:
        """顶点的星形（按循环顺序），孤立顶点返回空元组"""
        self._check_vertex(vertex)
        if vertex < len(self.orbits):
            return self.orbits[vertex]
        return ()

    def edge_index(self, label: str) -> int:
        try:
            return self.label_index[label]
        except KeyError:
            raise UnknownLabelError(f"未知的边标签 {label!r}") from None

    def dart_of(self, ref: Union[DartRef, str]) -> int:
        """把 DartRef 或 "a+" 记号转换成半边编号"""
        if isinstance(ref, str):
            ref = DartRef.from_token(ref)
        k = self.edge_index(ref.label)
        return 2 * k if ref.sign > 0 else 2 * k + 1

    def dart_ref(self, dart: int) -> DartRef:
        return DartRef(self.edge_labels[dart // 2], PLUS if dart % 2 == 0 else MINUS)

    def dart_token(self, dart: int) -> str:
        return self.dart_ref(dart).token

    def letter(self, dart: int) -> Tuple[str, int]:
        """半边对应的带符号字母 (label, ±1)"""
        ref = self.dart_ref(dart)
        return ref.label, ref.sign

    def _check_vertex(self, vertex: int):
        if not isinstance(vertex, int) or vertex < 0 or vertex >= self.num_vertices:
            raise IndexOutOfRangeError(
                f"顶点编号 {vertex} 超出范围 0..{self.num_vertices - 1}")

    def __repr__(self):
        return (f"RibbonMap(V={self.num_vertices}, m={self.num_edges}, "
                f"rotation={rotation_tokens(self)})")


# ---------------------------------------------------------------------- #
# 构造与校验
# ---------------------------------------------------------------------- #
def _collect_issues(edge_labels: Sequence[str],
                    rotations: Sequence[Sequence[str]]) -> List[RibbonValidationError]:
    """收集所有问题（不在第一个问题处停止）"""
    issues: List[RibbonValidationError] = []

    seen_labels = set()
    for i, label in enumerate(edge_labels):
        if not is_valid_label(label):
            issues.append(InvalidTokenError(f"非法的边标签 {label!r}", f"edges[{i}]"))
        elif label in seen_labels:
            issues.append(DuplicateLabelError(f"边标签 {label!r} 重复", f"edges[{i}]"))
        seen_labels.add(label)

    if not rotations:
        issues.append(IsolatedVertexError("图中至少需要一个顶点"))
        return issues

    if not edge_labels:
        if len(rotations) != 1 or list(rotations[0]):
            issues.append(IsolatedVertexError(
                "没有边的图只能是单个孤立顶点（球面 S_0）"))
        return issues

    seen_tokens = set()
    for v, rotation in enumerate(rotations):
        if not rotation:
            issues.append(IsolatedVertexError(
                "只有球面 S_0 允许度为 0 的顶点", f"vertices[{v}]"))
            continue
        for j, token in enumerate(rotation):
            context = f"vertices[{v}].rotation[{j}]"
            try:
                label, sign = parse_dart_token(token)
            except InvalidTokenError as exc:
                issues.append(exc.with_context(context))
                continue
            if label not in seen_labels:
                issues.append(UnknownLabelError(f"半边 {token!r} 使用了未声明的标签", context))
                continue
            key = (label, sign)
            if key in seen_tokens:
                issues.append(DuplicateDartError(f"半边 {token!r} 出现了两次", context))
            seen_tokens.add(key)

    for label in dict.fromkeys(edge_labels):
        for sign in (PLUS, MINUS):
            if (label, sign) not in seen_tokens:
                issues.append(MissingDartError(
                    f"半边 {format_dart_token(label, sign)!r} 没有出现在任何旋转中"))
    return issues


def _build(edge_labels: Sequence[str], rotations: Sequence[Sequence[str]]) -> RibbonMap:
    """在记号已经校验过的前提下构造 RibbonMap"""
    labels = tuple(edge_labels)
    if not labels:
        return RibbonMap((), (), num_isolated_vertices=1)
    index = {label: k for k, label in enumerate(labels)}
    sigma = [0] * (2 * len(labels))
    for rotation in rotations:
        darts = []
        for token in rotation:
            label, sign = parse_dart_token(token)
            k = index[label]
            darts.append(2 * k if sign > 0 else 2 * k + 1)
        for i, dart in enumerate(darts):
            sigma[dart] = darts[(i + 1) % len(darts)]
    return RibbonMap(labels, tuple(sigma))


def validate_rotation_lists(edge_labels: Sequence[str],
                            rotations: Sequence[Sequence[str]]) -> ValidationReport:
    """校验旋转表，返回所有问题"""
    issues = _collect_issues(edge_labels, rotations)
    if not issues:
        ribbon_map = _build(edge_labels, rotations)
        if not is_connected(ribbon_map):
            issues.append(DisconnectedError("图不连通"))
    return ValidationReport(tuple((exc.code, str(exc)) for exc in issues))


def from_rotation_lists(edge_labels: Sequence[str],
                        rotations: Sequence[Sequence[str]]) -> RibbonMap:
    """由边标签和每个顶点的旋转（半边记号列表）构造带状图

    Args:
        edge_labels: 几何边的标签
        rotations: 每个顶点的星形，按循环后继顺序列出，例如 [["a+", "b+", "a-", "b-"]]

    Returns:
        RibbonMap: 校验通过的带状图

    Raises:
        RibbonValidationError: 第一个校验问题对应的错误
    """
    issues = _collect_issues(edge_labels, rotations)
    if issues:
        raise issues[0]
    ribbon_map = _build(edge_labels, rotations)
    if not is_connected(ribbon_map):
        raise DisconnectedError(f"图有 {nx.number_connected_components(underlying_graph(ribbon_map))} 个连通分支")
    return ribbon_map


def sphere() -> RibbonMap:
    """球面 S_0 的代表：一个孤立顶点，没有边"""
    return RibbonMap((), (), num_isolated_vertices=1)


def rotation_tokens(ribbon_map: RibbonMap) -> List[List[str]]:
    """规范的旋转表：顶点按编号，每个旋转从最小半边开始"""
    if ribbon_map.is_sphere_representative:
        return [[] for _ in range(ribbon_map.num_isolated_vertices)]
    return [[ribbon_map.dart_token(d) for d in orbit] for orbit in ribbon_map.orbits]


def underlying_graph(ribbon_map: RibbonMap) -> nx.MultiGraph:
    """底层多重图：顶点为顶点编号，每条几何边一条边（key 为标签）"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(ribbon_map.num_vertices))
    for k, label in enumerate(ribbon_map.edge_labels):
        graph.add_edge(ribbon_map.tail(2 * k), ribbon_map.head(2 * k), key=label)
    return graph


def is_connected(ribbon_map: RibbonMap) -> bool:
    """σ 与 ι 生成的群是否在半边上传递"""
    graph = underlying_graph(ribbon_map)
    return graph.number_of_nodes() > 0 and nx.is_connected(graph)


# ---------------------------------------------------------------------- #
# 运算
# ---------------------------------------------------------------------- #
def degree(ribbon_map: RibbonMap, vertex: int) -> int:
    """顶点的度（自环贡献两次）"""
    return len(ribbon_map.star(vertex))


def refine(ribbon_map: RibbonMap) -> RibbonMap:
    """边细分：每条边中点加一个度为 2 的新顶点

    边 e 变成 e_0（尾点到中点）和 e_1（中点到头点），原顶点的循环顺序不变。
    """
    if ribbon_map.is_sphere_representative:
        return ribbon_map

    taken = set(ribbon_map.edge_labels)
    halves = {}
    new_labels = []
    for label in ribbon_map.edge_labels:
        first = suffixed_label(label, config.REFINE_TAIL_SUFFIX, taken)
        taken.add(first)
        second = suffixed_label(label, config.REFINE_HEAD_SUFFIX, taken)
        taken.add(second)
        halves[label] = (first, second)
        new_labels.extend([first, second])

    rotations = []
    for orbit in ribbon_map.orbits:
        rotation = []
        for dart in orbit:
            label, sign = ribbon_map.letter(dart)
            first, second = halves[label]
            rotation.append(format_dart_token(first, PLUS) if sign > 0
                            else format_dart_token(second, MINUS))
        rotations.append(rotation)
    for label in ribbon_map.edge_labels:
        first, second = halves[label]
        rotations.append([format_dart_token(first, MINUS), format_dart_token(second, PLUS)])

    refined = from_rotation_lists(new_labels, rotations)
    logger.debug("细分完成: V %d -> %d, m %d -> %d", ribbon_map.num_vertices,
                 refined.num_vertices, ribbon_map.num_edges, refined.num_edges)
    return refined
