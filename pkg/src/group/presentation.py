"""
群表示、离散路径与带状图基本群的表示

带状图的基本群 π̂₁(Γ, v₀) 由生成树之外的边生成，每个面给出一个关系子
（面上的字去掉树边后化简）。
"""
from __future__ import annotations

import string
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import EndpointMismatchError, UnknownGeneratorError
from src.formats.word_syntax import format_letters, parse_letters
from src.group.words import GroupWord
from src.ribbon.ribbon_map import DartRef, RibbonMap, involution
from src.ribbon.surface import genus as map_genus
from src.ribbon.surface import trace_faces
from src.utils.labels import petal_labels
from src.utils.log import get_logger

logger = get_logger("Presentation")


@dataclass(frozen=True)
class Presentation:
    """有限表示 ⟨generators | relators⟩

    genus_hint 记录表示所对应的曲面亏格（已知时），用于选择字问题算法。
    """

    generators: Tuple[str, ...]
    relators: Tuple[GroupWord, ...] = ()
    genus_hint: Optional[int] = None
    name: str = ""

    def __post_init__(self):
        for relator in self.relators:
            self.check_word(relator)

    def check_word(self, word: GroupWord):
        """
        Raises:
            UnknownGeneratorError: 字中有未声明的生成元
        """
        unknown = sorted(word.labels - set(self.generators))
        if unknown:
            raise UnknownGeneratorError(f"未声明的生成元: {', '.join(unknown)}")

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    @property
    def nonempty_relators(self) -> List[GroupWord]:
        return [relator for relator in self.relators if relator]

    @property
    def is_free(self) -> bool:
        return not self.nonempty_relators

    def relator_matrix(self) -> np.ndarray:
        """关系子的指数和矩阵，每行一个关系子"""
        if not self.relators:
            return np.zeros((0, len(self.generators)), dtype=np.int64)
        return np.vstack([relator.exponent_sums(self.generators) for relator in self.relators])

    def parse_word(self, text: str) -> GroupWord:
        word = GroupWord(tuple(parse_letters(text, known_labels=self.generators)))
        self.check_word(word)
        return word

    def renamed(self, mapping: Dict[str, str]) -> "Presentation":
        def rename(word):
            return GroupWord(tuple((mapping.get(label, label), sign) for label, sign in word))
        return Presentation(
            tuple(mapping.get(g, g) for g in self.generators),
            tuple(rename(r) for r in self.relators),
            self.genus_hint,
            self.name,
        )

    def __str__(self):
        relators = ", ".join(format_letters(r.letters) for r in self.relators)
        return f"<{', '.join(self.generators)} | {relators}>"


# ---------------------------------------------------------------------- #
# 标准表示
# ---------------------------------------------------------------------- #
def free_group(rank: int) -> Presentation:
    """rank 个生成元的自由群"""
    if rank < 0:
        raise ValueError(f"秩必须非负: {rank}")
    if rank <= len(string.ascii_lowercase):
        generators = tuple(string.ascii_lowercase[:rank])
    else:
        generators = tuple(f"x{i}" for i in range(1, rank + 1))
    return Presentation(generators, (), None, f"free:{rank}")


def surface_group(g: int) -> Presentation:
    """A_g = ⟨a_1, b_1, ..., a_g, b_g | Π a_i b_i ā_i b̄_i⟩；g = 0 为平凡群的空表示"""
    if g < 0:
        raise ValueError(f"亏格必须非负: {g}")
    if g == 0:
        return Presentation((), (), 0, "surface:0")
    labels = petal_labels(g)
    letters = []
    for i in range(g):
        a, b = labels[2 * i], labels[2 * i + 1]
        letters.extend([(a, 1), (b, 1), (a, -1), (b, -1)])
    return Presentation(tuple(labels), (GroupWord(tuple(letters)),), g, f"surface:{g}")


def zxz_group() -> Presentation:
    """ℤ×ℤ = ⟨a, b | a b ā b̄⟩"""
    return Presentation(("a", "b"), (GroupWord.parse("abAB"),), 1, "zxz")


# ---------------------------------------------------------------------- #
# 离散路径
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class DiscretePath:
    """首尾相接的半边序列；常路径只记录所在顶点"""

    darts: Tuple[int, ...]
    start: int
    end: int

    @classmethod
    def constant(cls, vertex: int) -> "DiscretePath":
        return cls((), vertex, vertex)

    @classmethod
    def from_darts(cls, ribbon_map: RibbonMap, darts: Sequence[int],
                   start: Optional[int] = None) -> "DiscretePath":
        """
        Raises:
            EndpointMismatchError: 相邻半边不首尾相接，或与给定起点不符
        """
        darts = tuple(darts)
        if not darts:
            if start is None:
                raise EndpointMismatchError("常路径必须给出顶点")
            ribbon_map.star(start)
            return cls.constant(start)
        for i, (prev, nxt) in enumerate(zip(darts, darts[1:])):
            if ribbon_map.head(prev) != ribbon_map.tail(nxt):
                raise EndpointMismatchError(
                    f"第 {i} 和第 {i + 1} 条边不相接: {ribbon_map.dart_token(prev)} "
                    f"{ribbon_map.dart_token(nxt)}")
        first = ribbon_map.tail(darts[0])
        if start is not None and start != first:
            raise EndpointMismatchError(f"路径从顶点 {first} 出发，而不是 {start}")
        return cls(darts, first, ribbon_map.head(darts[-1]))

    @classmethod
    def from_word(cls, ribbon_map: RibbonMap, text: str, start: Optional[int] = None) -> "DiscretePath":
        """由边标签上的字构造路径，例如 "a b A"；"1" 是 start 处的常路径"""
        letters = parse_letters(text, known_labels=ribbon_map.edge_labels)
        darts = [ribbon_map.dart_of(DartRef(label, sign)) for label, sign in letters]
        return cls.from_darts(ribbon_map, darts, start)

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    def __len__(self):
        return len(self.darts)

    def inverse(self) -> "DiscretePath":
        return DiscretePath(tuple(involution(d) for d in reversed(self.darts)), self.end, self.start)

    def concat(self, other: "DiscretePath") -> "DiscretePath":
        if self.end != other.start:
            raise EndpointMismatchError(f"路径终点 {self.end} 与下一段起点 {other.start} 不同")
        return DiscretePath(self.darts + other.darts, self.start, other.end)

    def word(self, ribbon_map: RibbonMap) -> GroupWord:
        """路径作为所有边标签上的字"""
        return GroupWord(tuple(ribbon_map.letter(d) for d in self.darts))


# ---------------------------------------------------------------------- #
# 生成树与 π̂₁
# ---------------------------------------------------------------------- #
def spanning_tree(ribbon_map: RibbonMap, root: int = 0) -> "SpanningTree":
    """从 root 出发的 BFS 生成树，每个顶点按半边编号从小到大扫描"""
    ribbon_map.star(root)
    parent_dart: Dict[int, int] = {}
    visited = {root}
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for dart in sorted(ribbon_map.star(vertex)):
            nxt = ribbon_map.head(dart)
            if nxt not in visited:
                visited.add(nxt)
                parent_dart[nxt] = dart
                queue.append(nxt)
    return SpanningTree(ribbon_map, root, parent_dart)


class SpanningTree:
    """生成树：树边集合和从根出发的树上路径"""

    def __init__(self, ribbon_map: RibbonMap, root: int, parent_dart: Dict[int, int]):
        self.ribbon_map = ribbon_map
        self.root = root
        self.parent_dart = parent_dart
        self.edges = frozenset(ribbon_map.edge_labels[d // 2] for d in parent_dart.values())

    def path_from_root(self, vertex: int) -> DiscretePath:
        self.ribbon_map.star(vertex)
        darts = []
        while vertex != self.root:
            dart = self.parent_dart[vertex]
            darts.append(dart)
            vertex = self.ribbon_map.tail(dart)
        if not darts:
            return DiscretePath.constant(self.root)
        return DiscretePath.from_darts(self.ribbon_map, list(reversed(darts)))

    def project(self, letters: Iterable) -> GroupWord:
        """去掉树边，得到生成元上的字"""
        return GroupWord(tuple((label, sign) for label, sign in letters if label not in self.edges))


def pi1_presentation(ribbon_map: RibbonMap, v0: int = 0) -> Presentation:
    """带状图基本群 π̂₁(Γ, v₀) 的表示

    生成元是生成树之外的边（按边标签顺序），每个面给出一个关系子，化简后的
    空关系子也保留，面与关系子一一对应。
    """
    if ribbon_map.num_edges == 0:
        ribbon_map.star(v0)
        return Presentation((), (GroupWord(),), 0, "pi1")
    tree = spanning_tree(ribbon_map, v0)
    generators = tuple(label for label in ribbon_map.edge_labels if label not in tree.edges)
    relators = tuple(
        tree.project(face.letters(ribbon_map)).cyclically_reduced()
        for face in trace_faces(ribbon_map)
    )
    presentation = Presentation(generators, relators, map_genus(ribbon_map), "pi1")
    logger.debug("π̂₁ 表示: %d 个生成元, %d 个关系子", len(generators), len(relators))
    return presentation


def rebase_loop(ribbon_map: RibbonMap, v0: int, loop: DiscretePath) -> DiscretePath:
    """γ·loop·γ̄，γ 是生成树中从 v0 到 loop 起点的路径"""
    if not loop.is_loop:
        raise EndpointMismatchError(f"不是闭路: {loop.start} -> {loop.end}")
    gamma = spanning_tree(ribbon_map, v0).path_from_root(loop.start)
    return gamma.concat(loop).concat(gamma.inverse())


def abelianization_rank(presentation: Presentation) -> int:
    """ℤ^n 模关系子格的自由秩；曲面群 A_g 为 2g"""
    n = len(presentation.generators)
    matrix = presentation.relator_matrix()
    if n == 0 or matrix.shape[0] == 0:
        return n
    return n - int(np.linalg.matrix_rank(matrix.astype(float)))
