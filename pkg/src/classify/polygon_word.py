"""
多边形字

单顶点单面的带状图沿着唯一的面剪开就是一个多边形，边界依次读出的带符号
标签就是多边形字。每个标签恰好出现两次，一次为正一次为负。
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from src.errors import MalformedWordError, PreconditionViolation
from src.formats.word_syntax import Letter, format_letters, parse_letters
from src.ribbon.ribbon_map import RibbonMap, involution, sphere
from src.ribbon.surface import num_faces, trace_faces


@dataclass(frozen=True, eq=False)
class PolygonWord:
    """循环的带符号标签序列；相等按循环序列比较"""

    letters: Tuple[Letter, ...]

    @classmethod
    def parse(cls, text: str) -> "PolygonWord":
        word = cls(tuple(parse_letters(text)))
        word.validate()
        return word

    def validate(self):
        """检查每个标签恰好一正一负

        Raises:
            MalformedWordError: 标签出现次数不对，或两次符号相同（不可定向）
        """
        signs: Dict[str, List[int]] = {}
        for label, sign in self.letters:
            if sign not in (1, -1):
                raise MalformedWordError(f"字母 {label!r} 的符号必须是 ±1: {sign}")
            signs.setdefault(label, []).append(sign)
        for label, seen in signs.items():
            if len(seen) != 2:
                raise MalformedWordError(f"标签 {label!r} 出现了 {len(seen)} 次，应为 2 次")
            if seen[0] == seen[1]:
                raise MalformedWordError(f"标签 {label!r} 两次出现符号相同，字不可定向")

    @property
    def labels(self) -> List[str]:
        """按首次出现的顺序列出标签"""
        return list(dict.fromkeys(label for label, _ in self.letters))

    def canonical_rotation(self) -> Tuple[Letter, ...]:
        if not self.letters:
            return ()
        n = len(self.letters)
        return min(self.letters[i:] + self.letters[:i] for i in range(n))

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, PolygonWord):
            return NotImplemented
        if len(self.letters) != len(other.letters):
            return False
        if not self.letters:
            return True
        doubled = self.letters + self.letters
        n = len(self.letters)
        return any(doubled[i:i + n] == other.letters for i in range(n))

    def __hash__(self):
        return hash(self.canonical_rotation())

    def __str__(self):
        return format_letters(self.letters)

    def __repr__(self):
        return f"PolygonWord({format_letters(self.letters)!r})"


def as_polygon_word(word) -> PolygonWord:
    if isinstance(word, PolygonWord):
        word.validate()
        return word
    if isinstance(word, str):
        return PolygonWord.parse(word)
    result = PolygonWord(tuple(word))
    result.validate()
    return result


def polygon_word(ribbon_map: RibbonMap) -> PolygonWord:
    """单顶点单面图的唯一面读成多边形字

    Raises:
        PreconditionViolation: V != 1、F != 1 或没有边
    """
    if ribbon_map.num_edges == 0:
        raise PreconditionViolation("没有边的图没有多边形字")
    if ribbon_map.num_vertices != 1:
        raise PreconditionViolation(f"需要单顶点，实际 V={ribbon_map.num_vertices}")
    faces = trace_faces(ribbon_map)
    if len(faces) != 1:
        raise PreconditionViolation(f"需要单面，实际 F={len(faces)}")
    return PolygonWord(tuple(faces[0].letters(ribbon_map)))


def word_to_map(word) -> RibbonMap:
    """由多边形字重建商曲面上的带状图

    字的半边依次为 d_0 ... d_{n-1}，令 σ(ι(d_i)) = d_{i+1}，这样唯一的面
    恰好读出这个字；顶点就是多边形角的等价类。

    Raises:
        MalformedWordError: 字不合法
    """
    word = as_polygon_word(word)
    if not word.letters:
        return sphere()
    labels = word.labels
    index = {label: k for k, label in enumerate(labels)}
    darts = [2 * index[label] if sign > 0 else 2 * index[label] + 1
             for label, sign in word.letters]
    sigma = [0] * len(darts)
    for i, dart in enumerate(darts):
        sigma[involution(dart)] = darts[(i + 1) % len(darts)]
    return RibbonMap(tuple(labels), tuple(sigma))


def vertex_classes(word) -> int:
    """多边形角的等价类个数（商曲面的顶点数）"""
    return word_to_map(word).num_vertices


def word_euler_characteristic(word) -> int:
    ribbon_map = word_to_map(word)
    return ribbon_map.num_vertices - ribbon_map.num_edges + num_faces(ribbon_map)


def _positions(letters: Sequence[Letter]) -> Dict[str, Tuple[int, int]]:
    found: Dict[str, List[int]] = {}
    for i, (label, _) in enumerate(letters):
        found.setdefault(label, []).append(i)
    return {label: (pos[0], pos[1]) for label, pos in found.items()}


def is_linked(word, first: str, second: str) -> bool:
    """两条边在多边形上交错出现（a ... b ... ā ... b̄ 型）"""
    word = as_polygon_word(word)
    positions = _positions(word.letters)
    for label in (first, second):
        if label not in positions:
            raise MalformedWordError(f"字中没有标签 {label!r}")
    i1, i2 = positions[first]
    j1, j2 = positions[second]
    return (i1 < j1 < i2) != (i1 < j2 < i2)


def linked_pairs(word) -> List[Tuple[str, str]]:
    """所有交错的标签对，按首次出现顺序"""
    word = as_polygon_word(word)
    return [(a, b) for a, b in combinations(word.labels, 2) if is_linked(word, a, b)]
