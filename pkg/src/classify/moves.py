"""
移动记录与字上的移动

图上的移动（删边、收缩）在 reduction 中实现；这里定义五种记录，以及作用在
多边形字上的三种移动：消去相邻互逆对、剪切-粘合、重命名。
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple, Union

from src.errors import PreconditionViolation
from src.formats.word_syntax import Letter


@dataclass(frozen=True)
class DeleteEdge:
    """删除一条两侧属于不同面的边（消面）"""

    label: str
    kind = "DeleteEdge"

    def to_dict(self):
        return {"kind": self.kind, "label": self.label}


@dataclass(frozen=True)
class ContractEdge:
    """收缩一条非自环边（消点）"""

    label: str
    kind = "ContractEdge"

    def to_dict(self):
        return {"kind": self.kind, "label": self.label}


@dataclass(frozen=True)
class Cancel:
    """消去循环相邻的 x x̄"""

    label: str
    kind = "Cancel"

    def to_dict(self):
        return {"kind": self.kind, "label": self.label}


@dataclass(frozen=True)
class CutGlue:
    """沿对角线剪开、再沿旧标签粘合

    片段 letters[start:start+length] 中恰好含旧标签的一次出现 q^ε，
    记片段为 L q^ε R。片段整体换成新字母 new^sign，旧标签的另一次出现
    q^-ε 换成 R new^-sign L。
    """

    new_label: str
    old_label: str
    start: int
    length: int
    sign: int = 1
    kind = "CutGlue"

    def to_dict(self):
        return {
            "kind": self.kind,
            "new": self.new_label,
            "old": self.old_label,
            "start": self.start,
            "length": self.length,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class Relabel:
    """同时重命名：(旧标签, 新标签, 符号)，字母 (old, e) 变成 (new, e·sign)"""

    mapping: Tuple[Tuple[str, str, int], ...]
    kind = "Relabel"

    def to_dict(self):
        return {
            "kind": self.kind,
            "mapping": [{"old": old, "new": new, "sign": sign} for old, new, sign in self.mapping],
        }


Move = Union[DeleteEdge, ContractEdge, Cancel, CutGlue, Relabel]

MAP_MOVES = (DeleteEdge, ContractEdge)
WORD_MOVES = (Cancel, CutGlue, Relabel)


@dataclass(frozen=True)
class MoveTrace:
    """按顺序记录的移动序列"""

    moves: Tuple[Move, ...] = ()

    def __len__(self):
        return len(self.moves)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def __add__(self, other: "MoveTrace") -> "MoveTrace":
        return MoveTrace(self.moves + tuple(other.moves))

    def map_moves(self) -> List[Move]:
        return [move for move in self.moves if isinstance(move, MAP_MOVES)]

    def word_moves(self) -> List[Move]:
        return [move for move in self.moves if isinstance(move, WORD_MOVES)]

    def to_list(self):
        return [move.to_dict() for move in self.moves]


# ---------------------------------------------------------------------- #
# 字上的移动
# ---------------------------------------------------------------------- #
def _occurrences(letters: Sequence[Letter], label: str) -> List[int]:
    return [i for i, (name, _) in enumerate(letters) if name == label]


def find_cancellation(letters: Sequence[Letter]):
    """第一个循环相邻的互逆对的标签，没有时返回 None"""
    n = len(letters)
    if n < 2:
        return None
    for i in range(n):
        label, sign = letters[i]
        nxt_label, nxt_sign = letters[(i + 1) % n]
        if label == nxt_label and sign == -nxt_sign:
            return label
    return None


def apply_cancel(letters: Sequence[Letter], move: Cancel) -> Tuple[Letter, ...]:
    positions = _occurrences(letters, move.label)
    n = len(letters)
    if len(positions) != 2:
        raise PreconditionViolation(f"标签 {move.label!r} 不在字中出现两次")
    i, j = positions
    if not (j == i + 1 or (i == 0 and j == n - 1)):
        raise PreconditionViolation(f"标签 {move.label!r} 的两次出现不相邻")
    return tuple(letter for k, letter in enumerate(letters) if k not in (i, j))


def apply_cut_glue(letters: Sequence[Letter], move: CutGlue) -> Tuple[Letter, ...]:
    n = len(letters)
    end = move.start + move.length
    if move.length < 1 or move.start < 0 or end > n:
        raise PreconditionViolation(f"片段 [{move.start}, {end}) 超出字长 {n}")
    if _occurrences(letters, move.new_label):
        raise PreconditionViolation(f"新标签 {move.new_label!r} 已经在字中")
    inside = [i for i in _occurrences(letters, move.old_label) if move.start <= i < end]
    outside = [i for i in _occurrences(letters, move.old_label) if not move.start <= i < end]
    if len(inside) != 1 or len(outside) != 1:
        raise PreconditionViolation(f"片段必须恰好包含旧标签 {move.old_label!r} 的一次出现")

    split = inside[0]
    head = list(letters[move.start:split])
    tail = list(letters[split + 1:end])
    replacement = tail + [(move.new_label, -move.sign)] + head

    result: List[Letter] = []
    for i, letter in enumerate(letters):
        if i == move.start:
            result.append((move.new_label, move.sign))
        if move.start <= i < end:
            continue
        if i == outside[0]:
            result.extend(replacement)
        else:
            result.append(letter)
    return tuple(result)


def apply_relabel(letters: Sequence[Letter], move: Relabel) -> Tuple[Letter, ...]:
    table = {old: (new, sign) for old, new, sign in move.mapping}
    result = []
    for label, sign in letters:
        if label in table:
            new, flip = table[label]
            result.append((new, sign * flip))
        else:
            result.append((label, sign))
    return tuple(result)


def apply_word_move(letters: Sequence[Letter], move: Move) -> Tuple[Letter, ...]:
    if isinstance(move, Cancel):
        return apply_cancel(letters, move)
    if isinstance(move, CutGlue):
        return apply_cut_glue(letters, move)
    if isinstance(move, Relabel):
        return apply_relabel(letters, move)
    raise PreconditionViolation(f"{move.kind} 不是字上的移动")
