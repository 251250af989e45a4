"""
自由群中的字：化简、循环化简、求逆与指数和
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from src.formats.word_syntax import Letter, format_letters, parse_letters


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """删除所有相邻的 x x̄，结果唯一"""
    stack = []
    for label, sign in letters:
        if stack and stack[-1][0] == label and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((label, sign))
    return tuple(stack)


def cyclic_reduce(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    """先自由化简，再去掉首尾互逆的字母"""
    letters = free_reduce(letters)
    start, end = 0, len(letters)
    while end - start >= 2:
        (first, s1), (last, s2) = letters[start], letters[end - 1]
        if first != last or s1 != -s2:
            break
        start += 1
        end -= 1
    return letters[start:end]


@dataclass(frozen=True)
class GroupWord:
    """生成元上的带符号字母序列（不自动化简，== 为字面相等）"""

    letters: Tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str, generators: Optional[Iterable[str]] = None) -> "GroupWord":
        return cls(tuple(parse_letters(text, known_labels=generators)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + tuple(other.letters))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((label, -sign) for label, sign in reversed(self.letters)))

    def reduced(self) -> "GroupWord":
        return GroupWord(free_reduce(self.letters))

    def cyclically_reduced(self) -> "GroupWord":
        return GroupWord(cyclic_reduce(self.letters))

    def is_reduced(self) -> bool:
        return free_reduce(self.letters) == self.letters

    @property
    def labels(self) -> set:
        return {label for label, _ in self.letters}

    def exponent_sums(self, generators: Sequence[str]) -> np.ndarray:
        """在 ℤ^n 中的像（阿贝尔化）"""
        index = {label: i for i, label in enumerate(generators)}
        vector = np.zeros(len(generators), dtype=np.int64)
        for label, sign in self.letters:
            vector[index[label]] += sign
        return vector

    def __str__(self):
        return format_letters(self.letters)
