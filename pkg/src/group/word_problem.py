"""
字问题

按表示的类型选择算法，每种都是可靠的判定：
- 没有非空关系子：自由化简后为空
- 亏格 0：群平凡
- 亏格 1：群同构于 ℤ×ℤ，没有挠元，指数和向量落在关系子格的有理张成里即可
- 单个满足 C'(1/6) 的关系子：Dehn 算法
其余情况抛出 UnsupportedPresentationError。
"""
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np

from src.config.topology_config import config
from src.errors import InternalInvariantViolation, UnsupportedPresentationError
from src.formats.word_syntax import Letter
from src.group.presentation import Presentation
from src.group.words import GroupWord, cyclic_reduce
from src.utils.log import get_logger

logger = get_logger("WordProblem")

Solver = Callable[[GroupWord], bool]


def _cyclic_permutations(letters: Sequence[Letter]) -> List[Tuple[Letter, ...]]:
    letters = tuple(letters)
    inverse = tuple((label, -sign) for label, sign in reversed(letters))
    result = []
    for word in (letters, inverse):
        for i in range(len(word)):
            result.append(word[i:] + word[:i])
    return result


def max_piece_length(relator: GroupWord) -> int:
    """片段（两个不同循环置换的公共前缀）的最大长度"""
    perms = sorted(set(_cyclic_permutations(cyclic_reduce(relator.letters))))
    longest = 0
    # 字典序相邻的两项之间的公共前缀就是全局最长的
    for first, second in zip(perms, perms[1:]):
        common = 0
        while common < len(first) and first[common] == second[common]:
            common += 1
        longest = max(longest, common)
    return longest


def satisfies_small_cancellation(relator: GroupWord, ratio: float = None) -> bool:
    """C'(λ)：每个片段的长度都小于 λ|R|"""
    ratio = config.SMALL_CANCELLATION_RATIO if ratio is None else ratio
    reduced = cyclic_reduce(relator.letters)
    if not reduced:
        return False
    return max_piece_length(relator) < ratio * len(reduced)


def dehn_reduce(word: GroupWord, relator: GroupWord) -> GroupWord:
    """Dehn 算法：把超过关系子一半的片段换成较短的补段，直到无法继续

    每一步长度严格下降。结果为空当且仅当字在群中平凡（C'(1/6) 时）。
    """
    perms = _cyclic_permutations(cyclic_reduce(relator.letters))
    n = len(perms[0]) if perms else 0
    current = cyclic_reduce(word.letters)
    for _ in range(config.DEHN_MAX_STEPS):
        replaced = _dehn_step(current, perms, n)
        if replaced is None:
            return GroupWord(current)
        current = replaced
    raise InternalInvariantViolation(f"Dehn 算法超过 {config.DEHN_MAX_STEPS} 步仍未停止")


def _dehn_step(current: Tuple[Letter, ...], perms, n: int):
    size = len(current)
    for length in range(min(n, size), n // 2, -1):
        for offset in range(size):
            turned = current[offset:] + current[:offset]
            prefix = turned[:length]
            for perm in perms:
                if perm[:length] == prefix:
                    complement = tuple((label, -sign) for label, sign in reversed(perm[length:]))
                    return cyclic_reduce(complement + turned[length:])
    return None


def _abelian_solver(presentation: Presentation) -> Solver:
    matrix = presentation.relator_matrix().astype(float)
    base_rank = int(np.linalg.matrix_rank(matrix)) if matrix.size else 0

    def solve(word: GroupWord) -> bool:
        vector = word.exponent_sums(presentation.generators).astype(float)
        if not vector.any():
            return True
        if base_rank == 0:
            return False
        stacked = np.vstack([matrix, vector])
        return int(np.linalg.matrix_rank(stacked)) == base_rank

    return solve


def _free_solver(word: GroupWord) -> bool:
    return not word.reduced()


def select_solver(presentation: Presentation) -> Solver:
    """为表示选择字问题算法

    Raises:
        UnsupportedPresentationError: 不属于可判定的几类表示
    """
    if presentation.genus_hint == 0:
        return lambda word: True
    relators = presentation.nonempty_relators
    if not relators:
        return _free_solver
    if presentation.genus_hint == 1:
        return _abelian_solver(presentation)
    if len(relators) == 1 and satisfies_small_cancellation(relators[0]):
        relator = relators[0]
        return lambda word: not dehn_reduce(word, relator)
    raise UnsupportedPresentationError(
        f"表示 {presentation} 不是自由群、亏格 0/1 或单个 C'(1/6) 关系子")


def is_trivial_word(word: Union[GroupWord, str], presentation: Presentation) -> bool:
    """判定字在群中是否等于单位元

    Raises:
        UnknownGeneratorError: 字中有未声明的生成元
        UnsupportedPresentationError: 表示不受支持
    """
    if isinstance(word, str):
        word = presentation.parse_word(word)
    presentation.check_word(word)
    solver = select_solver(presentation)
    result = solver(word)
    logger.debug("%s 在 %s 中%s平凡", word, presentation, "" if result else "不")
    return result


def are_equal(first: GroupWord, second: GroupWord, presentation: Presentation) -> bool:
    return is_trivial_word(first * second.inverse(), presentation)
