"""
多边形字的规范化

把单顶点类的字整理成 x_1 y_1 X_1 Y_1 ... x_g y_g X_g Y_g：

1. 循环地消去相邻的 x X
2. 从左到右收集把手块：取第一个不在块里的字母 p，在 p 与 P 之间找一个
   另一次出现位于 P 之后的字母 q，两次剪切-粘合得到新块 n c N C
3. 最后把所有块重命名成花瓣标签 a b A B c d C D ...

已经成形的块不会被剪开：片段的两端总落在块外的字母上。
"""
from typing import List, Sequence, Tuple

from src.classify.moves import (
    Cancel,
    CutGlue,
    MoveTrace,
    Relabel,
    apply_word_move,
    find_cancellation,
)
from src.classify.polygon_word import (
    PolygonWord,
    as_polygon_word,
    vertex_classes,
    word_euler_characteristic,
)
from src.config.topology_config import config
from src.errors import InternalInvariantViolation, PreconditionViolation
from src.formats.word_syntax import Letter
from src.utils.labels import fresh_label, petal_labels
from src.utils.log import get_logger

logger = get_logger("Normalizer")

BLOCK_SIZE = 4


def _is_block(window: Sequence[Letter]) -> bool:
    """x y X Y 型的四个字母"""
    (x, sx), (y, sy), (x2, sx2), (y2, sy2) = window
    return x != y and x == x2 and y == y2 and sx == -sx2 and sy == -sy2


def block_mask(letters: Sequence[Letter]) -> List[bool]:
    """从左到右贪心标记已经成形的块"""
    mask = [False] * len(letters)
    i = 0
    while i + BLOCK_SIZE <= len(letters):
        if _is_block(letters[i:i + BLOCK_SIZE]):
            for j in range(i, i + BLOCK_SIZE):
                mask[j] = True
            i += BLOCK_SIZE
        else:
            i += 1
    return mask


def _partner(letters: Sequence[Letter], index: int) -> int:
    label = letters[index][0]
    for j, (other, _) in enumerate(letters):
        if other == label and j != index:
            return j
    raise InternalInvariantViolation(f"标签 {label!r} 只出现一次")


class _Rewriter:
    """按顺序施加字上的移动，并记录、校验每一步"""

    def __init__(self, letters: Sequence[Letter]):
        self.letters: Tuple[Letter, ...] = tuple(letters)
        self.moves = []
        self.chi = word_euler_characteristic(self.letters)
        self.taken = {label for label, _ in self.letters}

    def apply(self, move):
        self.letters = apply_word_move(self.letters, move)
        self.moves.append(move)
        if config.VERIFY_WORD_MOVES:
            chi = word_euler_characteristic(self.letters)
            if chi != self.chi:
                raise InternalInvariantViolation(
                    f"{move.kind} 把欧拉示性数从 {self.chi} 变成了 {chi}")

    def fresh(self) -> str:
        label = fresh_label(config.CUT_LABEL_PREFIX, self.taken)
        self.taken.add(label)
        return label


def _cancel_all(rewriter: _Rewriter):
    while True:
        label = find_cancellation(rewriter.letters)
        if label is None:
            return
        rewriter.apply(Cancel(label))


def _gather_block(rewriter: _Rewriter, mask: List[bool]):
    letters = rewriter.letters
    i = mask.index(False)
    p_index = _partner(letters, i)

    q = None
    for j in range(i + 1, p_index):
        if not mask[j] and _partner(letters, j) > p_index:
            q = j
            break
    if q is None:
        raise InternalInvariantViolation(f"字母 {letters[i][0]!r} 没有与之交错的边")

    # p X q Y P Z Q T -> p c P Z Y C X T
    cut = rewriter.fresh()
    rewriter.apply(CutGlue(cut, letters[q][0], start=i + 1, length=p_index - i - 1, sign=1))

    # p c P U C V -> U n c N C V
    letters = rewriter.letters
    c_index = letters.index((cut, -1))
    glue = rewriter.fresh()
    rewriter.apply(CutGlue(glue, letters[i][0], start=i + 2, length=c_index - i - 2, sign=-1))


def _standard_relabel(letters: Sequence[Letter]):
    genus = len(letters) // BLOCK_SIZE
    names = petal_labels(genus)
    mapping = []
    for t in range(genus):
        (x, sx), (y, sy) = letters[BLOCK_SIZE * t], letters[BLOCK_SIZE * t + 1]
        mapping.append((x, names[2 * t], sx))
        mapping.append((y, names[2 * t + 1], sy))
    if all(old == new and sign == 1 for old, new, sign in mapping):
        return None
    return Relabel(tuple(mapping))


def normalize(word) -> Tuple[PolygonWord, MoveTrace]:
    """把多边形字整理成规范形式

    Args:
        word: PolygonWord、字的文本或带符号字母序列

    Returns:
        (规范字, 字上的移动记录)

    Raises:
        MalformedWordError: 字不合法
        PreconditionViolation: 消去相邻互逆对之后商曲面仍有多个顶点类
    """
    word = as_polygon_word(word)
    rewriter = _Rewriter(word.letters)

    _cancel_all(rewriter)
    if rewriter.letters:
        classes = vertex_classes(rewriter.letters)
        if classes != 1:
            raise PreconditionViolation(f"商曲面有 {classes} 个顶点类，需要先约化")

    mask = block_mask(rewriter.letters)
    while not all(mask):
        _gather_block(rewriter, mask)
        mask = block_mask(rewriter.letters)

    relabel = _standard_relabel(rewriter.letters)
    if relabel is not None:
        rewriter.apply(relabel)

    result = PolygonWord(rewriter.letters)
    logger.debug("规范化 %s -> %s, %d 步", word, result, len(rewriter.moves))
    return result, MoveTrace(tuple(rewriter.moves))
