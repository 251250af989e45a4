"""
离散路径的同伦判定

两条首尾相同的路径 p1、p2 同伦，当且仅当闭路 p1·p̄2 在 π̂₁ 中平凡。先把闭路
沿生成树投影到 pi1_presentation 上判定；表示不受支持时（亏格 ≥ 2 且有多个
面），把闭路沿分类过程搬运到标准曲面群 A_g 上再判定。
"""
from typing import Optional

from src.classify.classifier import ClassificationResult, classify
from src.classify.moves import Cancel, ContractEdge, CutGlue, DeleteEdge, Relabel, apply_word_move
from src.classify.polygon_word import polygon_word
from src.classify.reduction import contract_edge, delete_edge
from src.errors import EndpointMismatchError, UnsupportedPresentationError
from src.group.presentation import DiscretePath, pi1_presentation, spanning_tree, surface_group
from src.group.word_problem import is_trivial_word
from src.group.words import GroupWord
from src.ribbon.ribbon_map import RibbonMap, involution
from src.ribbon.surface import face_successor
from src.utils.log import get_logger

logger = get_logger("Homotopy")


def _substitute(word: GroupWord, label: str, image: GroupWord) -> GroupWord:
    """把字母 (label, +1) 换成 image，(label, -1) 换成 image 的逆"""
    inverse = image.inverse()
    letters = []
    for letter in word:
        if letter[0] != label:
            letters.append(letter)
        elif letter[1] > 0:
            letters.extend(image.letters)
        else:
            letters.extend(inverse.letters)
    return GroupWord(tuple(letters)).reduced()


def _face_detour(ribbon_map: RibbonMap, label: str) -> GroupWord:
    """边 label 正向半边所在面的其余部分的逆：删边后 e 与它同伦"""
    dart = 2 * ribbon_map.edge_index(label)
    rest = []
    nxt = face_successor(ribbon_map, dart)
    while nxt != dart:
        rest.append(nxt)
        nxt = face_successor(ribbon_map, nxt)
    return GroupWord(tuple(ribbon_map.letter(involution(d)) for d in reversed(rest)))


def transport_loop(ribbon_map: RibbonMap, loop: GroupWord,
                   classification: Optional[ClassificationResult] = None) -> GroupWord:
    """把边标签上的闭路沿分类过程搬运成 surface_group(g) 生成元上的字

    - 删边：e 换成所在面其余部分的逆
    - 收缩：抹掉该边
    - 消去：抹掉该边
    - 剪切-粘合：片段 L q^ε R 换成 n^s 时，q^ε 换成 L⁻¹ n^s R⁻¹
    - 重命名：按映射改名并调整符号
    """
    if classification is None:
        classification = classify(ribbon_map)
    current = ribbon_map
    word = loop.reduced()
    letters = None
    for move in classification.trace:
        if isinstance(move, DeleteEdge):
            word = _substitute(word, move.label, _face_detour(current, move.label))
            current = delete_edge(current, move.label)
            continue
        if isinstance(move, ContractEdge):
            word = _substitute(word, move.label, GroupWord())
            current = contract_edge(current, move.label)
            continue
        if letters is None:
            letters = polygon_word(current).letters
        if isinstance(move, Cancel):
            word = _substitute(word, move.label, GroupWord())
        elif isinstance(move, CutGlue):
            word = _substitute(word, move.old_label, _cut_glue_image(letters, move))
        elif isinstance(move, Relabel):
            table = {old: (new, sign) for old, new, sign in move.mapping}
            word = GroupWord(tuple(
                (table[label][0], sign * table[label][1]) if label in table else (label, sign)
                for label, sign in word))
        letters = apply_word_move(letters, move)
    return word.reduced()


def _cut_glue_image(letters, move: CutGlue) -> GroupWord:
    """旧标签正向字母在剪切-粘合之后的像"""
    end = move.start + move.length
    split = next(i for i in range(move.start, end) if letters[i][0] == move.old_label)
    head = GroupWord(tuple(letters[move.start:split]))
    tail = GroupWord(tuple(letters[split + 1:end]))
    sign = letters[split][1]
    # q^ε = L⁻¹ n^s R⁻¹
    image = head.inverse() * GroupWord(((move.new_label, move.sign),)) * tail.inverse()
    return image if sign > 0 else image.inverse()


def homotopic(ribbon_map: RibbonMap, v0: int, first: DiscretePath, second: DiscretePath) -> bool:
    """判定两条路径是否同伦（端点固定）

    Raises:
        EndpointMismatchError: 两条路径起点或终点不同
        UnsupportedPresentationError: 没有可用的字问题算法
    """
    if first.start != second.start or first.end != second.end:
        raise EndpointMismatchError(
            f"端点不同: {first.start}->{first.end} 与 {second.start}->{second.end}")
    loop = first.concat(second.inverse())
    presentation = pi1_presentation(ribbon_map, v0)
    tree = spanning_tree(ribbon_map, v0)
    projected = tree.project(loop.word(ribbon_map).letters)
    try:
        return is_trivial_word(projected, presentation)
    except UnsupportedPresentationError:
        logger.info("π̂₁ 表示不受支持，改为沿分类过程搬运闭路")
    classification = classify(ribbon_map)
    transported = transport_loop(ribbon_map, loop.word(ribbon_map), classification)
    return is_trivial_word(transported, surface_group(classification.genus))
