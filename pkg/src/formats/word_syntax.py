"""
字的文本语法

- 紧凑写法: "abAB"，每个字符是一个单字母标签，大写表示小写字母的逆，
  字符后面跟 ' 也表示取逆
- 空格分隔写法: "a b A B" 或 "foo bar foo' bar'"，多字符标签的逆用 ' 结尾；
  也接受半边记号 "a+" / "a-"
- 没有空格但整体是一个标签的文本（"e1"、"x1'"、"a+"）按单个字母解析
- "1" 或空串表示空字
"""
import re
from typing import Iterable, List, Optional, Sequence, Tuple

from src.errors import MalformedWordError
from src.utils.labels import LABEL_RE, TOKEN_RE, MINUS, PLUS

Letter = Tuple[str, int]

EMPTY_WORD_TOKENS = ("", "1")

_WHITESPACE = re.compile(r"\s+")


def _parse_spaced_token(token: str, known_labels: Optional[set]) -> Letter:
    dart = TOKEN_RE.match(token)
    if dart is not None:
        label, sign = dart.groups()
        return label, PLUS if sign == "+" else MINUS
    if token.endswith("'"):
        label = token[:-1]
        if not LABEL_RE.match(label):
            raise MalformedWordError(f"无法解析字母 {token!r}")
        return label, MINUS
    if not LABEL_RE.match(token):
        raise MalformedWordError(f"无法解析字母 {token!r}")
    if len(token) == 1 and token.isupper():
        # 已声明的大写标签优先按正向字母理解
        if known_labels is not None and token in known_labels and token.lower() not in known_labels:
            return token, PLUS
        return token.lower(), MINUS
    return token, PLUS


def _is_single_token(text: str, known_labels: Optional[set]) -> bool:
    """没有空格的文本是否整体是一个字母（多字符标签、a+ / a- 记号）"""
    if TOKEN_RE.match(text):
        return True
    label = text[:-1] if text.endswith("'") else text
    if len(label) < 2 or not LABEL_RE.match(label):
        return False
    if known_labels is not None and label in known_labels:
        return True
    return any(char.isdigit() or char == "_" for char in label)


def parse_letters(text: str, known_labels: Optional[Iterable[str]] = None) -> List[Letter]:
    """把文本解析成带符号字母列表

    Args:
        text: 字的文本
        known_labels: 已知标签（可选），用来消解单个大写字母的歧义

    Raises:
        MalformedWordError: 无法解析
    """
    text = (text or "").strip()
    if text in EMPTY_WORD_TOKENS:
        return []
    known = set(known_labels) if known_labels is not None else None

    if _WHITESPACE.search(text):
        return [_parse_spaced_token(token, known) for token in _WHITESPACE.split(text)]
    if _is_single_token(text, known):
        return [_parse_spaced_token(text, known)]

    letters: List[Letter] = []
    for char in text:
        if char == "'":
            if not letters:
                raise MalformedWordError(f"' 前面没有字母: {text!r}")
            label, sign = letters[-1]
            letters[-1] = (label, -sign)
        elif char.isalpha() and char.isascii():
            letters.append(_parse_spaced_token(char, known))
        else:
            raise MalformedWordError(f"字 {text!r} 中有非法字符 {char!r}")
    return letters


def format_letter(letter: Letter) -> str:
    label, sign = letter
    if sign > 0:
        # 单个大写字母单独写会被读成小写字母的逆
        if len(label) == 1 and label.isupper():
            return f"{label}+"
        return label
    if len(label) == 1 and label.islower():
        return label.upper()
    return f"{label}'"


def format_letters(letters: Sequence[Letter], compact: bool = False) -> str:
    """带符号字母 -> 文本；空字写成 1"""
    if not letters:
        return "1"
    parts = [format_letter(letter) for letter in letters]
    if compact and all(len(label) == 1 and label.islower() for label, _ in letters):
        return "".join(parts)
    return " ".join(parts)
