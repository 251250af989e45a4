"""
标签工具 - 边标签、半边记号与新标签生成
"""
import re
import string
from typing import Iterable, List, Tuple

from src.config.topology_config import config
from src.errors import InvalidTokenError

LABEL_RE = re.compile(rf"^{config.LABEL_PATTERN}$")

# 半边记号 "a+" / "a-"，也接受 Unicode 减号
TOKEN_RE = re.compile(rf"^({config.LABEL_PATTERN})([+\-−])$")

PLUS = 1
MINUS = -1


def is_valid_label(label: str) -> bool:
    """检查标签是否符合 [A-Za-z][A-Za-z0-9_]*"""
    return isinstance(label, str) and LABEL_RE.match(label) is not None


def parse_dart_token(token: str) -> Tuple[str, int]:
    """把 "a+" 解析成 ("a", +1)

    Raises:
        InvalidTokenError: 记号格式不正确
    """
    if not isinstance(token, str):
        raise InvalidTokenError(f"半边记号必须是字符串: {token!r}")
    match = TOKEN_RE.match(token.strip())
    if match is None:
        raise InvalidTokenError(f"无法解析半边记号 {token!r}")
    label, sign = match.groups()
    return label, PLUS if sign == "+" else MINUS


def format_dart_token(label: str, sign: int) -> str:
    """("a", -1) -> "a-" """
    return f"{label}{'+' if sign > 0 else '-'}"


def petal_labels(genus: int) -> List[str]:
    """花瓣图 Γ_g 的边标签 a_1, b_1, ..., a_g, b_g

    亏格不超过 13 时用单个字母 a, b, c, d, ...，这样字可以写成 abAB；
    更大的亏格用 a1, b1, a2, b2, ...
    """
    if genus <= config.MAX_LETTER_PETAL_GENUS:
        return list(string.ascii_lowercase[:2 * genus])
    labels = []
    for i in range(1, genus + 1):
        labels.extend([f"a{i}", f"b{i}"])
    return labels


def fresh_label(prefix: str, taken: Iterable[str]) -> str:
    """生成一个不在 taken 中的新标签 prefix1, prefix2, ..."""
    taken = set(taken)
    index = 1
    while f"{prefix}{index}" in taken:
        index += 1
    return f"{prefix}{index}"


def suffixed_label(base: str, suffix: str, taken: Iterable[str]) -> str:
    """base+suffix，冲突时继续追加下划线"""
    taken = set(taken)
    candidate = f"{base}{suffix}"
    while candidate in taken:
        candidate += "_"
    return candidate
