"""
图文档加载器 - 读写 JSON 旋转表

文档格式：
    {
      "edges": ["a", "b"],
      "vertices": [{"rotation": ["a+", "b-", "a-", "b+"]}],
      "name": "petal1"
    }
规范序列化按 edges、vertices、name 的顺序输出，两空格缩进，以换行结尾。
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import List, Optional, Union

from src.config.topology_config import config
from src.errors import GraphSyntaxError
from src.ribbon.ribbon_map import RibbonMap, from_rotation_lists, rotation_tokens
from src.utils.log import get_logger

logger = get_logger("GraphLoader")


@dataclass
class GraphDocument:
    """JSON 文档的内存表示"""

    edges: List[str]
    rotations: List[List[str]]
    name: Optional[str] = None
    comment: Optional[str] = None
    extra: dict = field(default_factory=dict)

    def to_map(self) -> RibbonMap:
        return from_rotation_lists(self.edges, self.rotations)

    def to_json_dict(self) -> dict:
        data = {
            "edges": list(self.edges),
            "vertices": [{"rotation": list(rotation)} for rotation in self.rotations],
        }
        if self.name is not None:
            data["name"] = self.name
        if self.comment is not None:
            data["comment"] = self.comment
        return data


def _expect_list_of_strings(value, context: str) -> List[str]:
    if not isinstance(value, list):
        raise GraphSyntaxError(f"应为字符串列表，实际是 {type(value).__name__}", context)
    for i, item in enumerate(value):
        if not isinstance(item, str):
            raise GraphSyntaxError(f"应为字符串，实际是 {item!r}", f"{context}[{i}]")
    return value


def parse_document(document: Union[bytes, str]) -> GraphDocument:
    """
    解析 JSON 文本为 GraphDocument（只检查结构，不检查旋转的合法性）

    Raises:
        GraphSyntaxError: 不是合法的 UTF-8 JSON 或结构不符
    """
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphSyntaxError(f"文档不是 UTF-8 编码: {exc}") from exc
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc

    if not isinstance(data, dict):
        raise GraphSyntaxError("顶层必须是对象")
    for key in ("edges", "vertices"):
        if key not in data:
            raise GraphSyntaxError(f"缺少字段 {key!r}")
    edges = _expect_list_of_strings(data["edges"], "edges")
    if not isinstance(data["vertices"], list):
        raise GraphSyntaxError("vertices 必须是列表", "vertices")

    rotations = []
    for v, vertex in enumerate(data["vertices"]):
        if not isinstance(vertex, dict) or "rotation" not in vertex:
            raise GraphSyntaxError("顶点必须是带 rotation 字段的对象", f"vertices[{v}]")
        rotations.append(_expect_list_of_strings(vertex["rotation"], f"vertices[{v}].rotation"))

    name = data.get("name")
    comment = data.get("comment")
    for key, value in (("name", name), ("comment", comment)):
        if value is not None and not isinstance(value, str):
            raise GraphSyntaxError(f"{key} 必须是字符串", key)
    extra = {k: v for k, v in data.items() if k not in ("edges", "vertices", "name", "comment")}
    return GraphDocument(list(edges), [list(r) for r in rotations], name, comment, extra)


def parse_graph(document: Union[bytes, str]) -> RibbonMap:
    """
    解析并校验图文档

    Raises:
        GraphSyntaxError: 文档结构错误
        RibbonValidationError: 旋转表不合法（带字段上下文）
    """
    return parse_document(document).to_map()


def to_document(ribbon_map: RibbonMap, name: Optional[str] = None) -> GraphDocument:
    return GraphDocument(list(ribbon_map.edge_labels), rotation_tokens(ribbon_map), name)


def serialize_graph(ribbon_map: RibbonMap, name: Optional[str] = None) -> str:
    """规范的 JSON 文本"""
    data = to_document(ribbon_map, name).to_json_dict()
    return json.dumps(data, indent=config.JSON_INDENT, ensure_ascii=False) + "\n"


def load_graph(path: str) -> RibbonMap:
    """从文件加载带状图"""
    with open(path, "rb") as f:
        document = f.read()
    ribbon_map = parse_graph(document)
    logger.debug("加载图 %s: V=%d, m=%d", path, ribbon_map.num_vertices, ribbon_map.num_edges)
    return ribbon_map


def save_graph(ribbon_map: RibbonMap, path: str, name: Optional[str] = None):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_graph(ribbon_map, name))
    logger.info("已保存图 %s", path)


class GraphLoader:
    """图文档目录，按名称或文件名加载"""

    def __init__(self, maps_dir: str = "maps"):
        self.maps_dir = maps_dir

    def get_available_maps(self) -> List[dict]:
        """
        列出目录中所有图文档

        Returns:
            list: 每个文档一个字典（name、filename、filepath），读不了的文档跳过
        """
        maps = []
        if not os.path.isdir(self.maps_dir):
            return maps
        for filename in sorted(os.listdir(self.maps_dir)):
            if not filename.endswith(".json"):
                continue
            filepath = os.path.join(self.maps_dir, filename)
            try:
                with open(filepath, "rb") as f:
                    document = parse_document(f.read())
            except (OSError, GraphSyntaxError) as exc:
                logger.warning("跳过图文档 %s: %s", filename, exc)
                continue
            maps.append({
                "name": document.name or filename[:-len(".json")],
                "filename": filename,
                "filepath": filepath,
            })
        return maps

    def load_map(self, map_name: str) -> RibbonMap:
        """按名称或文件名加载；找不到时抛出 FileNotFoundError"""
        for info in self.get_available_maps():
            if map_name in (info["name"], info["filename"]):
                return load_graph(info["filepath"])
        filename = map_name if map_name.endswith(".json") else f"{map_name}.json"
        return load_graph(os.path.join(self.maps_dir, filename))
