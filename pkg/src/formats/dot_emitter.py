"""
DOT 输出：带状图与 Cayley 球
"""
from typing import Optional

from src.formats.word_syntax import format_letters
from src.group.cayley import CayleyBall
from src.ribbon.ribbon_map import RibbonMap
from src.ribbon.surface import trace_faces


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(ribbon_map: RibbonMap, name: Optional[str] = None) -> str:
    """无向图：顶点 v0、v1 ...，每条几何边一条边，面写成注释"""
    lines = [f"graph {_quote(name or 'ribbon')} {{"]
    for v in range(ribbon_map.num_vertices):
        rotation = " ".join(ribbon_map.dart_token(d) for d in ribbon_map.star(v))
        lines.append(f"  v{v};  // rotation: {rotation}" if rotation else f"  v{v};")
    for k, label in enumerate(ribbon_map.edge_labels):
        tail, head = ribbon_map.tail(2 * k), ribbon_map.head(2 * k)
        lines.append(f"  v{tail} -- v{head} [label={_quote(label)}];")
    if ribbon_map.num_edges:
        for i, face in enumerate(trace_faces(ribbon_map)):
            lines.append(f"  // face {i}: {format_letters(face.letters(ribbon_map))}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_cayley_dot(ball: CayleyBall) -> str:
    """有向图：节点为群元素代表字，边按生成元标注，胞腔写成注释"""
    title = ball.presentation.name or "cayley"
    lines = [
        f"digraph {_quote(title)} {{",
        f"  // radius {ball.radius}, cells recorded once per (base vertex, relator)",
    ]
    for i, word in enumerate(ball.vertices):
        lines.append(f"  n{i} [label={_quote(str(word))}];")
    for source, label, target in ball.edges:
        lines.append(f"  n{source} -> n{target} [label={_quote(label)}];")
    for base, relator, cycle in ball.cells:
        lines.append(f"  // cell base n{base} relator {relator}: {' '.join(f'n{v}' for v in cycle)}")
    lines.append("}")
    return "\n".join(lines) + "\n"
