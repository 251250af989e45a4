"""文件格式：图文档、字的语法、DOT 与结果编码"""
from .graph_loader import GraphDocument, GraphLoader, load_graph, parse_graph, serialize_graph
from .word_syntax import format_letters, parse_letters

__all__ = [
    'GraphDocument', 'GraphLoader', 'load_graph', 'parse_graph', 'serialize_graph',
    'format_letters', 'parse_letters',
]
