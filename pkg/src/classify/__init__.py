"""曲面分类：消面、消点、多边形字与规范化"""
from .moves import Cancel, ContractEdge, CutGlue, DeleteEdge, MoveTrace, Relabel
from .polygon_word import PolygonWord, polygon_word, word_to_map, linked_pairs, is_linked, vertex_classes
from .reduction import contract_edge, delete_face_merging_edge, reduce_to_one_vertex_one_face
from .normalizer import normalize
from .classifier import ClassificationResult, classify, replay

__all__ = [
    'Cancel', 'ContractEdge', 'CutGlue', 'DeleteEdge', 'MoveTrace', 'Relabel',
    'PolygonWord', 'polygon_word', 'word_to_map', 'linked_pairs', 'is_linked', 'vertex_classes',
    'contract_edge', 'delete_face_merging_edge', 'reduce_to_one_vertex_one_face',
    'normalize', 'ClassificationResult', 'classify', 'replay',
]
