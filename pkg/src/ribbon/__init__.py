"""带状图核心：数据模型、面与亏格、同构"""
from .ribbon_map import RibbonMap, DartRef, ValidationReport, from_rotation_lists, degree, refine
from .surface import Face, SurfaceReport, trace_faces, euler_characteristic, genus, petal

__all__ = [
    'RibbonMap', 'DartRef', 'ValidationReport', 'from_rotation_lists', 'degree', 'refine',
    'Face', 'SurfaceReport', 'trace_faces', 'euler_characteristic', 'genus', 'petal',
]
