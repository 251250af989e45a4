"""
结果编码：把报告、分类结果、群表示和 Cayley 球转成可以直接 json.dumps 的字典
"""
from __future__ import annotations

from typing import Dict, List

from src.classify.classifier import SPHERE_MARKER, ClassificationResult
from src.formats.word_syntax import format_letters
from src.group.cayley import CayleyBall
from src.group.presentation import Presentation, abelianization_rank
from src.ribbon.ribbon_map import RibbonMap
from src.ribbon.surface import SurfaceReport, trace_faces


def encode_report(report: SurfaceReport) -> Dict:
    return {
        "V": report.V,
        "m": report.m,
        "F": report.F,
        "chi": report.chi,
        "genus": report.genus,
        "faces": [format_letters(word) for word in report.face_words],
    }


def encode_faces(ribbon_map: RibbonMap) -> List[List[str]]:
    """每个面的半边记号序列；S_0 只有一个空面"""
    if ribbon_map.num_edges == 0:
        return [[]]
    return [face.tokens(ribbon_map) for face in trace_faces(ribbon_map)]


def encode_classification(result: ClassificationResult) -> Dict:
    return {
        "genus": result.genus,
        "surface": result.surface_name,
        "canonical_word": SPHERE_MARKER if result.is_sphere else str(result.canonical_word),
        "trace": result.trace.to_list(),
    }


def encode_presentation(presentation: Presentation) -> Dict:
    return {
        "generators": list(presentation.generators),
        "relators": [format_letters(r.letters) for r in presentation.relators],
        "genus": presentation.genus_hint,
        "deficiency": presentation.deficiency,
        "abelianization_rank": abelianization_rank(presentation),
    }


def encode_cayley(ball: CayleyBall) -> Dict:
    return {
        "group": ball.presentation.name,
        "radius": ball.radius,
        "cell_convention": "one cell per (base vertex, relator)",
        "vertices": [format_letters(word.letters) for word in ball.vertices],
        "edges": [{"source": s, "generator": a, "target": t} for s, a, t in ball.edges],
        "cells": [{"base": b, "relator": j, "cycle": list(cycle)} for b, j, cycle in ball.cells],
    }
