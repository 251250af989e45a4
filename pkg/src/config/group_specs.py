"""
群描述配置
定义命令行 --group 参数可用的几类群
"""

GROUP_SPECS = {
    "free": {
        "name": "自由群",
        "syntax": "free:k",
        "needs_parameter": True,
        "min_parameter": 0,
        "description": "k 个生成元的自由群，没有关系子",
    },
    "surface": {
        "name": "曲面群",
        "syntax": "surface:g",
        "needs_parameter": True,
        "min_parameter": 0,
        "description": "亏格 g 曲面的基本群 A_g，单个关系子 a b A B c d C D ...",
    },
    "zxz": {
        "name": "Z×Z",
        "syntax": "zxz",
        "needs_parameter": False,
        "min_parameter": None,
        "description": "<a,b | abAB>，即环面的基本群",
    },
}


def get_group_spec(kind: str) -> dict:
    """获取群描述配置，不存在时返回 None"""
    return GROUP_SPECS.get(kind)


def get_group_spec_names() -> list:
    """获取所有群描述的语法（用于帮助信息）"""
    return [spec["syntax"] for spec in GROUP_SPECS.values()]
