"""
拓扑工具配置文件
集中管理所有算法参数，避免魔法数字
"""


class TopologyConfig:
    """拓扑工具配置类"""

    # ========== 标签 ==========

    # 合法标签的正则（字母开头，后接字母、数字或下划线）
    LABEL_PATTERN = r"[A-Za-z][A-Za-z0-9_]*"

    # 细分边时两段半边的后缀
    REFINE_TAIL_SUFFIX = "_0"
    REFINE_HEAD_SUFFIX = "_1"

    # 多边形剪切-粘合时新对角线的标签前缀
    CUT_LABEL_PREFIX = "t"

    # 随机生成器插入新边时的标签前缀
    RANDOM_EDGE_PREFIX = "x"

    # 单字母花瓣标签能覆盖的最大亏格（26 个字母 / 2）
    MAX_LETTER_PETAL_GENUS = 13

    # ========== 随机生成 ==========

    # 默认随机种子
    DEFAULT_SEED = 0

    # 默认逆向移动次数
    DEFAULT_RANDOM_MOVES = 10

    # 插入边（逆向消面）相对拆分顶点（逆向消点）的概率
    INSERT_EDGE_PROBABILITY = 0.5

    # ========== 字问题 ==========

    # Dehn 算法最多改写次数（长度严格递减，正常情况下远达不到）
    DEHN_MAX_STEPS = 100000

    # 小消去条件 C'(λ) 的 λ
    SMALL_CANCELLATION_RATIO = 1 / 6

    # ========== Cayley 球 ==========

    # 允许的最大半径
    MAX_CAYLEY_RADIUS = 12

    # ========== 校验 ==========

    # normalize 每一步是否用 word_to_map 的欧拉示性数做校验
    VERIFY_WORD_MOVES = True

    # 分类结果是否与欧拉示性数独立算出的亏格交叉校验
    VERIFY_CLASSIFICATION = True

    # ========== 输出 ==========

    # JSON 缩进
    JSON_INDENT = 2

    # 默认日志级别
    LOG_LEVEL = "WARNING"

    # 日志格式（沿用 [模块名] 前缀的风格）
    LOG_FORMAT = "[%(tag)s] %(message)s"


# 创建全局配置实例（方便导入使用）
config = TopologyConfig()
