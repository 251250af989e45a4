"""
日志工具
沿用 "[模块名] 消息" 的输出风格，但统一走 logging 并写到 stderr，
这样命令行的标准输出只包含结果
"""
import logging
import sys

from src.config.topology_config import config

ROOT_LOGGER_NAME = "ribbon"

_configured = False


class _TagFormatter(logging.Formatter):
    """把 ribbon.Classifier 这样的日志器名缩成 Classifier"""

    def format(self, record):
        record.tag = record.name.rsplit(".", 1)[-1]
        return super().format(record)


def setup_logging(level=None):
    """配置根日志器；重复调用只会调整级别"""
    global _configured
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(_TagFormatter(config.LOG_FORMAT))
        root.addHandler(handler)
        root.propagate = False
        _configured = True
    root.setLevel(level or config.LOG_LEVEL)
    return root


def get_logger(tag: str) -> logging.Logger:
    """获取带模块标签的日志器，例如 get_logger("Classifier")"""
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{tag}")
