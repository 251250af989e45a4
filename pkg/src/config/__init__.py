"""配置模块"""
from .topology_config import config

__all__ = ['config']
