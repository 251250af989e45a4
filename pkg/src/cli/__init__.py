"""命令行分发"""
from .commands import CommandResult, build_parser, dispatch, parse_group_spec

__all__ = ['CommandResult', 'build_parser', 'dispatch', 'parse_group_spec']
