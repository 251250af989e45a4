"""
命令行分发

dispatch(argv) 解析参数、执行对应操作并返回 CommandResult，不直接退出进程；
main.py 负责打印和设置退出码。退出码：0 成功，1 领域错误，2 用法错误。
"""
from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from typing import Callable, List, Optional

from src.classify.classifier import classify
from src.config.group_specs import get_group_spec, get_group_spec_names
from src.config.topology_config import config
from src.errors import RibbonError, UsageError
from src.formats.dot_emitter import emit_cayley_dot, emit_dot
from src.formats.graph_loader import load_graph, parse_document, serialize_graph
from src.formats.report_encoder import (
    encode_cayley,
    encode_classification,
    encode_faces,
    encode_presentation,
    encode_report,
)
from src.group.cayley import cayley_ball
from src.group.homotopy import homotopic
from src.group.presentation import (
    DiscretePath,
    Presentation,
    free_group,
    pi1_presentation,
    surface_group,
    zxz_group,
)
from src.group.word_problem import is_trivial_word
from src.ribbon.isomorphism import are_isomorphic
from src.ribbon.ribbon_map import refine, validate_rotation_lists
from src.ribbon.surface import genus, petal, surface_report
from src.utils.log import get_logger, setup_logging
from src.utils.random_map_generator import random_filling_map

logger = get_logger("CLI")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


@dataclass
class CommandResult:
    """命令的退出码和输出文本"""

    exit_code: int
    payload: str

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_OK


class _Parser(argparse.ArgumentParser):
    """解析失败时抛出 UsageError 而不是直接退出"""

    def error(self, message):
        raise UsageError(f"{message} (用 --help 查看用法)")


def parse_group_spec(text: str) -> Presentation:
    """free:k、surface:g 或 zxz

    Raises:
        UsageError: 无法识别的群描述
    """
    kind, _, parameter = text.partition(":")
    spec = get_group_spec(kind)
    if spec is None:
        raise UsageError(f"未知的群描述 {text!r}，可用: {', '.join(get_group_spec_names())}")
    if not spec["needs_parameter"]:
        if parameter:
            raise UsageError(f"{kind} 不带参数")
        return zxz_group()
    try:
        value = int(parameter)
    except ValueError:
        raise UsageError(f"{spec['syntax']} 需要整数参数: {text!r}") from None
    if value < spec["min_parameter"]:
        raise UsageError(f"{spec['syntax']} 的参数至少为 {spec['min_parameter']}")
    return free_group(value) if kind == "free" else surface_group(value)


def _dump(data) -> str:
    return json.dumps(data, indent=config.JSON_INDENT, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------- #
# 子命令
# ---------------------------------------------------------------------- #
def cmd_validate(args) -> CommandResult:
    with open(args.file, "rb") as f:
        document = parse_document(f.read())
    report = validate_rotation_lists(document.edges, document.rotations)
    code = EXIT_OK if report.ok else EXIT_DOMAIN_ERROR
    if args.json:
        issues = [{"code": c, "message": m} for c, m in report.issues]
        return CommandResult(code, _dump({"ok": report.ok, "issues": issues}))
    if report.ok:
        return CommandResult(code, "ok")
    return CommandResult(code, "\n".join(message for _, message in report.issues))


def cmd_faces(args) -> CommandResult:
    faces = encode_faces(load_graph(args.file))
    if args.json:
        return CommandResult(EXIT_OK, _dump({"faces": faces}))
    return CommandResult(EXIT_OK, "\n".join(f"face {i}: {' '.join(face)}" for i, face in enumerate(faces)))


def cmd_genus(args) -> CommandResult:
    value = genus(load_graph(args.file))
    if args.json:
        return CommandResult(EXIT_OK, _dump({"genus": value}))
    return CommandResult(EXIT_OK, f"genus: {value}")


def cmd_report(args) -> CommandResult:
    data = encode_report(surface_report(load_graph(args.file)))
    if args.json:
        return CommandResult(EXIT_OK, _dump(data))
    lines = [f"{key}: {data[key]}" for key in ("V", "m", "F", "chi", "genus")]
    lines.extend(f"face {i}: {word}" for i, word in enumerate(data["faces"]))
    return CommandResult(EXIT_OK, "\n".join(lines))


def cmd_refine(args) -> CommandResult:
    return CommandResult(EXIT_OK, serialize_graph(refine(load_graph(args.file))))


def cmd_classify(args) -> CommandResult:
    data = encode_classification(classify(load_graph(args.file)))
    if args.json:
        return CommandResult(EXIT_OK, _dump(data))
    lines = [
        f"genus: {data['genus']}",
        f"word: {data['canonical_word']}",
        f"moves: {len(data['trace'])}",
    ]
    return CommandResult(EXIT_OK, "\n".join(lines))


def cmd_iso(args) -> CommandResult:
    first, second = load_graph(args.first), load_graph(args.second)
    bijection = are_isomorphic(first, second)
    mapping = None
    if bijection is not None:
        mapping = {first.dart_token(d): second.dart_token(bijection(d)) for d in range(first.num_darts)}
    if args.json:
        return CommandResult(EXIT_OK, _dump({"isomorphic": bijection is not None, "bijection": mapping}))
    if mapping is None:
        return CommandResult(EXIT_OK, "not isomorphic")
    lines = ["isomorphic"] + [f"{src} -> {dst}" for src, dst in mapping.items()]
    return CommandResult(EXIT_OK, "\n".join(lines))


def cmd_pi1(args) -> CommandResult:
    presentation = pi1_presentation(load_graph(args.file), args.base)
    if args.json:
        return CommandResult(EXIT_OK, _dump(encode_presentation(presentation)))
    return CommandResult(EXIT_OK, str(presentation))


def cmd_trivial(args) -> CommandResult:
    presentation = parse_group_spec(args.group)
    result = is_trivial_word(presentation.parse_word(args.word), presentation)
    if args.json:
        return CommandResult(EXIT_OK, _dump({"trivial": result}))
    return CommandResult(EXIT_OK, "true" if result else "false")


def cmd_homotopic(args) -> CommandResult:
    ribbon_map = load_graph(args.file)
    first = DiscretePath.from_word(ribbon_map, args.first, args.base)
    second = DiscretePath.from_word(ribbon_map, args.second, args.base)
    result = homotopic(ribbon_map, args.base, first, second)
    if args.json:
        return CommandResult(EXIT_OK, _dump({"homotopic": result}))
    return CommandResult(EXIT_OK, "true" if result else "false")


def cmd_cayley(args) -> CommandResult:
    ball = cayley_ball(parse_group_spec(args.group), args.radius)
    if args.dot:
        return CommandResult(EXIT_OK, emit_cayley_dot(ball))
    if args.json:
        return CommandResult(EXIT_OK, _dump(encode_cayley(ball)))
    lines = [
        f"vertices: {len(ball.vertices)}",
        f"edges: {len(ball.edges)}",
        f"cells: {len(ball.cells)}",
    ]
    return CommandResult(EXIT_OK, "\n".join(lines))


def cmd_petal(args) -> CommandResult:
    return CommandResult(EXIT_OK, serialize_graph(petal(args.genus), f"petal{args.genus}"))


def cmd_random(args) -> CommandResult:
    ribbon_map = random_filling_map(args.genus, args.moves, args.seed)
    return CommandResult(EXIT_OK, serialize_graph(ribbon_map, f"random_g{args.genus}"))


def cmd_emit_dot(args) -> CommandResult:
    return CommandResult(EXIT_OK, emit_dot(load_graph(args.file)))


# ---------------------------------------------------------------------- #
# 参数解析
# ---------------------------------------------------------------------- #
def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"不是整数: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"必须非负: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="输出 JSON")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="输出调试日志")

    parser = _Parser(prog="ribbon", description="带状图与曲面拓扑工具")
    parser.add_argument("--json", action="store_true", default=False, help="输出 JSON")
    parser.add_argument("--verbose", action="store_true", default=False, help="输出调试日志")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name: str, handler: Callable, help_text: str):
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.set_defaults(handler=handler)
        return command

    for name, handler, help_text in (
        ("validate", cmd_validate, "校验图文档，列出所有问题"),
        ("faces", cmd_faces, "列出所有面"),
        ("genus", cmd_genus, "计算亏格"),
        ("report", cmd_report, "V、m、F、χ、亏格和面"),
        ("refine", cmd_refine, "细分每条边"),
        ("classify", cmd_classify, "约化并给出规范多边形字"),
        ("emit-dot", cmd_emit_dot, "输出 DOT"),
    ):
        add(name, handler, help_text).add_argument("file")

    iso = add("iso", cmd_iso, "判定两个图是否同构")
    iso.add_argument("first")
    iso.add_argument("second")

    pi1 = add("pi1", cmd_pi1, "基本群表示")
    pi1.add_argument("file")
    pi1.add_argument("--base", type=_non_negative, default=0)

    trivial = add("trivial", cmd_trivial, "判定字是否平凡")
    trivial.add_argument("--group", required=True, help=" / ".join(get_group_spec_names()))
    trivial.add_argument("word")

    homotopy = add("homotopic", cmd_homotopic, "判定两条路径是否同伦")
    homotopy.add_argument("file")
    homotopy.add_argument("first")
    homotopy.add_argument("second")
    homotopy.add_argument("--base", type=_non_negative, default=0)

    cayley = add("cayley", cmd_cayley, "Cayley 球")
    cayley.add_argument("--group", required=True, help=" / ".join(get_group_spec_names()))
    cayley.add_argument("--radius", type=_non_negative, required=True)
    cayley.add_argument("--dot", action="store_true")

    petal_cmd = add("petal", cmd_petal, "花瓣图文档")
    petal_cmd.add_argument("genus", type=_non_negative)

    random_cmd = add("random", cmd_random, "随机带状图文档")
    random_cmd.add_argument("--genus", type=_non_negative, required=True)
    random_cmd.add_argument("--moves", type=_non_negative, default=config.DEFAULT_RANDOM_MOVES)
    random_cmd.add_argument("--seed", type=_non_negative, default=config.DEFAULT_SEED)
    return parser


def dispatch(argv: Optional[List[str]] = None) -> CommandResult:
    """解析 argv 并执行子命令"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult(EXIT_USAGE_ERROR, str(exc))
    except SystemExit as exc:
        # --help
        return CommandResult(exc.code or EXIT_OK, "")
    if getattr(args, "handler", None) is None:
        return CommandResult(EXIT_USAGE_ERROR, f"{UsageError.code}: 缺少子命令 (用 --help 查看用法)")

    setup_logging("DEBUG" if args.verbose else None)
    logger.debug("执行 %s", args.command)
    try:
        return args.handler(args)
    except UsageError as exc:
        return CommandResult(EXIT_USAGE_ERROR, str(exc))
    except RibbonError as exc:
        return CommandResult(EXIT_DOMAIN_ERROR, str(exc))
    except ValueError as exc:
        return CommandResult(EXIT_USAGE_ERROR, f"{UsageError.code}: {exc}")
    except OSError as exc:
        return CommandResult(EXIT_DOMAIN_ERROR, f"IOError: 无法读取文件: {exc}")
