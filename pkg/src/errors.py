"""
统一的异常定义
每个异常都带有稳定的 code 字符串，命令行层据此决定退出码
"""


class RibbonError(Exception):
    """所有领域错误的基类"""

    code = "RibbonError"

    def __init__(self, message="", context=None):
        super().__init__(message)
        self.message = message
        self.context = context

    def with_context(self, context):
        """附加字段上下文（例如 vertices[1].rotation[2]），返回自身便于 raise"""
        self.context = context
        return self

    def __str__(self):
        if self.context:
            return f"{self.code}: {self.message} ({self.context})"
        return f"{self.code}: {self.message}"


# ========== 数据校验 ==========

class RibbonValidationError(RibbonError, ValueError):
    code = "ValidationError"


class DuplicateDartError(RibbonValidationError):
    code = "DuplicateDart"


class MissingDartError(RibbonValidationError):
    code = "MissingDart"


class UnknownLabelError(RibbonValidationError):
    code = "UnknownLabel"


class DuplicateLabelError(RibbonValidationError):
    code = "DuplicateLabel"


class InvalidTokenError(RibbonValidationError):
    code = "InvalidToken"


class IsolatedVertexError(RibbonValidationError):
    code = "IsolatedVertex"


class DisconnectedError(RibbonValidationError):
    code = "Disconnected"


# ========== 运算前置条件 ==========

class IndexOutOfRangeError(RibbonError, IndexError):
    code = "IndexOutOfRange"


class EmptyMapError(RibbonError, ValueError):
    code = "EmptyMap"


class LoopNotContractibleError(RibbonError, ValueError):
    code = "LoopNotContractible"


class PreconditionViolation(RibbonError, ValueError):
    code = "PreconditionViolation"


class MalformedWordError(RibbonError, ValueError):
    code = "MalformedWord"


class UnsupportedPresentationError(RibbonError):
    code = "UnsupportedPresentation"


class UnknownGeneratorError(RibbonError, ValueError):
    code = "UnknownGenerator"


class EndpointMismatchError(RibbonError, ValueError):
    code = "EndpointMismatch"


class InternalInvariantViolation(RibbonError):
    """内部不变量被破坏，说明实现有 bug"""

    code = "InternalInvariantViolation"


# ========== 文件与命令行 ==========

class GraphSyntaxError(RibbonError, ValueError):
    code = "SyntaxError"


class UsageError(RibbonError):
    code = "UsageError"
