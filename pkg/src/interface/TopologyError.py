from typing import Optional

from .ErrorCode import ErrorCode

class TopologyError(Exception):
    """计算基础异常类"""
    def __init__(self, message: str, error_code: ErrorCode, provenance: Optional[str] = None):
        super().__init__(message)
        self.error_code = error_code
        self.provenance = provenance

class KnotParseError(TopologyError):
    """纽结输入解析相关异常"""
    def __init__(self, message: str, error_code: ErrorCode = ErrorCode.PARSE_BAD_TOKEN, line: Optional[int] = None):
        if line is not None:
            message = f"第 {line} 行: {message}"
        super().__init__(message, error_code, provenance="knot")
        self.line = line

class InvariantViolation(TopologyError):
    """数学不变量被破坏"""
    def __init__(self, message: str, error_code: ErrorCode, provenance: Optional[str] = None):
        super().__init__(message, error_code, provenance)

class SymmetryViolation(InvariantViolation):
    """Laurent 多项式不满足要求的对称性"""
    def __init__(self, message: str, exponent: int):
        super().__init__(message, ErrorCode.INV_SYMMETRY_VIOLATION, provenance="laurent")
        self.exponent = exponent

class InexactDivisionError(InvariantViolation):
    """Laurent 多项式除法不整除"""
    def __init__(self, message: str):
        super().__init__(message, ErrorCode.INV_INEXACT_DIVISION, provenance="laurent")

class VerificationMismatch(InvariantViolation):
    """两个独立算法的结果不一致"""
    def __init__(self, message: str, provenance: Optional[str] = None):
        super().__init__(message, ErrorCode.INV_VERIFY_MISMATCH, provenance)

class LabelMismatchError(InvariantViolation):
    """形式变量标签不一致"""
    def __init__(self, left: str, right: str):
        super().__init__(f"形式变量不一致: {left!r} != {right!r}", ErrorCode.INV_VARIABLE_MISMATCH, provenance="laurent")
        self.left = left
        self.right = right

class ConstructionError(TopologyError):
    """流形构造前提不满足"""
    def __init__(self, message: str, error_code: ErrorCode, provenance: Optional[str] = "manifold"):
        super().__init__(message, error_code, provenance)

class SWUndefinedError(ConstructionError):
    """该流形的 SW 多项式没有被定义"""
    def __init__(self, manifold_name: str):
        super().__init__(f"流形 {manifold_name} 的 SW 多项式未定义", ErrorCode.CONS_SW_UNDEFINED)

class BasicClassError(TopologyError):
    """基本类枚举相关异常"""
    def __init__(self, message: str, error_code: ErrorCode):
        super().__init__(message, error_code, provenance="basicclass")
