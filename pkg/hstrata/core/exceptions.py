"""自定义异常类"""
from typing import Any, Dict, Optional


class HStrataError(Exception):
    """HStrata 基础异常类"""
    pass


class RankMismatchError(HStrataError):
    """秩不一致异常"""
    pass


class InvalidIndexError(HStrataError):
    """下标越界异常"""
    pass


class InvalidPermutationError(HStrataError):
    """非法带符号置换异常"""
    pass


class InvalidDiagramError(HStrataError):
    """非法图（位掩码超出范围、十六进制无法解析等）"""
    pass


class NotCauchonError(HStrataError):
    """Cauchon 条件不满足"""

    def __init__(
        self, message: str, position: Optional[int] = None, step: Optional[int] = None
    ) -> None:
        super().__init__(message)
        # position 是字中的位置 k，step 是自右向左的步数 ℓ = t - k + 1
        self.position = position
        self.step = step


class AsymmetricGridError(HStrataError):
    """网格不满足镜像对称"""
    pass


class SeriesDomainError(HStrataError):
    """级数常数项不满足 exp/log 的前提"""
    pass


class OrderMismatchError(HStrataError):
    """级数截断阶不一致"""
    pass


class TruncationError(HStrataError):
    """请求的系数超出截断阶"""
    pass


class EnumerationCapError(HStrataError):
    """枚举规模超出上限"""
    pass


class ConfigurationError(HStrataError):
    """配置错误异常"""
    pass


class ValidationError(HStrataError):
    """验证错误异常"""
    pass


class VerificationError(HStrataError):
    """不变量校验失败，携带第一个反例"""

    def __init__(self, message: str, counterexample: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.counterexample = counterexample or {}
