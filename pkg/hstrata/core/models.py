"""核心数据模型定义"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from hstrata.core.exceptions import ValidationError


@dataclass
class DimensionHistogram:
    """某个秩下各维数的 Cauchon 图个数"""

    n: int
    counts: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for dim in self.counts:
            if not 0 <= dim <= self.n:
                raise ValidationError(f"Dimension {dim} outside [0, {self.n}] for rank {self.n}")

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, dimension: int, count: int = 1) -> None:
        """记录 count 个维数为 dimension 的图"""
        if not 0 <= dimension <= self.n:
            raise ValidationError(f"Dimension {dimension} outside [0, {self.n}]")
        self.counts[dimension] = self.counts.get(dimension, 0) + count

    def merge(self, other: "DimensionHistogram") -> "DimensionHistogram":
        """逐维相加，满足交换律与结合律"""
        if other.n != self.n:
            raise ValidationError(f"Cannot merge histograms of rank {self.n} and {other.n}")
        merged = DimensionHistogram(self.n, dict(self.counts))
        for dim, count in other.counts.items():
            merged.add(dim, count)
        return merged

    def as_list(self) -> List[int]:
        """按维数 0..n 排列的计数（即 p_n(t) 的系数列表）"""
        return [self.counts.get(d, 0) for d in range(self.n + 1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DimensionHistogram):
            return NotImplemented
        return self.n == other.n and self.as_list() == other.as_list()

    def to_dict(self) -> Dict:
        """转换为字典，整数写成十进制字符串，维数升序"""
        return {
            "n": str(self.n),
            "total": str(self.total),
            "counts": {str(d): str(c) for d, c in sorted(self.counts.items()) if c},
        }


@dataclass
class PrimitiveRatioRow:
    """本原比例表的一行"""

    n: int
    total: int
    primitive: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.primitive, self.total)

    @property
    def decimal(self) -> str:
        """精确舍入到小数点后 6 位（半数进位）"""
        scaled = self.ratio * 10**6
        rounded = int(scaled + Fraction(1, 2))
        return f"{rounded // 10**6}.{rounded % 10**6:06d}"

    def to_dict(self) -> Dict:
        """转换为字典"""
        return {
            "n": str(self.n),
            "total": str(self.total),
            "primitive": str(self.primitive),
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "decimal": self.decimal,
        }


@dataclass
class CheckResult:
    """单项检查结果"""

    name: str
    passed: bool = True
    checked: int = 0
    detail: str = ""
    counterexample: Optional[Dict[str, Any]] = None

    def fail(self, detail: str, counterexample: Dict[str, Any]) -> None:
        """记录失败，只保留第一个反例"""
        if self.passed:
            self.passed = False
            self.detail = detail
            self.counterexample = counterexample

    def to_dict(self) -> Dict:
        """转换为字典"""
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": str(self.checked),
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


@dataclass
class VerificationReport:
    """一个校验套件的结果"""

    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def first_failure(self) -> Optional[CheckResult]:
        return next((check for check in self.checks if not check.passed), None)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_dict(self) -> Dict:
        """转换为字典"""
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }
