"""截断指数生成函数 Σ a_n x^n/n!，系数为 PolyT"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Tuple, Union

from hstrata.core.exceptions import OrderMismatchError, SeriesDomainError, TruncationError
from hstrata.series.polynomial import PolyT, Scalar

Coefficient = Union[PolyT, Scalar]


def _as_poly(value: Coefficient) -> PolyT:
    return value if isinstance(value, PolyT) else PolyT.constant(value)


@lru_cache(maxsize=None)
def _binomial_row(n: int) -> Tuple[int, ...]:
    return tuple(comb(n, k) for k in range(n + 1))


@dataclass(frozen=True)
class EgfSeries:
    """
    截断到 order 阶的 EGF

    coeffs[n] 是 x^n/n! 的系数（EGF 归一化），运算从不读取超过 order 的项。
    """

    order: int
    coeffs: Tuple[PolyT, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order + 1:
            raise OrderMismatchError(
                f"Series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_coefficients(cls, order: int, values: Iterable[Coefficient]) -> "EgfSeries":
        """按 EGF 系数创建，不足补零，多余截断"""
        coeffs = [_as_poly(v) for v in values][: order + 1]
        coeffs.extend(PolyT() for _ in range(order + 1 - len(coeffs)))
        return cls(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "EgfSeries":
        return cls.from_coefficients(order, [])

    @classmethod
    def one(cls, order: int) -> "EgfSeries":
        return cls.from_coefficients(order, [1])

    @classmethod
    def x(cls, order: int) -> "EgfSeries":
        return cls.from_coefficients(order, [0, 1])

    @classmethod
    def exp_x(cls, order: int, scale: Scalar = 1) -> "EgfSeries":
        """e^{scale·x}，EGF 系数为 scale^n"""
        return cls.from_coefficients(order, [Fraction(scale) ** k for k in range(order + 1)])

    def coefficient(self, n: int) -> PolyT:
        """x^n/n! 的系数"""
        if not 0 <= n <= self.order:
            raise TruncationError(f"Coefficient {n} requested from a series of order {self.order}")
        return self.coeffs[n]

    def _check_order(self, other: "EgfSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(f"Series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "EgfSeries") -> "EgfSeries":
        self._check_order(other)
        return EgfSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "EgfSeries":
        return EgfSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "EgfSeries") -> "EgfSeries":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "EgfSeries":
        """逐项乘以 t 的多项式或有理数"""
        return EgfSeries(self.order, tuple(a * factor for a in self.coeffs))

    def __mul__(self, other: "EgfSeries") -> "EgfSeries":
        return series_mul(self, other)

    def specialize(self, value: Scalar) -> "EgfSeries":
        """在 t = value 处求值，得到常数系数级数"""
        return EgfSeries(self.order, tuple(PolyT.constant(a(value)) for a in self.coeffs))


def series_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """EGF 乘法 c_n = Σ C(n,k) a_k b_{n-k}"""
    a._check_order(b)
    coeffs = []
    for n in range(a.order + 1):
        row = _binomial_row(n)
        total = PolyT()
        for k in range(n + 1):
            if a.coeffs[k].is_zero() or b.coeffs[n - k].is_zero():
                continue
            total = total + a.coeffs[k] * b.coeffs[n - k] * row[k]
        coeffs.append(total)
    return EgfSeries(a.order, tuple(coeffs))


def series_exp(s: EgfSeries) -> EgfSeries:
    """
    exp(s)，要求常数项为 0

    由 H' = S'H 得递推 h_n = Σ_{k=1..n} C(n-1,k-1) s_k h_{n-k}。
    """
    if not s.coeffs[0].is_zero():
        raise SeriesDomainError(f"exp needs constant term 0, got {s.coeffs[0]}")
    h = [PolyT.constant(1)]
    for n in range(1, s.order + 1):
        row = _binomial_row(n - 1)
        total = PolyT()
        for k in range(1, n + 1):
            if s.coeffs[k].is_zero():
                continue
            total = total + s.coeffs[k] * h[n - k] * row[k - 1]
        h.append(total)
    return EgfSeries(s.order, tuple(h))


def series_log(s: EgfSeries) -> EgfSeries:
    """
    log(s)，要求常数项为 1

    exp 递推的逆：l_n = s_n - Σ_{k=1..n-1} C(n-1,k-1) l_k s_{n-k}。
    """
    if s.coeffs[0] != PolyT.constant(1):
        raise SeriesDomainError(f"log needs constant term 1, got {s.coeffs[0]}")
    log_coeffs = [PolyT()]
    for n in range(1, s.order + 1):
        row = _binomial_row(n - 1)
        total = s.coeffs[n]
        for k in range(1, n):
            if log_coeffs[k].is_zero() or s.coeffs[n - k].is_zero():
                continue
            total = total - log_coeffs[k] * s.coeffs[n - k] * row[k - 1]
        log_coeffs.append(total)
    return EgfSeries(s.order, tuple(log_coeffs))


def series_pow(s: EgfSeries, exponent: Coefficient) -> EgfSeries:
    """s^λ = exp(λ·log s)，λ 可以是 t 的多项式"""
    return series_exp(series_log(s).scale(exponent))


def series_pow_half_linear(s: EgfSeries, slope: Scalar, intercept: Scalar) -> EgfSeries:
    """s^{(slope·t + intercept)/2}"""
    exponent = PolyT((Fraction(intercept, 2), Fraction(slope, 2)))
    return series_pow(s, exponent)


def series_reciprocal(s: EgfSeries) -> EgfSeries:
    """1/s = exp(-log s)，要求常数项为 1"""
    return series_pow(s, -1)
