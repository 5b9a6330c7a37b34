"""
计数级数

Stirling / Fubini 数，连通分量权重级数 D(x,t)，
以及 H(x,t) = exp(D) = (e^x / (2 - e^x))^{(t+1)/2} 和由它导出的层计数。
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Optional, Tuple
import logging

from hstrata.core.exceptions import InvalidIndexError, TruncationError, ValidationError, VerificationError
from hstrata.core.models import DimensionHistogram, PrimitiveRatioRow
from hstrata.series.egf import (
    EgfSeries,
    series_exp,
    series_log,
    series_mul,
    series_pow,
    series_reciprocal,
)
from hstrata.series.polynomial import PolyT, Scalar

logger = logging.getLogger(__name__)

# λ = (t + 1) / 2
LAMBDA = PolyT((Fraction(1, 2), Fraction(1, 2)))


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    previous = _stirling_row(n - 1) + (0,)
    return tuple(
        (j * previous[j] if j > 0 else 0) + (previous[j - 1] if j > 0 else 0)
        for j in range(n + 1)
    )


def _check_stirling_args(n: int, j: int) -> None:
    if n < 0 or j < 0 or j > n:
        raise InvalidIndexError(f"Stirling number S({n}, {j}) needs 0 <= j <= n")


def stirling(n: int, j: int) -> int:
    """第二类 Stirling 数，递推 S(n,j) = j·S(n-1,j) + S(n-1,j-1)"""
    _check_stirling_args(n, j)
    return _stirling_row(n)[j]


def stirling_alternating(n: int, j: int) -> int:
    """交错和 S(n,j) = (1/j!) Σ_i (-1)^{j-i} C(j,i) i^n，仅作对照"""
    _check_stirling_args(n, j)
    total = sum((-1) ** (j - i) * comb(j, i) * i**n for i in range(j + 1))
    value = Fraction(total, factorial(j))
    if value.denominator != 1:
        raise VerificationError(f"Alternating sum for S({n}, {j}) is not an integer: {value}")
    return value.numerator


def fubini(n: int) -> int:
    """有序集合划分数 Σ_j S(n,j)·j!"""
    if n < 0:
        raise InvalidIndexError(f"Fubini number needs n >= 0, got {n}")
    return sum(s * factorial(j) for j, s in enumerate(_stirling_row(n)))


def two_minus_exp(order: int) -> EgfSeries:
    """2 - e^x"""
    return EgfSeries.one(order).scale(2) - EgfSeries.exp_x(order)


def d_series_combinatorial(order: int) -> EgfSeries:
    """
    按分量类型直接求和

    d_n = [n = 1] + Σ_j (j-1)!·S(n,j)·(t 若 n+j 为偶数，否则 1)；
    单独的 x 项对应 n = 1 时的不动点对。
    """
    coeffs: List[PolyT] = [PolyT()]
    for n in range(1, order + 1):
        even = 0
        odd = 0
        for j in range(1, n + 1):
            weight = factorial(j - 1) * stirling(n, j)
            if (n + j) % 2 == 0:
                even += weight
            else:
                odd += weight
        if n == 1:
            odd += 1
        coeffs.append(PolyT((odd, even)))
    return EgfSeries(order, tuple(coeffs))


def d_series_closed(order: int) -> EgfSeries:
    """D = λ·(x - log(2 - e^x))"""
    return (EgfSeries.x(order) - series_log(two_minus_exp(order))).scale(LAMBDA)


@lru_cache(maxsize=None)
def D_series(order: int, verify: bool = False) -> EgfSeries:
    """
    连通分量权重级数 D(x, t)

    Args:
        order: 截断阶
        verify: 为 True 时同时计算组合求和并逐项比较

    Returns:
        闭式计算的 D(x, t)

    Raises:
        VerificationError: 两种算法的系数不一致
    """
    if order < 0:
        raise ValidationError(f"Series order must be non-negative, got {order}")
    closed = d_series_closed(order)
    if verify:
        combinatorial = d_series_combinatorial(order)
        for n in range(order + 1):
            if closed.coeffs[n] != combinatorial.coeffs[n]:
                raise VerificationError(
                    f"D(x,t) disagrees at x^{n}/{n}!",
                    {
                        "n": str(n),
                        "expected": closed.coeffs[n].to_json(),
                        "actual": combinatorial.coeffs[n].to_json(),
                    },
                )
        logger.debug(f"D(x,t) closed form matches the component sum to order {order}")
    return closed


@lru_cache(maxsize=None)
def _h_series(order: int, t: Optional[Fraction]) -> EgfSeries:
    d = D_series(order)
    if t is not None:
        d = d.specialize(t)
    logger.debug(f"Computing H(x,t) to order {order}" + (f" at t={t}" if t is not None else ""))
    return series_exp(d)


def H_series(order: int, t: Optional[Scalar] = None) -> EgfSeries:
    """
    H(x, t) = exp(D(x, t))

    给定 t 时先把 D 在该点求值，得到常数系数级数，高阶比例研究走这条路径。
    """
    return _h_series(order, None if t is None else Fraction(t))


def H_series_closed(order: int, t: Optional[Scalar] = None) -> EgfSeries:
    """独立路径：(e^x · (2 - e^x)^{-1})^λ"""
    base = series_mul(EgfSeries.exp_x(order), series_reciprocal(two_minus_exp(order)))
    exponent = LAMBDA if t is None else LAMBDA(Fraction(t))
    return series_pow(base, exponent)


def _resolve_order(n: int, order: Optional[int]) -> int:
    if n < 0:
        raise InvalidIndexError(f"Rank must be non-negative, got {n}")
    order = n if order is None else order
    if n > order:
        raise TruncationError(f"Rank {n} exceeds truncation order {order}")
    return order


def strata_polynomial(n: int, order: Optional[int] = None) -> PolyT:
    """p_n(t)：t^d 的系数是 d 维层的个数"""
    return H_series(_resolve_order(n, order)).coefficient(n)


def _specialized(n: int, t: int, order: Optional[int]) -> int:
    value = H_series(_resolve_order(n, order), t=t).coefficient(n).constant_term
    if value.denominator != 1:
        raise VerificationError(f"H({t}) coefficient {n} is not an integer: {value}")
    return value.numerator


def totals(n: int, order: Optional[int] = None) -> int:
    """p_n(1)，全部 H-素理想个数"""
    return _specialized(n, 1, order)


def primitive_count(n: int, order: Optional[int] = None) -> int:
    """p_n(0)，本原理想个数"""
    return _specialized(n, 0, order)


def primitive_ratio(n: int, order: Optional[int] = None) -> Fraction:
    """p_n(0) / p_n(1)"""
    return Fraction(primitive_count(n, order), totals(n, order))


def primitive_ratio_rows(max_n: int, order: Optional[int] = None) -> List[PrimitiveRatioRow]:
    """n = 1..max_n 的本原比例表，共用同一截断阶"""
    order = _resolve_order(max_n, order)
    return [
        PrimitiveRatioRow(n, totals(n, order), primitive_count(n, order))
        for n in range(1, max_n + 1)
    ]


def series_histogram(n: int, order: Optional[int] = None) -> DimensionHistogram:
    """把 p_n(t) 的系数转成维数直方图"""
    coefficients = strata_polynomial(n, order).integer_coefficients()
    return DimensionHistogram(n, {d: c for d, c in enumerate(coefficients) if c})


def component_weight(n: int) -> PolyT:
    """d_n(t)：只含一个分组轮换的秩 n 图的维数加权和"""
    return D_series(_resolve_order(n, None)).coefficient(n)


def inverse_sqrt_series(order: int) -> EgfSeries:
    """(2 - e^x)^{-1/2}"""
    return series_pow(two_minus_exp(order), Fraction(-1, 2))


def inverse_sqrt_coefficient(n: int) -> Fraction:
    """二项式展开给出的系数 Σ_j S(n,j)·j!·C(2j,j)/4^j"""
    if n < 0:
        raise InvalidIndexError(f"Coefficient index must be non-negative, got {n}")
    return sum(
        (Fraction(s * factorial(j) * comb(2 * j, j), 4**j) for j, s in enumerate(_stirling_row(n))),
        Fraction(0),
    )


def primitive_upper_bound_series(order: int) -> EgfSeries:
    """e^x · (2 - e^x)^{-1/2}，逐项不小于 Prim(n)"""
    return series_mul(EgfSeries.exp_x(order), inverse_sqrt_series(order))
