"""t 的多项式，系数为任意精度有理数"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class PolyT:
    """p(t) = Σ c_d t^d，常数项在前，无尾随零"""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> "PolyT":
        return cls((value,))

    @classmethod
    def t(cls) -> "PolyT":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """零多项式的次数为 -1"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def __add__(self, other: Union["PolyT", Scalar]) -> "PolyT":
        other = _lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return PolyT(tuple(self.coefficient(d) + other.coefficient(d) for d in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "PolyT":
        return PolyT(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["PolyT", Scalar]) -> "PolyT":
        return self + (-_lift(other))

    def __rsub__(self, other: Scalar) -> "PolyT":
        return _lift(other) - self

    def __mul__(self, other: Union["PolyT", Scalar]) -> "PolyT":
        if not isinstance(other, PolyT):
            if other == 0:
                return PolyT()
            return PolyT(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return PolyT()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return PolyT(tuple(product))

    __rmul__ = __mul__

    def __call__(self, value: Scalar) -> Fraction:
        """Horner 求值"""
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coefficients(self) -> List[int]:
        if not self.is_integral():
            raise ValueError(f"Polynomial {self} has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def to_json(self) -> List[str]:
        """十进制字符串列表，常数项在前；非整数写成 "num/den" """
        if not self.coeffs:
            return ["0"]
        return [str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
                for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                base = "t" if d == 1 else f"t^{d}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms)


def _lift(value: Union[PolyT, Scalar]) -> PolyT:
    return value if isinstance(value, PolyT) else PolyT.constant(value)
