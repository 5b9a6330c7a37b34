"""管道梦：对称网格 -> 带符号置换 τ_Δ，轮换分类与层维数"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Tuple

from hstrata.core.exceptions import AsymmetricGridError, NotCauchonError, ValidationError
from hstrata.diagrams.grid import Color, SymmetricGrid, diagram_to_staircase, symmetric_grid
from hstrata.diagrams.reduced_word import (
    Diagram,
    ReducedWord,
    first_cauchon_failure,
    w_delta,
)
from hstrata.weyl.signed_permutation import SignedPermutation, compose, inverse

# 管道进入格子的边
_FROM_BOTTOM = 0
_FROM_RIGHT = 1


class CycleKind(str, Enum):
    """轮换类型：A 不动点对，B 镜像成对的轮换，C 自镜像轮换"""

    A = "a"
    B = "b"
    C = "c"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class PipeEndpoints:
    """管道端点映射 τ_Δ"""

    tau: SignedPermutation

    @property
    def n(self) -> int:
        return self.tau.n

    def cycle_notation(self) -> str:
        return self.tau.cycle_notation()


@dataclass(frozen=True)
class GroupedCycle:
    """分组后的轮换"""

    kind: CycleKind
    support: FrozenSet[int]
    size: int
    representative: Tuple[int, ...]

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.size % 2 == 0 else Parity.ODD

    @property
    def contributes(self) -> bool:
        return (self.kind is CycleKind.B and self.parity is Parity.EVEN) or (
            self.kind is CycleKind.C and self.parity is Parity.ODD
        )

    def notation(self) -> str:
        """B 类同时写出镜像轮换"""
        if self.kind is CycleKind.A:
            return f"({self.representative[0]})({-self.representative[0]})"
        text = "(" + " ".join(str(v) for v in self.representative) + ")"
        if self.kind is CycleKind.B:
            text += "(" + " ".join(str(-v) for v in self.representative) + ")"
        return text

    def to_dict(self) -> Dict:
        """转换为字典"""
        return {
            "kind": self.kind.value,
            "cycle": self.notation(),
            "size": str(self.size),
            "parity": self.parity.value,
            "contributes": self.contributes,
        }


@dataclass
class CycleClassification:
    """τ_Δ 的分组轮换与维数"""

    cycles: List[GroupedCycle] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return sum(1 for cycle in self.cycles if cycle.contributes)

    def count(self, kind: CycleKind) -> int:
        return sum(1 for cycle in self.cycles if cycle.kind is kind)


def _trace(g: SymmetricGrid, row: int, col: int, entering: int) -> int:
    """
    沿管道走到边界

    白格：下进左出，右进上出；黑格：直穿。
    左边界第 r 行给出 r，上边界第 c 列给出 -(n+1-c)。
    """
    n = g.n
    rows = g.rows
    while True:
        black = rows[row - 1][col - 1] is Color.BLACK
        if entering == _FROM_RIGHT:
            go_left = black
        else:
            go_left = not black
        if go_left:
            col -= 1
            if col == 0:
                return row
            entering = _FROM_RIGHT
        else:
            row += 1
            if row > n:
                return -(n + 1 - col)
            entering = _FROM_BOTTOM


def trace_pipes(g: SymmetricGrid) -> Dict[int, int]:
    """
    追踪全部 2n 条管道

    标签 i ∈ [n] 从第 i 行右边进入，标签 -j 从标记为 -j 的列（第 n+1-j 列）底边进入。
    """
    n = g.n
    endpoints: Dict[int, int] = {}
    for i in range(1, n + 1):
        endpoints[i] = _trace(g, i, n, _FROM_RIGHT)
    for j in range(1, n + 1):
        endpoints[-j] = _trace(g, 1, n + 1 - j, _FROM_BOTTOM)
    return endpoints


def tau(g: SymmetricGrid) -> PipeEndpoints:
    """对称网格的管道梦置换 τ_Δ"""
    if not g.is_symmetric():
        raise AsymmetricGridError(f"Grid {g.render_ascii()} is not mirror symmetric")
    endpoints = trace_pipes(g)
    n = g.n
    for i in range(1, n + 1):
        if endpoints[-i] != -endpoints[i]:
            raise ValidationError(
                f"Pipe endpoints break τ(-i) = -τ(i) at i={i}: {endpoints[i]}, {endpoints[-i]}"
            )
    return PipeEndpoints(SignedPermutation(n, tuple(endpoints[i] for i in range(1, n + 1))))


def _orbit(p: SignedPermutation, start: int) -> Tuple[int, ...]:
    orbit = [start]
    current = p(start)
    while current != start:
        orbit.append(current)
        current = p(current)
    return tuple(orbit)


def classify_cycles(p: PipeEndpoints) -> CycleClassification:
    """
    按 A/B/C 类型分组 τ 的轮换

    正元素从小到大选取代表，B 类以含最小正元素的轮换为代表，
    因此输出是确定的。
    """
    perm = p.tau
    seen = set()
    classification = CycleClassification()
    for i in range(1, perm.n + 1):
        if i in seen:
            continue
        orbit = _orbit(perm, i)
        support = frozenset(orbit)
        if len(orbit) == 1:
            kind, size = CycleKind.A, 1
            support = frozenset((i, -i))
        elif -i in support:
            kind, size = CycleKind.C, len(orbit) // 2
        else:
            kind, size = CycleKind.B, len(orbit)
            support = support | frozenset(-v for v in orbit)
        seen.update(support)
        classification.cycles.append(GroupedCycle(kind, support, size, orbit))
    return classification


def diagram_tau(word: ReducedWord, d: Diagram) -> PipeEndpoints:
    """Δ -> 阶梯着色 -> 对称网格 -> τ_Δ"""
    return tau(symmetric_grid(diagram_to_staircase(word, d)))


def require_cauchon(word: ReducedWord, d: Diagram) -> None:
    """非 Cauchon 图抛出 NotCauchonError，并指明第一个失败位置"""
    k = first_cauchon_failure(word, d)
    if k is not None:
        step = word.t - k + 1
        raise NotCauchonError(
            f"Cauchon condition fails at position {k} (step {step}) for diagram {d.to_hex()}",
            position=k,
            step=step,
        )


def diagram_dimension(word: ReducedWord, d: Diagram) -> int:
    """管道梦维数，调用方保证 Δ 是 Cauchon 图（枚举器内部使用）"""
    return classify_cycles(diagram_tau(word, d)).dimension


def stratum_dimension(word: ReducedWord, d: Diagram) -> int:
    """层维数 = 偶 B 类个数 + 奇 C 类个数"""
    require_cauchon(word, d)
    return diagram_dimension(word, d)


def verify_lemma_tau(word: ReducedWord, d: Diagram) -> bool:
    """检查 τ_Δ = w^Δ w^{-1}"""
    require_cauchon(word, d)
    expected = compose(w_delta(word, d), inverse(word.element()))
    return diagram_tau(word, d).tau == expected
