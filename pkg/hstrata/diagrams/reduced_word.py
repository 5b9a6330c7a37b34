"""阶梯约化字、Cauchon 判定与剪枝回溯枚举"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, List, Optional, Tuple
import logging

from hstrata.core.exceptions import InvalidDiagramError, RankMismatchError, ValidationError
from hstrata.weyl.signed_permutation import (
    SignedPermutation,
    compose,
    identity,
    is_right_ascent,
    simple_reflection,
    window_ascent,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedWord:
    """w_max^{1..n-1} 的阶梯约化字 s_n (s_{n-1} s_n) ... (s_1 ... s_n)"""

    n: int
    letters: Tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.letters)

    def letter(self, k: int) -> int:
        """位置 k（1 起）上的字母 i_k"""
        return self.letters[k - 1]

    def element(self) -> SignedPermutation:
        """乘积 s_{i_1} ... s_{i_t}"""
        product = identity(self.n)
        for i in self.letters:
            product = compose(product, simple_reflection(self.n, i))
        return product


@dataclass(frozen=True)
class Diagram:
    """字位置的子集 Δ ⊆ [t]，以位掩码存储：第 k-1 位 ⇔ k ∈ Δ"""

    n: int
    members: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidDiagramError(f"Rank must be positive, got {self.n}")
        if self.members < 0 or self.members >> self.t:
            raise InvalidDiagramError(
                f"Bitmask {self.members:#x} exceeds the {self.t} positions of rank {self.n}"
            )

    @property
    def t(self) -> int:
        return self.n * (self.n + 1) // 2

    def __contains__(self, k: object) -> bool:
        if not isinstance(k, int) or not 1 <= k <= self.t:
            return False
        return bool(self.members >> (k - 1) & 1)

    def positions(self) -> List[int]:
        return [k for k in range(1, self.t + 1) if k in self]

    def to_hex(self) -> str:
        """小端位掩码的小写十六进制，例如 n=2, Δ={2,3} -> "6" """
        return format(self.members, "x")

    @classmethod
    def from_hex(cls, n: int, text: str) -> "Diagram":
        """从十六进制解析"""
        try:
            members = int(text, 16)
        except ValueError:
            raise InvalidDiagramError(f"Not a hexadecimal bitmask: '{text}'")
        return cls(n, members)

    @classmethod
    def from_positions(cls, n: int, positions: Iterable[int]) -> "Diagram":
        """从位置集合创建"""
        t = n * (n + 1) // 2
        members = 0
        for k in positions:
            if not 1 <= k <= t:
                raise InvalidDiagramError(f"Position {k} outside [1, {t}]")
            members |= 1 << (k - 1)
        return cls(n, members)

    @classmethod
    def full(cls, n: int) -> "Diagram":
        return cls(n, (1 << (n * (n + 1) // 2)) - 1)


@dataclass(frozen=True)
class Prefix:
    """DFS 前缀：已对位置 t, t-1, ..., t-depth+1 作出选择"""

    depth: int
    members: int


# 叶子访问回调：(Δ, w^Δ)
Visitor = Callable[[Diagram, SignedPermutation], None]


@lru_cache(maxsize=None)
def build_reduced_word(n: int) -> ReducedWord:
    """
    构建阶梯约化字

    第 r 行（r = 1..n）依次贡献 s_{n-r+1}, ..., s_n。

    Args:
        n: 秩

    Returns:
        长度 t = n(n+1)/2 的约化字
    """
    if n < 1:
        raise ValidationError(f"Rank must be positive, got {n}")
    letters: List[int] = []
    for r in range(1, n + 1):
        letters.extend(range(n - r + 1, n + 1))
    return ReducedWord(n, tuple(letters))


def check_rank(word: ReducedWord, d: Diagram) -> None:
    if word.n != d.n:
        raise RankMismatchError(f"Diagram rank {d.n} does not match word rank {word.n}")


def _apply_letter(window: List[int], i: int, n: int) -> None:
    """原地右乘 s_i（对合，再调用一次即撤销）"""
    if i < n:
        window[i - 1], window[i] = window[i], window[i - 1]
    else:
        window[n - 1] = -window[n - 1]


def _inverse_window(window: List[int]) -> Tuple[int, ...]:
    result = [0] * len(window)
    for i, v in enumerate(window, 1):
        result[abs(v) - 1] = i if v > 0 else -i
    return tuple(result)


def first_cauchon_failure(word: ReducedWord, d: Diagram) -> Optional[int]:
    """
    自右向左扫描，返回第一个上升判定失败的位置 k

    无论 k 是否属于 Δ，每一步都要求 v 在 i_k 处上升。

    Returns:
        失败位置 k；Δ 为 Cauchon 图时返回 None
    """
    check_rank(word, d)
    v = identity(word.n)
    for k in range(word.t, 0, -1):
        i = word.letter(k)
        if not is_right_ascent(v, i):
            return k
        if k in d:
            v = compose(v, simple_reflection(word.n, i))
    return None


def is_cauchon(word: ReducedWord, d: Diagram) -> bool:
    """Cauchon 图判定"""
    return first_cauchon_failure(word, d) is None


def v_delta(word: ReducedWord, d: Diagram) -> SignedPermutation:
    """v^Δ = s_{i_t}^Δ ... s_{i_1}^Δ，即扫描结束时的状态"""
    check_rank(word, d)
    window = list(range(1, word.n + 1))
    for k in range(word.t, 0, -1):
        if k in d:
            _apply_letter(window, word.letter(k), word.n)
    return SignedPermutation(word.n, tuple(window))


def w_delta(word: ReducedWord, d: Diagram) -> SignedPermutation:
    """w^Δ = s_{i_1}^Δ ... s_{i_t}^Δ，由 v^Δ 取逆得到（每个因子都是对合）"""
    v = v_delta(word, d)
    return SignedPermutation(word.n, _inverse_window(list(v.window)))


def enumerate_prefixes(word: ReducedWord, depth: int) -> List[Prefix]:
    """
    按规范顺序（先排除后包含）列出深度为 depth 的存活前缀

    每个前缀对应 DFS 树的一棵子树，可以分发给不同的 worker。
    """
    depth = max(0, min(depth, word.t))
    n = word.n
    window = list(range(1, n + 1))
    prefixes: List[Prefix] = []

    def descend(k: int, members: int) -> None:
        if word.t - k == depth:
            prefixes.append(Prefix(depth, members))
            return
        letter = word.letters[k - 1]
        if not window_ascent(window, letter, n):
            return
        descend(k - 1, members)
        _apply_letter(window, letter, n)
        descend(k - 1, members | 1 << (k - 1))
        _apply_letter(window, letter, n)

    descend(word.t, 0)
    logger.debug(f"Rank {n}: {len(prefixes)} live prefixes at depth {depth}")
    return prefixes


def enumerate_cauchon(
    word: ReducedWord, visitor: Optional[Visitor] = None, prefix: Optional[Prefix] = None
) -> int:
    """
    深度优先枚举全部 Cauchon 图

    从位置 t 向 1 处理；某位置上升判定失败时剪掉整棵子树，否则先走排除分支再走包含分支。
    判定使用窗口判据 window_ascent，它与根像判据等价。

    Args:
        word: 阶梯约化字
        visitor: 叶子回调 (Δ, w^Δ)，为 None 时只计数
        prefix: 只枚举该前缀下的子树

    Returns:
        访问到的叶子数
    """
    n = word.n
    letters = word.letters
    window = list(range(1, n + 1))
    start, members = word.t, 0
    if prefix is not None:
        members = prefix.members
        for k in range(word.t, word.t - prefix.depth, -1):
            if members >> (k - 1) & 1:
                _apply_letter(window, letters[k - 1], n)
        start = word.t - prefix.depth

    def descend(k: int, mask: int) -> int:
        if k == 0:
            if visitor is not None:
                visitor(Diagram(n, mask), SignedPermutation(n, _inverse_window(window)))
            return 1
        letter = letters[k - 1]
        if not window_ascent(window, letter, n):
            return 0
        count = descend(k - 1, mask)
        _apply_letter(window, letter, n)
        count += descend(k - 1, mask | 1 << (k - 1))
        _apply_letter(window, letter, n)
        return count

    return descend(start, members)


def collect_cauchon(word: ReducedWord) -> List[Diagram]:
    """按规范顺序收集全部 Cauchon 图"""
    diagrams: List[Diagram] = []
    enumerate_cauchon(word, lambda d, _: diagrams.append(d))
    return diagrams


def naive_cauchon_scan(word: ReducedWord) -> List[Diagram]:
    """对全部 2^t 个子集逐一判定（剪枝枚举的对照）"""
    return [
        d for d in (Diagram(word.n, mask) for mask in range(1 << word.t)) if is_cauchon(word, d)
    ]
