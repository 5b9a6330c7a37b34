"""B_n 型 Weyl 群：带符号置换"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, List, Sequence, Tuple
import re

from hstrata.core.exceptions import (
    InvalidIndexError,
    InvalidPermutationError,
    RankMismatchError,
)

# 正根的稀疏表示：((下标, 系数), ...)，下标从 1 开始
Root = Tuple[Tuple[int, int], ...]

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


def _sign(value: int) -> int:
    return 1 if value > 0 else -1


@dataclass(frozen=True)
class SignedPermutation:
    """带符号置换（窗口记法 w(1), ..., w(n)）"""

    n: int
    window: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidPermutationError(f"Rank must be positive, got {self.n}")
        if len(self.window) != self.n:
            raise InvalidPermutationError(
                f"Window {self.window} has length {len(self.window)}, expected {self.n}"
            )
        if sorted(abs(v) for v in self.window) != list(range(1, self.n + 1)):
            raise InvalidPermutationError(
                f"|window| is not a permutation of [{self.n}]: {self.window}"
            )

    def __call__(self, i: int) -> int:
        """在 ±[n] 上求值，w(-i) = -w(i)"""
        if i == 0 or abs(i) > self.n:
            raise InvalidIndexError(f"Point {i} outside ±[{self.n}]")
        value = self.window[abs(i) - 1]
        return value if i > 0 else -value

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.window, 1))

    def to_window_string(self) -> str:
        """序列化为逗号分隔的窗口，例如 "1,-2" """
        return ",".join(str(v) for v in self.window)

    @classmethod
    def from_window_string(cls, text: str) -> "SignedPermutation":
        """从 "1,-2" 形式解析"""
        try:
            window = tuple(int(part) for part in text.split(","))
        except ValueError as e:
            raise InvalidPermutationError(f"Cannot parse window '{text}': {e}")
        return cls(len(window), window)

    def cycles(self) -> List[Tuple[int, ...]]:
        """
        ±[n] 上的非平凡轮换

        起点按 1, -1, 2, -2, ..., n, -n 的顺序选取，不动点省略。
        """
        seen = set()
        result = []
        for base in range(1, self.n + 1):
            for start in (base, -base):
                if start in seen:
                    continue
                cycle = [start]
                seen.add(start)
                current = self(start)
                while current != start:
                    cycle.append(current)
                    seen.add(current)
                    current = self(current)
                if len(cycle) > 1:
                    result.append(tuple(cycle))
        return result

    def cycle_notation(self) -> str:
        """标准不相交轮换记法，例如 "(1 -4)(-1 4)(2 3 -2 -3)"；恒等元为 "()" """
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(v) for v in cycle) + ")" for cycle in cycles)

    @classmethod
    def from_cycles(cls, n: int, text: str) -> "SignedPermutation":
        """
        从轮换记法解析

        只给出一对镜像轮换中的一个也可以，另一个由 w(-i) = -w(i) 补全。
        """
        mapping: Dict[int, int] = {}

        def assign(source: int, target: int) -> None:
            if mapping.get(source, target) != target:
                raise InvalidPermutationError(f"Conflicting images for {source} in '{text}'")
            mapping[source] = target

        for body in _CYCLE_PATTERN.findall(text):
            points = [int(token) for token in body.split()]
            for idx, point in enumerate(points):
                if point == 0 or abs(point) > n:
                    raise InvalidPermutationError(f"Point {point} outside ±[{n}] in '{text}'")
                image = points[(idx + 1) % len(points)]
                assign(point, image)
                assign(-point, -image)

        window = tuple(mapping.get(i, i) for i in range(1, n + 1))
        return cls(n, window)


@dataclass(frozen=True)
class SignedPermMatrix:
    """带符号置换矩阵 P_σ：σ(i)=j 时 P[i][j]=1，σ(i)=-j 时 P[i][j]=-1"""

    n: int
    entries: Tuple[Tuple[int, ...], ...]

    def transpose(self) -> "SignedPermMatrix":
        return SignedPermMatrix(self.n, tuple(zip(*self.entries)))

    def __matmul__(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        if self.n != other.n:
            raise RankMismatchError(f"Matrix sizes differ: {self.n} vs {other.n}")
        columns = list(zip(*other.entries))
        result = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in columns) for row in self.entries
        )
        return SignedPermMatrix(self.n, result)

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


def identity(n: int) -> SignedPermutation:
    """秩 n 的恒等元"""
    if n < 1:
        raise InvalidPermutationError(f"Rank must be positive, got {n}")
    return SignedPermutation(n, tuple(range(1, n + 1)))


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """复合 (a∘b)(i) = a(b(i))"""
    if a.n != b.n:
        raise RankMismatchError(f"Cannot compose ranks {a.n} and {b.n}")
    return SignedPermutation(a.n, tuple(a(v) for v in b.window))


def inverse(w: SignedPermutation) -> SignedPermutation:
    """逆元"""
    window = [0] * w.n
    for i, v in enumerate(w.window, 1):
        window[abs(v) - 1] = i if v > 0 else -i
    return SignedPermutation(w.n, tuple(window))


def simple_reflection(n: int, i: int) -> SignedPermutation:
    """
    单反射 s_i

    i < n 时交换窗口第 i, i+1 位；i = n 时对第 n 位取负（α_n = e_n 为短单根）。
    """
    if not 1 <= i <= n:
        raise InvalidIndexError(f"Simple reflection index {i} outside [1, {n}]")
    window = list(range(1, n + 1))
    if i < n:
        window[i - 1], window[i] = window[i], window[i - 1]
    else:
        window[n - 1] = -n
    return SignedPermutation(n, tuple(window))


def longest_element(n: int) -> SignedPermutation:
    """最长元 w_0 = (-1, -2, ..., -n)"""
    return SignedPermutation(n, tuple(-i for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def positive_roots(n: int) -> Tuple[Root, ...]:
    """B_n 的 n² 个正根：e_a，e_a - e_b 与 e_a + e_b（a < b）"""
    roots: List[Root] = [((a, 1),) for a in range(1, n + 1)]
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            roots.append(((a, 1), (b, -1)))
            roots.append(((a, 1), (b, 1)))
    return tuple(roots)


def simple_root(n: int, i: int) -> Root:
    """单根 α_i = e_i - e_{i+1}（i < n），α_n = e_n"""
    if not 1 <= i <= n:
        raise InvalidIndexError(f"Simple root index {i} outside [1, {n}]")
    if i < n:
        return ((i, 1), (i + 1, -1))
    return ((n, 1),)


def root_image_is_positive(w: SignedPermutation, root: Root) -> bool:
    """w·e_k = sign(w(k)) e_{|w(k)|}；根为正当且仅当首个非零坐标为正"""
    image = sorted((abs(w.window[k - 1]), c * _sign(w.window[k - 1])) for k, c in root)
    return image[0][1] > 0


def is_right_ascent(w: SignedPermutation, i: int) -> bool:
    """ℓ(w·s_i) = ℓ(w) + 1，当且仅当 w(α_i) 为正根"""
    return root_image_is_positive(w, simple_root(w.n, i))


def window_ascent(window: Sequence[int], i: int, n: int) -> bool:
    """
    is_right_ascent 的窗口判据

    i < n：w(i) 在全序 1 < 2 < ... < n < -n < ... < -1 中排在 w(i+1) 之前；
    i = n：w(n) > 0。
    """
    if i == n:
        return window[n - 1] > 0
    a, b = window[i - 1], window[i]
    key_a = a if a > 0 else 2 * n + 1 + a
    key_b = b if b > 0 else 2 * n + 1 + b
    return key_a < key_b


def length(w: SignedPermutation) -> int:
    """长度：被 w 变为负根的正根个数"""
    return sum(1 for root in positive_roots(w.n) if not root_image_is_positive(w, root))


def descent_length(w: SignedPermutation) -> int:
    """贪心下降约化到恒等元所用步数（length 的交叉校验）"""
    steps = 0
    current = w
    while True:
        for i in range(1, w.n + 1):
            if not is_right_ascent(current, i):
                current = compose(current, simple_reflection(w.n, i))
                steps += 1
                break
        else:
            return steps


def matrix_rep(w: SignedPermutation) -> SignedPermMatrix:
    """带符号置换矩阵 P_w"""
    rows = []
    for value in w.window:
        row = [0] * w.n
        row[abs(value) - 1] = _sign(value)
        rows.append(tuple(row))
    return SignedPermMatrix(w.n, tuple(rows))


def reflections(n: int) -> List[SignedPermutation]:
    """B_n 的 n² 个反射，与正根一一对应"""
    result = []
    for root in positive_roots(n):
        window = list(range(1, n + 1))
        if len(root) == 1:
            (a, _), = root
            window[a - 1] = -a
        else:
            (a, _), (b, cb) = root
            if cb < 0:
                window[a - 1], window[b - 1] = b, a
            else:
                window[a - 1], window[b - 1] = -b, -a
        result.append(SignedPermutation(n, tuple(window)))
    return result


def all_elements(n: int) -> List[SignedPermutation]:
    """群的全部 2^n·n! 个元素（仅用于小秩的穷举检查）"""
    elements = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            elements.append(SignedPermutation(n, tuple(s * v for s, v in zip(signs, perm))))
    return elements
