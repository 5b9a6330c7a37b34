"""图的几何表示：阶梯着色、Lam-Williams 判据与对称网格"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Set, Tuple

from hstrata.core.exceptions import InvalidIndexError, ValidationError
from hstrata.diagrams.reduced_word import Diagram, ReducedWord, check_rank


class Color(str, Enum):
    """格子颜色，序列化为 "b" / "w" """

    BLACK = "b"
    WHITE = "w"


@dataclass(frozen=True)
class CellPosition:
    """字位置在阶梯表与对称网格中的坐标"""

    position: int
    tableau_row: int
    tableau_column: int
    grid_row: int
    grid_column: int
    letter: int


@dataclass(frozen=True)
class StaircaseColoring:
    """阶梯 Young 表着色：第 r 行（最短的为第 1 行）有 r 个格子"""

    n: int
    cells: Tuple[Tuple[Color, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cells) != self.n or any(len(row) != r for r, row in enumerate(self.cells, 1)):
            raise ValidationError(f"Staircase of rank {self.n} needs row r to have r cells")

    def color(self, r: int, m: int) -> Color:
        return self.cells[r - 1][m - 1]

    def is_black(self, r: int, m: int) -> bool:
        return self.cells[r - 1][m - 1] is Color.BLACK

    @classmethod
    def from_black_cells(cls, n: int, black: Iterable[Tuple[int, int]]) -> "StaircaseColoring":
        """由黑格的表坐标 (r, m) 创建，要求 1 ≤ m ≤ r ≤ n"""
        black_set = set(black)
        for r, m in black_set:
            if not 1 <= m <= r <= n:
                raise InvalidIndexError(f"Cell ({r}, {m}) is outside the rank-{n} staircase")
        return cls(
            n,
            tuple(
                tuple(Color.BLACK if (r, m) in black_set else Color.WHITE for m in range(1, r + 1))
                for r in range(1, n + 1)
            ),
        )


@dataclass(frozen=True)
class SymmetricGrid:
    """
    n×n 对称网格

    坐标 (r, c)：行自下而上，列自左而右。阶梯区域为 r + c ≤ n + 1，
    镜像 μ(r, c) = (n+1-c, n+1-r)。
    """

    n: int
    rows: Tuple[Tuple[Color, ...], ...]  # rows[r-1][c-1]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"Rank must be positive, got {self.n}")
        if len(self.rows) != self.n or any(len(row) != self.n for row in self.rows):
            raise ValidationError(f"Grid of rank {self.n} needs {self.n}×{self.n} cells")

    def color(self, r: int, c: int) -> Color:
        return self.rows[r - 1][c - 1]

    def is_black(self, r: int, c: int) -> bool:
        return self.rows[r - 1][c - 1] is Color.BLACK

    def mirror(self, r: int, c: int) -> Tuple[int, int]:
        return self.n + 1 - c, self.n + 1 - r

    def is_symmetric(self) -> bool:
        return all(
            self.color(r, c) is self.color(*self.mirror(r, c))
            for r in range(1, self.n + 1)
            for c in range(1, self.n + 1)
        )

    def black_cells(self) -> Set[Tuple[int, int]]:
        return {
            (r, c)
            for r in range(1, self.n + 1)
            for c in range(1, self.n + 1)
            if self.is_black(r, c)
        }

    def is_all_black_row(self, r: int) -> bool:
        return all(cell is Color.BLACK for cell in self.rows[r - 1])

    @classmethod
    def from_black_cells(cls, n: int, black: Iterable[Tuple[int, int]]) -> "SymmetricGrid":
        """由黑格坐标创建（不补镜像，调用方负责对称性）"""
        black_set = set(black)
        for r, c in black_set:
            if not (1 <= r <= n and 1 <= c <= n):
                raise InvalidIndexError(f"Cell ({r}, {c}) is outside the {n}×{n} grid")
        return cls(
            n,
            tuple(
                tuple(Color.BLACK if (r, c) in black_set else Color.WHITE for c in range(1, n + 1))
                for r in range(1, n + 1)
            ),
        )

    def render_ascii(self) -> List[str]:
        """顶行在前，'#' 为黑，'.' 为白"""
        return [
            "".join("#" if cell is Color.BLACK else "." for cell in self.rows[r - 1])
            for r in range(self.n, 0, -1)
        ]


def position_to_cell(n: int, k: int) -> CellPosition:
    """
    字位置 k 到格子的换算

    表行 r 满足 r(r-1)/2 < k ≤ r(r+1)/2，列 m = k - r(r-1)/2；
    网格坐标为 (n+1-r, m)，字母 i_k = n - r + m。
    """
    t = n * (n + 1) // 2
    if not 1 <= k <= t:
        raise InvalidIndexError(f"Position {k} outside [1, {t}]")
    r = 1
    while r * (r + 1) // 2 < k:
        r += 1
    m = k - r * (r - 1) // 2
    return CellPosition(k, r, m, n + 1 - r, m, n - r + m)


def cell_to_position(r: int, m: int) -> int:
    """表坐标 (r, m) 对应的字位置"""
    return r * (r - 1) // 2 + m


def is_cauchon_lw(s: StaircaseColoring) -> bool:
    """
    Lam-Williams 判据

    (1) 黑格 (r, m) 的上方同列有白格时，同行左侧全黑；
    (2) 对角格 (r, r) 为黑时，同行左侧全黑。
    """
    n = s.n
    for r in range(1, n + 1):
        for m in range(1, r + 1):
            if not s.is_black(r, m):
                continue
            left_all_black = all(s.is_black(r, j) for j in range(1, m))
            if left_all_black:
                continue
            if m == r:
                return False
            if any(not s.is_black(above, m) for above in range(m, r)):
                return False
    return True


def diagram_to_staircase(word: ReducedWord, d: Diagram) -> StaircaseColoring:
    """位置 k 对应的格子为黑当且仅当 k ∈ Δ"""
    check_rank(word, d)
    n = word.n
    rows: List[List[Color]] = [[Color.WHITE] * r for r in range(1, n + 1)]
    for k in d.positions():
        cell = position_to_cell(n, k)
        rows[cell.tableau_row - 1][cell.tableau_column - 1] = Color.BLACK
    return StaircaseColoring(n, tuple(tuple(row) for row in rows))


def staircase_to_diagram(s: StaircaseColoring) -> Diagram:
    """阶梯着色还原为位置子集"""
    return Diagram.from_positions(
        s.n,
        (
            cell_to_position(r, m)
            for r in range(1, s.n + 1)
            for m in range(1, r + 1)
            if s.is_black(r, m)
        ),
    )


def symmetric_grid(s: StaircaseColoring) -> SymmetricGrid:
    """阶梯格嵌入 (n+1-r, m)，其余格子取镜像格的颜色"""
    n = s.n
    grid: List[List[Color]] = [[Color.WHITE] * n for _ in range(n)]
    for r in range(1, n + 1):
        for m in range(1, r + 1):
            grid[n - r][m - 1] = s.color(r, m)
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            if r + c > n + 1:
                grid[r - 1][c - 1] = grid[n - c][n - r]
    return SymmetricGrid(n, tuple(tuple(row) for row in grid))


def grid_to_staircase(g: SymmetricGrid) -> StaircaseColoring:
    """取出网格的阶梯部分"""
    n = g.n
    return StaircaseColoring(
        n, tuple(tuple(g.color(n + 1 - r, m) for m in range(1, r + 1)) for r in range(1, n + 1))
    )
