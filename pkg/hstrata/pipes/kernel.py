"""精确核维数：ker(I + P_τ) 的无分数整数消元"""
from math import gcd
from typing import List, Sequence

from hstrata.pipes.pipe_dreams import PipeEndpoints
from hstrata.weyl.signed_permutation import matrix_rep


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    """
    整数矩阵在有理数域上的秩

    行变换 row_i <- row_i·β - row_pivot·α（α, β 由 gcd 约去），每行再除以内容，
    全程只有整数运算。
    """
    rows: List[List[int]] = [list(row) for row in matrix]
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_value = rows[rank][col]
        for r in range(rank + 1, n_rows):
            current = rows[r][col]
            if current == 0:
                continue
            common = gcd(pivot_value, current)
            alpha, beta = current // common, pivot_value // common
            rows[r] = [a * beta - b * alpha for a, b in zip(rows[r], rows[rank])]
            content = 0
            for value in rows[r]:
                content = gcd(content, value)
            if content > 1:
                rows[r] = [value // content for value in rows[r]]
        rank += 1
        if rank == n_rows:
            break
    return rank


def kernel_matrix(p: PipeEndpoints) -> List[List[int]]:
    """I + P_τ"""
    rows = matrix_rep(p.tau).rows()
    for i, row in enumerate(rows):
        row[i] += 1
    return rows


def kernel_dimension(p: PipeEndpoints) -> int:
    """dim ker(I + P_τ) = n - rank"""
    return p.n - integer_rank(kernel_matrix(p))
