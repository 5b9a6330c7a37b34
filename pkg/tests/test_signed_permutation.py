"""带符号置换测试"""
import pytest

from hstrata.core.exceptions import InvalidIndexError, InvalidPermutationError, RankMismatchError
from hstrata.weyl.signed_permutation import (
    SignedPermutation,
    all_elements,
    compose,
    descent_length,
    identity,
    inverse,
    is_right_ascent,
    length,
    longest_element,
    matrix_rep,
    positive_roots,
    reflections,
    simple_reflection,
    window_ascent,
)


class TestSignedPermutation:
    """SignedPermutation 测试"""

    def test_rejects_bad_window(self):
        """测试非法窗口"""
        with pytest.raises(InvalidPermutationError):
            SignedPermutation(2, (1, 1))
        with pytest.raises(InvalidPermutationError):
            SignedPermutation(2, (1, 3))
        with pytest.raises(InvalidPermutationError):
            SignedPermutation(3, (1, 2))

    def test_call_on_negatives(self):
        """测试 w(-i) = -w(i)"""
        w = SignedPermutation(2, (-2, 1))
        assert w(1) == -2
        assert w(-1) == 2
        assert w(-2) == -1
        with pytest.raises(InvalidIndexError):
            w(3)

    def test_window_string(self):
        """测试窗口字符串"""
        w = SignedPermutation.from_window_string("1,-3,2")
        assert w.window == (1, -3, 2)
        assert w.to_window_string() == "1,-3,2"
        with pytest.raises(InvalidPermutationError):
            SignedPermutation.from_window_string("1,x")

    def test_cycle_notation(self):
        """测试示例 τ 的轮换记法"""
        tau = SignedPermutation(4, (-4, 3, -2, -1))
        assert tau.cycle_notation() == "(1 -4)(-1 4)(2 3 -2 -3)"
        assert identity(3).cycle_notation() == "()"

    def test_from_cycles_completes_mirror(self):
        """测试只给出一半轮换时自动补全镜像"""
        full = SignedPermutation.from_cycles(4, "(1 -4)(-1 4)(2 3 -2 -3)")
        half = SignedPermutation.from_cycles(4, "(1 -4)(2 3 -2 -3)")
        assert full == half == SignedPermutation(4, (-4, 3, -2, -1))

    def test_from_cycles_conflict(self):
        """测试冲突的轮换"""
        with pytest.raises(InvalidPermutationError):
            SignedPermutation.from_cycles(2, "(1 2)(1 -2)")


class TestGroupOperations:
    """群运算测试"""

    def test_compose(self):
        """测试 (a∘b)(i) = a(b(i))"""
        a = SignedPermutation(2, (2, 1))
        b = SignedPermutation(2, (-1, 2))
        assert compose(a, b).window == (-2, 1)
        assert (a * b).window == (-2, 1)

    def test_inverse(self):
        """测试逆元"""
        w = SignedPermutation(2, (-2, 1))
        assert inverse(w).window == (2, -1)
        assert compose(w, inverse(w)).is_identity()

    def test_simple_reflections(self):
        """测试单反射"""
        assert simple_reflection(3, 1).window == (2, 1, 3)
        assert simple_reflection(3, 3).window == (1, 2, -3)
        with pytest.raises(InvalidIndexError):
            simple_reflection(3, 4)

    def test_rank_mismatch(self):
        """测试秩不一致"""
        with pytest.raises(RankMismatchError):
            compose(identity(2), identity(3))

    def test_group_sizes(self):
        """测试 |B_n| = 2^n n!"""
        assert len(all_elements(2)) == 8
        assert len(set(all_elements(3))) == 48


class TestLengthAndAscents:
    """长度与上升测试"""

    def test_positive_root_count(self):
        """测试正根个数为 n²"""
        for n in range(1, 5):
            assert len(positive_roots(n)) == n * n
            assert len(reflections(n)) == n * n

    def test_length_of_special_elements(self):
        """测试恒等元、单反射与最长元的长度"""
        assert length(identity(3)) == 0
        for i in range(1, 4):
            assert length(simple_reflection(3, i)) == 1
        assert length(longest_element(3)) == 9

    def test_length_matches_descent_count(self):
        """测试长度与贪心下降步数一致"""
        for w in all_elements(3):
            assert length(w) == descent_length(w)

    def test_window_ascent_matches_root_ascent(self):
        """测试窗口判据与根像判据一致"""
        for w in all_elements(3):
            for i in range(1, 4):
                assert window_ascent(w.window, i, 3) == is_right_ascent(w, i)

    def test_ascent_changes_length(self):
        """测试上升时长度加一，下降时减一"""
        for w in all_elements(2):
            for i in (1, 2):
                step = 1 if is_right_ascent(w, i) else -1
                assert length(compose(w, simple_reflection(2, i))) == length(w) + step

    def test_reflections_are_involutions(self):
        """测试反射是对合且长度为奇数"""
        for t in reflections(3):
            assert compose(t, t).is_identity()
            assert length(t) % 2 == 1


class TestMatrixRep:
    """矩阵表示测试"""

    def test_matrix_entries(self):
        """测试带符号置换矩阵"""
        rows = matrix_rep(SignedPermutation(2, (-2, 1))).rows()
        assert rows == [[0, -1], [1, 0]]

    def test_product_reverses_order(self):
        """测试 P_{ab} = P_b P_a"""
        for a in all_elements(2):
            for b in all_elements(2):
                assert matrix_rep(compose(a, b)) == matrix_rep(b) @ matrix_rep(a)

    def test_transpose_is_inverse(self):
        """测试 P_w 的转置是 P_{w^-1}"""
        w = SignedPermutation(3, (3, -1, 2))
        assert matrix_rep(w).transpose() == matrix_rep(inverse(w))
