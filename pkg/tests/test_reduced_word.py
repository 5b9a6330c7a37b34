"""约化字与 Cauchon 图枚举测试"""
import pytest

from hstrata.core.exceptions import InvalidDiagramError, RankMismatchError, ValidationError
from hstrata.diagrams.reduced_word import (
    Diagram,
    Prefix,
    build_reduced_word,
    collect_cauchon,
    enumerate_cauchon,
    enumerate_prefixes,
    first_cauchon_failure,
    is_cauchon,
    naive_cauchon_scan,
    v_delta,
    w_delta,
)
from hstrata.weyl.signed_permutation import SignedPermutation, inverse, length


class TestReducedWord:
    """阶梯约化字测试"""

    def test_letters(self):
        """测试字母序列"""
        assert build_reduced_word(1).letters == (1,)
        assert build_reduced_word(2).letters == (2, 1, 2)
        assert build_reduced_word(3).letters == (3, 2, 3, 1, 2, 3)
        assert build_reduced_word(4).letters == (4, 3, 4, 2, 3, 4, 1, 2, 3, 4)

    def test_word_is_reduced(self):
        """测试乘积长度等于字长"""
        for n in range(1, 5):
            word = build_reduced_word(n)
            assert word.t == n * (n + 1) // 2
            assert length(word.element()) == word.t

    def test_element_n2(self, word2):
        """测试 n = 2 的乘积"""
        assert word2.element() == SignedPermutation(2, (-2, -1))

    def test_invalid_rank(self):
        """测试非正秩"""
        with pytest.raises(ValidationError):
            build_reduced_word(0)


class TestDiagram:
    """Diagram 测试"""

    def test_hex_and_positions(self):
        """测试位掩码与位置"""
        d = Diagram.from_positions(4, [2, 3, 5])
        assert d.to_hex() == "16"
        assert d.positions() == [2, 3, 5]
        assert 3 in d and 1 not in d
        assert Diagram.from_hex(4, "16") == d

    def test_membership_out_of_range(self):
        """测试 [1, t] 之外的位置不属于任何图"""
        d = Diagram.full(2)
        assert 0 not in d
        assert -1 not in d
        assert 4 not in d
        assert 3 in d

    def test_rejects_wide_mask(self):
        """测试超出 t 位的掩码"""
        with pytest.raises(InvalidDiagramError):
            Diagram.from_hex(2, "8")
        with pytest.raises(InvalidDiagramError):
            Diagram.from_hex(2, "zz")
        with pytest.raises(InvalidDiagramError):
            Diagram.from_positions(2, [4])

    def test_full(self):
        """测试全集"""
        assert Diagram.full(2).to_hex() == "7"
        assert Diagram.full(2).positions() == [1, 2, 3]

    def test_rank_mismatch(self, word2):
        """测试图与字的秩不一致"""
        with pytest.raises(RankMismatchError):
            is_cauchon(word2, Diagram(3, 0))


class TestCauchon:
    """Cauchon 判定测试"""

    def test_n2_diagrams(self, word2):
        """测试 n = 2 的六个 Cauchon 图"""
        members = [d.members for d in collect_cauchon(word2)]
        assert members == [0b000, 0b001, 0b010, 0b011, 0b110, 0b111]

    def test_first_failure(self, word2):
        """测试 Δ = {3} 在位置 1 失败"""
        assert first_cauchon_failure(word2, Diagram(2, 0b100)) == 1
        assert first_cauchon_failure(word2, Diagram(2, 0b110)) is None

    def test_counts(self):
        """测试 Cauchon 图个数 2·Fubini(n)"""
        expected = {1: 2, 2: 6, 3: 26, 4: 150, 5: 1082}
        for n, count in expected.items():
            assert enumerate_cauchon(build_reduced_word(n)) == count

    def test_pruned_matches_naive(self):
        """测试剪枝枚举与朴素扫描结果一致"""
        for n in range(1, 4):
            word = build_reduced_word(n)
            pruned = {d.members for d in collect_cauchon(word)}
            naive = {d.members for d in naive_cauchon_scan(word)}
            assert pruned == naive

    def test_visitor_receives_w_delta(self, word4):
        """测试回调收到的 w^Δ 与 w_delta 一致"""
        seen = []
        enumerate_cauchon(word4, lambda d, w: seen.append((d, w)))
        for d, w in seen:
            assert w == w_delta(word4, d)

    def test_w_delta_is_inverse_of_v_delta(self, word4, figure_diagram):
        """测试 w^Δ = (v^Δ)^-1"""
        assert w_delta(word4, figure_diagram) == inverse(v_delta(word4, figure_diagram))

    def test_w_delta_extremes(self, word2):
        """测试空集给出恒等元，全集给出 w"""
        assert w_delta(word2, Diagram(2, 0)).is_identity()
        assert w_delta(word2, Diagram.full(2)) == word2.element()


class TestPrefixes:
    """前缀切分测试"""

    def test_depth_one(self, word2):
        """测试深度 1 的前缀"""
        assert enumerate_prefixes(word2, 1) == [Prefix(1, 0), Prefix(1, 0b100)]

    def test_depth_clamped(self, word2):
        """测试深度被截到 t"""
        assert len(enumerate_prefixes(word2, 10)) == 6
        assert enumerate_prefixes(word2, 0) == [Prefix(0, 0)]

    def test_prefixes_partition_the_search(self):
        """测试各前缀子树的叶子数之和等于总数"""
        word = build_reduced_word(4)
        for depth in range(0, 6):
            prefixes = enumerate_prefixes(word, depth)
            assert sum(enumerate_cauchon(word, prefix=p) for p in prefixes) == 150

    def test_prefix_order_is_canonical(self):
        """测试拼接各子树的结果与整体枚举顺序一致"""
        word = build_reduced_word(3)
        whole = [d.members for d in collect_cauchon(word)]
        pieces = []
        for prefix in enumerate_prefixes(word, 3):
            enumerate_cauchon(word, lambda d, _: pieces.append(d.members), prefix)
        assert pieces == whole
