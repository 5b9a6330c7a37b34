"""枚举驱动测试"""
import pytest

from hstrata.core.exceptions import EnumerationCapError, ValidationError
from hstrata.enumeration.driver import (
    component_weight_polynomial,
    count_diagrams,
    enumerate_histogram,
    sample_cauchon,
)
from hstrata.series.counting import component_weight, series_histogram
from hstrata.series.polynomial import PolyT


class TestEnumerateHistogram:
    """enumerate_histogram 测试"""

    def test_rank_one(self):
        """测试 n = 1：黑格维数 0，白格维数 1"""
        histogram = enumerate_histogram(1)
        assert histogram.counts == {0: 1, 1: 1}
        assert histogram.total == 2

    def test_rank_two(self):
        """测试 n = 2"""
        assert enumerate_histogram(2).as_list() == [2, 3, 1]

    def test_matches_series(self):
        """测试直方图与 p_n(t) 一致（n ≤ 5）"""
        for n in range(1, 6):
            assert enumerate_histogram(n) == series_histogram(n)

    def test_parallel_matches_serial(self):
        """测试多进程结果与单进程一致"""
        serial = enumerate_histogram(4)
        parallel = enumerate_histogram(4, jobs=2, prefix_depth=3)
        assert parallel == serial

    def test_progress_callback(self):
        """测试进度回调"""
        calls = []
        enumerate_histogram(3, progress_callback=lambda done, total: calls.append((done, total)))
        assert calls == [(1, 1)]

    def test_cap(self):
        """测试秩上限"""
        with pytest.raises(EnumerationCapError):
            enumerate_histogram(9)
        with pytest.raises(EnumerationCapError):
            enumerate_histogram(4, cap=3)
        assert enumerate_histogram(4, cap=3, unsafe=True).total == 150

    def test_invalid_arguments(self):
        """测试非法参数"""
        with pytest.raises(ValidationError):
            enumerate_histogram(0)
        with pytest.raises(ValidationError):
            enumerate_histogram(2, jobs=0)

    @pytest.mark.slow
    def test_ranks_six_and_seven(self):
        """测试 n = 6, 7 与 p_n(t) 一致"""
        for n in (6, 7):
            assert enumerate_histogram(n, jobs=4) == series_histogram(n)


class TestCountDiagrams:
    """count_diagrams 测试"""

    def test_counts(self):
        """测试只计数"""
        assert count_diagrams(3) == 26
        assert count_diagrams(4, jobs=2, prefix_depth=2) == 150

    def test_counts_only_cap(self):
        """测试只计数时上限为 10"""
        with pytest.raises(EnumerationCapError):
            count_diagrams(11)


class TestComponents:
    """单一分组轮换的图测试"""

    def test_component_weights(self):
        """测试与 D(x,t) 的系数一致"""
        assert component_weight_polynomial(1) == PolyT((1, 1))
        assert component_weight_polynomial(2) == PolyT((1, 1))
        for n in range(3, 6):
            assert component_weight_polynomial(n) == component_weight(n)


class TestSampling:
    """抽样测试"""

    def test_small_population_returned_whole(self):
        """测试总数不足时返回全部"""
        assert len(sample_cauchon(3, 100)) == 26

    def test_seeded(self):
        """测试同一种子结果相同"""
        first = sample_cauchon(4, 10, seed=7)
        second = sample_cauchon(4, 10, seed=7)
        assert first == second
        assert len({d.members for d in first}) == 10
