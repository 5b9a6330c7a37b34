"""
不变量校验套件

每个套件返回 VerificationReport。检查失败时只记录第一个反例
{"n", "diagram", "expected", "actual"}，退出码由 CLI 决定。
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence
import logging

from hstrata.core.exceptions import EnumerationCapError, ValidationError, VerificationError
from hstrata.core.models import CheckResult, VerificationReport
from hstrata.diagrams.grid import (
    SymmetricGrid,
    diagram_to_staircase,
    is_cauchon_lw,
    symmetric_grid,
)
from hstrata.diagrams.reduced_word import (
    Diagram,
    build_reduced_word,
    collect_cauchon,
    enumerate_cauchon,
    is_cauchon,
    naive_cauchon_scan,
)
from hstrata.enumeration.driver import (
    component_weight_polynomial,
    enumerate_histogram,
    sample_cauchon,
)
from hstrata.pipes.kernel import kernel_dimension
from hstrata.pipes.pipe_dreams import classify_cycles, diagram_tau, tau, verify_lemma_tau
from hstrata.series.counting import (
    D_series,
    H_series,
    H_series_closed,
    component_weight,
    d_series_combinatorial,
    fubini,
    inverse_sqrt_coefficient,
    inverse_sqrt_series,
    primitive_count,
    primitive_ratio,
    primitive_upper_bound_series,
    series_histogram,
    stirling,
    stirling_alternating,
    two_minus_exp,
)
from hstrata.series.egf import EgfSeries, series_exp, series_log, series_pow, series_reciprocal
from hstrata.series.polynomial import PolyT
from hstrata.weyl.bruhat import bruhat_interval
from hstrata.weyl.signed_permutation import (
    SignedPermutation,
    all_elements,
    compose,
    descent_length,
    is_right_ascent,
    length,
    longest_element,
    matrix_rep,
    simple_reflection,
    window_ascent,
)

logger = logging.getLogger(__name__)

# 示例图：n = 4，Δ = {2, 3, 5}
FIGURE_N = 4
FIGURE_BITS = "16"
FIGURE_TAU = "(1 -4)(-1 4)(2 3 -2 -3)"
FIGURE_BLACK_CELLS = {(3, 1), (3, 2), (2, 2), (4, 2), (3, 3)}
FIGURE_DIMENSION = 1

DECAY_PAIRS = (5, 10, 25, 50)
DECAY_BOUNDS = (Fraction(2, 5), Fraction(3, 5))

# 系列套件的固定阶数
D_ORDER = 12
INVERSE_ORDER = 20
TOTALS_ORDER = 25


@dataclass
class SuiteOptions:
    """校验参数"""

    n: Optional[int] = None
    seed: int = 0
    samples: int = 10000
    max_exhaustive_n: int = 5
    unsafe: bool = False
    ratio_order: int = 100


def _ranks(options: SuiteOptions, top: int, sampled: Sequence[int] = ()) -> List[int]:
    """
    套件要检查的秩

    未指定 n 时为 1..top 加上抽样秩；指定时只检查该秩，超出范围需要 unsafe。
    """
    if options.n is None:
        return list(range(1, top + 1)) + list(sampled)
    if options.n < 1:
        raise ValidationError(f"Rank must be positive, got {options.n}")
    limit = max([top, *sampled])
    if options.n > limit and not options.unsafe:
        raise EnumerationCapError(
            f"Rank {options.n} is beyond this suite's range 1..{limit}; pass --unsafe-no-cap"
        )
    return [options.n]


def _counterexample(n: int, diagram: Optional[Diagram], expected: Any, actual: Any) -> Dict:
    return {
        "n": str(n),
        "diagram": diagram.to_hex() if diagram is not None else None,
        "expected": str(expected),
        "actual": str(actual),
    }


def _compare(
    check: CheckResult,
    n: int,
    diagram: Optional[Diagram],
    expected: Any,
    actual: Any,
    what: str,
) -> None:
    check.checked += 1
    if expected != actual:
        check.fail(f"{what} mismatch at n={n}", _counterexample(n, diagram, expected, actual))


def weyl_suite(options: SuiteOptions) -> VerificationReport:
    """上升判据、长度与矩阵表示"""
    report = VerificationReport("weyl")
    ascent = CheckResult("window ascent agrees with root ascent")
    lengths = CheckResult("inversion length agrees with greedy descent length")
    exchange = CheckResult("length grows by one exactly on ascents")
    homomorphism = CheckResult("matrix representation is multiplicative")
    longest = CheckResult("longest element has length n^2")

    for n in _ranks(options, 3):
        elements = all_elements(n)
        for w in elements:
            name = w.to_window_string()
            ell = length(w)
            _compare(lengths, n, None, ell, descent_length(w), f"length of {name}")
            for i in range(1, n + 1):
                up = is_right_ascent(w, i)
                _compare(ascent, n, None, up, window_ascent(w.window, i, n), f"ascent {i} of {name}")
                moved = length(compose(w, simple_reflection(n, i)))
                _compare(exchange, n, None, ell + 1 if up else ell - 1, moved, f"{name}·s_{i}")
        for a in elements:
            for b in elements:
                product = matrix_rep(b) @ matrix_rep(a)
                _compare(homomorphism, n, None, matrix_rep(compose(a, b)), product, "matrix")
        _compare(longest, n, None, n * n, length(longest_element(n)), "longest length")

    report.checks.extend([ascent, lengths, exchange, homomorphism, longest])
    return report


def bruhat_suite(options: SuiteOptions) -> VerificationReport:
    """{w^Δ} 无重复且等于 [id, w]"""
    report = VerificationReport("bruhat")
    distinct = CheckResult("w^Δ values are pairwise distinct")
    interval = CheckResult("w^Δ values fill the Bruhat interval")

    for n in _ranks(options, 4):
        word = build_reduced_word(n)
        seen: Dict[SignedPermutation, Diagram] = {}

        def visit(d: Diagram, w: SignedPermutation) -> None:
            distinct.checked += 1
            if w in seen:
                distinct.fail(
                    f"w^Δ repeats at n={n}",
                    _counterexample(n, d, seen[w].to_hex(), w.to_window_string()),
                )
            seen[w] = d

        enumerate_cauchon(word, visit)
        expected = bruhat_interval(word.element())
        interval.checked += 1
        if set(seen) != expected:
            missing = len(expected - set(seen))
            extra = len(set(seen) - expected)
            interval.fail(
                f"Interval mismatch at n={n}: {missing} missing, {extra} extra",
                _counterexample(n, None, len(expected), len(seen)),
            )

    report.checks.extend([distinct, interval])
    return report


def lw_suite(options: SuiteOptions) -> VerificationReport:
    """上升扫描判据 ⟺ 阶梯着色判据，穷举全部 2^t 个子集"""
    report = VerificationReport("lw")
    check = CheckResult("ascent scan agrees with the staircase criterion")
    for n in _ranks(options, options.max_exhaustive_n):
        word = build_reduced_word(n)
        for mask in range(1 << word.t):
            d = Diagram(n, mask)
            staircase = is_cauchon_lw(diagram_to_staircase(word, d))
            _compare(check, n, d, is_cauchon(word, d), staircase, "criterion")
        logger.info(f"lw: rank {n} checked {1 << word.t} subsets")
    report.checks.append(check)
    return report


def figure_check() -> CheckResult:
    """示例图：网格、τ 与维数"""
    check = CheckResult("worked example reproduces its grid, τ and dimension")
    word = build_reduced_word(FIGURE_N)
    d = Diagram.from_hex(FIGURE_N, FIGURE_BITS)
    grid = symmetric_grid(diagram_to_staircase(word, d))
    expected_grid = SymmetricGrid.from_black_cells(FIGURE_N, FIGURE_BLACK_CELLS)
    _compare(check, FIGURE_N, d, expected_grid.render_ascii(), grid.render_ascii(), "grid")
    endpoints = diagram_tau(word, d)
    expected_tau = SignedPermutation.from_cycles(FIGURE_N, FIGURE_TAU)
    _compare(
        check, FIGURE_N, d, expected_tau.cycle_notation(), endpoints.cycle_notation(), "τ"
    )
    dimension = classify_cycles(endpoints).dimension
    _compare(check, FIGURE_N, d, FIGURE_DIMENSION, dimension, "dimension")
    return check


def tau_suite(options: SuiteOptions) -> VerificationReport:
    """τ_Δ = w^Δ w^{-1}，外加示例图"""
    report = VerificationReport("tau")
    check = CheckResult("pipe dream permutation equals w^Δ w^-1")
    fixed_rows = CheckResult("all-black grid rows are the fixed points of τ")
    ranks = _ranks(options, options.max_exhaustive_n)
    for n in ranks:
        word = build_reduced_word(n)
        for d in collect_cauchon(word):
            check.checked += 1
            if not verify_lemma_tau(word, d):
                actual = diagram_tau(word, d).cycle_notation()
                check.fail(
                    f"τ_Δ differs from w^Δ w^-1 at n={n}",
                    _counterexample(n, d, "w^Δ w^-1", actual),
                )
            grid = symmetric_grid(diagram_to_staircase(word, d))
            endpoints = tau(grid)
            for i in range(1, n + 1):
                _compare(
                    fixed_rows, n, d, endpoints.tau(i) == i, grid.is_all_black_row(i),
                    f"row {i} all black",
                )
    report.checks.append(check)
    report.checks.append(fixed_rows)
    if FIGURE_N in ranks:
        report.checks.append(figure_check())
    return report


def kernel_suite(options: SuiteOptions) -> VerificationReport:
    """轮换公式维数 = dim ker(I + P_τ)；n ≤ 上限时穷举，n = 6, 7 时按种子抽样"""
    report = VerificationReport("kernel")
    check = CheckResult("cycle dimension equals kernel dimension")
    top = options.max_exhaustive_n
    for n in _ranks(options, top, sampled=(6, 7)):
        word = build_reduced_word(n)
        if n <= top:
            diagrams = collect_cauchon(word)
        else:
            diagrams = sample_cauchon(n, options.samples, options.seed)
        for d in diagrams:
            endpoints = diagram_tau(word, d)
            expected = kernel_dimension(endpoints)
            _compare(check, n, d, expected, classify_cycles(endpoints).dimension, "dimension")
        logger.info(f"kernel: rank {n} checked {len(diagrams)} diagrams")
    report.checks.append(check)
    return report


def components_suite(options: SuiteOptions) -> VerificationReport:
    """只含一个分组轮换的图的加权和 = D(x,t) 的系数"""
    report = VerificationReport("components")
    check = CheckResult("single-cycle diagrams reproduce D(x,t)")
    for n in _ranks(options, options.max_exhaustive_n):
        actual = component_weight_polynomial(n)
        _compare(check, n, None, component_weight(n), actual, "component weight")
    report.checks.append(check)
    return report


def enumeration_suite(options: SuiteOptions) -> VerificationReport:
    """剪枝枚举 ≡ 朴素扫描；直方图 ≡ p_n(t)；总数 = 2·fubini(n)"""
    report = VerificationReport("enumeration")
    pruning = CheckResult("pruned search finds exactly the naive scan's diagrams")
    histogram = CheckResult("dimension histogram equals p_n(t)")
    totals_check = CheckResult("total equals 2·fubini(n)")
    for n in _ranks(options, options.max_exhaustive_n):
        word = build_reduced_word(n)
        pruned = sorted(d.members for d in collect_cauchon(word))
        naive = sorted(d.members for d in naive_cauchon_scan(word))
        _compare(pruning, n, None, naive, pruned, "diagram set")
        enumerated = enumerate_histogram(n, unsafe=options.unsafe)
        expected = series_histogram(n).as_list()
        _compare(histogram, n, None, expected, enumerated.as_list(), "histogram")
        _compare(totals_check, n, None, 2 * fubini(n), enumerated.total, "total")
    report.checks.extend([pruning, histogram, totals_check])
    return report


def _series_equal(check: CheckResult, expected: EgfSeries, actual: EgfSeries, what: str) -> None:
    for k in range(expected.order + 1):
        _compare(check, k, None, expected.coeffs[k], actual.coeffs[k], what)


def _stirling_checks() -> List[CheckResult]:
    recurrence = CheckResult("Stirling recurrence equals the alternating sum for n <= 20")
    bound = CheckResult("S(n,j) < (2j)^n for 1 <= j <= n <= 20")
    for n in range(INVERSE_ORDER + 1):
        for j in range(n + 1):
            value = stirling(n, j)
            _compare(recurrence, n, None, stirling_alternating(n, j), value, f"S({n},{j})")
            if j == 0:
                continue
            bound.checked += 1
            if not value < (2 * j) ** n:
                bound.fail(
                    f"S({n},{j}) reaches (2j)^n",
                    _counterexample(n, None, f"< {(2 * j) ** n}", value),
                )
    return [recurrence, bound]


def _inverse_sqrt_checks() -> List[CheckResult]:
    binomial = CheckResult("(2-e^x)^(-1/2) matches its binomial expansion to order 20")
    nonneg = CheckResult("(2-e^x)^(-1/2) has nonnegative coefficients to order 20")
    prim_bound = CheckResult("Prim(n) <= [x^n/n!] e^x (2-e^x)^(-1/2) for n <= 20")
    inv_sqrt = inverse_sqrt_series(INVERSE_ORDER)
    upper = primitive_upper_bound_series(INVERSE_ORDER)
    for n in range(INVERSE_ORDER + 1):
        value = inv_sqrt.coeffs[n].constant_term
        _compare(binomial, n, None, inverse_sqrt_coefficient(n), value, "coefficient")
        nonneg.checked += 1
        if value < 0:
            nonneg.fail(f"Negative coefficient at n={n}", _counterexample(n, None, ">= 0", value))
        prim_bound.checked += 1
        prim = primitive_count(n, INVERSE_ORDER)
        bound = upper.coeffs[n].constant_term
        if prim > bound:
            prim_bound.fail(f"Prim({n}) exceeds its bound", _counterexample(n, None, bound, prim))
    return [binomial, nonneg, prim_bound]


def _strata_polynomial_checks() -> List[CheckResult]:
    shape = CheckResult("p_n(t) has nonnegative integer coefficients and degree <= n")
    totals_check = CheckResult("p_n(1) = 2·fubini(n) to order 25")
    small = CheckResult("p_1 = t + 1 and p_2 = t^2 + 3t + 2")
    h = H_series(TOTALS_ORDER)
    for n in range(TOTALS_ORDER + 1):
        p = h.coeffs[n]
        shape.checked += 1
        if not p.is_integral() or any(c < 0 for c in p.coeffs) or p.degree > n:
            shape.fail(f"p_{n} is malformed", _counterexample(n, None, "nonnegative", p.to_json()))
        if n >= 1:
            _compare(totals_check, n, None, 2 * fubini(n), p(1), "p_n(1)")
    _compare(small, 1, None, PolyT((1, 1)), h.coeffs[1], "p_1")
    _compare(small, 2, None, PolyT((2, 3, 1)), h.coeffs[2], "p_2")
    return [shape, totals_check, small]


def decay_check(order: int = 100) -> CheckResult:
    """本原比例随 n 递减，且 ratio(100)/ratio(25) 落在 [0.4, 0.6]"""
    check = CheckResult(f"primitive ratio decays (order {order})")
    for n in DECAY_PAIRS:
        if 2 * n > order:
            continue
        check.checked += 1
        small, large = primitive_ratio(n, order), primitive_ratio(2 * n, order)
        if not large < small:
            check.fail(
                f"ratio({2 * n}) >= ratio({n})", _counterexample(2 * n, None, f"< {small}", large)
            )
    if order >= 100:
        check.checked += 1
        quotient = primitive_ratio(100, order) / primitive_ratio(25, order)
        low, high = DECAY_BOUNDS
        if not low <= quotient <= high:
            check.fail(
                "ratio(100)/ratio(25) outside [0.4, 0.6]",
                _counterexample(100, None, "[0.4, 0.6]", f"{float(quotient):.6f}"),
            )
    return check


def series_suite(options: SuiteOptions) -> VerificationReport:
    """级数自洽性，阶数固定，不看 n"""
    report = VerificationReport("series")

    d_check = CheckResult("D(x,t) closed form equals the component sum to order 12")
    _series_equal(d_check, D_series(D_ORDER), d_series_combinatorial(D_ORDER), "D coefficient")

    h_check = CheckResult("exp(D) equals (e^x/(2-e^x))^((t+1)/2) to order 12")
    _series_equal(h_check, H_series(D_ORDER), H_series_closed(D_ORDER), "H coefficient")

    inverse_check = CheckResult("exp and log are inverse to order 20")
    x = EgfSeries.x(INVERSE_ORDER)
    _series_equal(inverse_check, x, series_log(series_exp(x)), "log(exp(x))")
    base = two_minus_exp(INVERSE_ORDER)
    _series_equal(inverse_check, base, series_exp(series_log(base)), "exp(log(2-e^x))")

    fubini_check = CheckResult("(2-e^x)^(-(1+t)/2) at t=1 gives Fubini numbers to order 20")
    specialized = series_pow(base, PolyT((Fraction(-1, 2), Fraction(-1, 2)))).specialize(1)
    reciprocal = series_reciprocal(base)
    for n in range(INVERSE_ORDER + 1):
        expected = PolyT.constant(fubini(n))
        _compare(fubini_check, n, None, expected, specialized.coeffs[n], "pow coefficient")
        _compare(fubini_check, n, None, expected, reciprocal.coeffs[n], "reciprocal coefficient")

    report.checks.extend([d_check, h_check, inverse_check, fubini_check])
    report.checks.extend(_stirling_checks())
    report.checks.extend(_inverse_sqrt_checks())
    report.checks.extend(_strata_polynomial_checks())
    report.checks.append(decay_check(options.ratio_order))
    return report


SUITES: Dict[str, Callable[[SuiteOptions], VerificationReport]] = {
    "weyl": weyl_suite,
    "bruhat": bruhat_suite,
    "lw": lw_suite,
    "tau": tau_suite,
    "kernel": kernel_suite,
    "series": series_suite,
    "components": components_suite,
    "enumeration": enumeration_suite,
}

SUITE_NAMES = ["all", *SUITES]


def _run_one(name: str, options: SuiteOptions) -> VerificationReport:
    logger.info(f"Running suite '{name}'")
    try:
        report = SUITES[name](options)
    except VerificationError as e:
        report = VerificationReport(name)
        check = CheckResult(name)
        check.fail(str(e), e.counterexample)
        report.checks.append(check)
    logger.info(f"Suite '{name}' {'passed' if report.passed else 'FAILED'}")
    return report


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> VerificationReport:
    """
    运行套件

    Args:
        name: 套件名；"all" 依次运行全部套件，指定 n 时跳过范围不含 n 的套件
        options: 校验参数

    Returns:
        校验报告

    Raises:
        ValidationError: 未知套件名
        EnumerationCapError: 单个套件的 n 超出范围
    """
    options = options or SuiteOptions()
    if name == "all":
        report = VerificationReport("all")
        for suite_name in SUITES:
            try:
                report.extend(_run_one(suite_name, options))
            except EnumerationCapError as e:
                logger.warning(f"Skipping suite '{suite_name}': {e}")
        return report
    if name not in SUITES:
        raise ValidationError(f"Unknown suite '{name}'; choose from {', '.join(SUITE_NAMES)}")
    return _run_one(name, options)
