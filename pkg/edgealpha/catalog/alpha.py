"""
α 引擎与目录验证模块：用芽引擎重新推导每个情形的 α̂，并与显式公式逐段精确比较。
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, List, Optional

from edgealpha.catalog.configs import SurfaceConfig
from edgealpha.catalog.divisors import test_divisors
from edgealpha.catalog.formulas import alpha_hat
from edgealpha.exactmath import PiecewiseBetaFunction, first_difference, piecewise_equal, pointwise_min
from utils.logging_utils import get_logger

logger = get_logger(__name__)

DEFAULT_MAX_WORKERS = 4


def alpha_engine(config: SurfaceConfig) -> PiecewiseBetaFunction:
    """全部测试除子阈值的逐点最小值（B = C 的见证贡献常数 1）"""
    thresholds = [divisor.threshold() for divisor in test_divisors(config)]
    return pointwise_min(thresholds)


@dataclass(frozen=True)
class CaseResult:
    """单个情形的验证结果"""

    config: SurfaceConfig
    passed: bool
    hard_coded: PiecewiseBetaFunction
    derived: PiecewiseBetaFunction
    witness: Optional[Fraction] = None

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass(frozen=True)
class VerificationReport:
    """verify_catalog 的汇总报告，条目顺序与输入情形顺序一致"""

    results: List[CaseResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CaseResult]:
        return [result for result in self.results if not result.passed]


def verify_case(
    config: SurfaceConfig,
    formula: Callable[[SurfaceConfig], PiecewiseBetaFunction] = alpha_hat,
) -> CaseResult:
    """
    比较单个情形的显式公式与引擎推导。

    参数:
        config: 情形
        formula: 显式公式来源，默认 alpha_hat；测试中可替换为扰动公式

    返回:
        CaseResult: 失败时附带一个使两者取值不同的有理 β
    """
    hard_coded = formula(config)
    derived = alpha_engine(config)
    passed = piecewise_equal(hard_coded, derived)
    witness = None if passed else first_difference(hard_coded, derived)
    logger.info("%s: %s", config.value, "PASS" if passed else "FAIL")
    return CaseResult(config, passed, hard_coded, derived, witness)


def verify_catalog(
    configs: Optional[Iterable[SurfaceConfig]] = None,
    max_workers: int = DEFAULT_MAX_WORKERS,
    formula: Callable[[SurfaceConfig], PiecewiseBetaFunction] = alpha_hat,
) -> VerificationReport:
    """
    对每个情形验证 alpha_hat ≡ alpha_engine。

    关键实现细节:
        - 第一阶段：确定待验证情形（默认全部）
        - 第二阶段：线程池并发计算，map 保证输出顺序与输入一致
    """
    # 第一阶段：情形列表
    selected = list(configs) if configs is not None else list(SurfaceConfig)

    # 第二阶段：并发验证
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        results = list(executor.map(lambda config: verify_case(config, formula), selected))
    return VerificationReport(results)
