"""
局部不等式模块：爆破塔断言、四次爆破重数账本及常用的非对数典范必要条件。
"""

from edgealpha.localineq.clauses import (
    ClauseResult,
    TowerLedger,
    adjunction_check,
    blowup_ledger_check,
    exceptional_coefficients,
    four_blowup_corollary,
    ledger_from_germ,
    skoda_check,
    small_multiplicity_bound,
    transversal_pair_check,
)
from edgealpha.localineq.ledger import (
    FourBlowupResult,
    MultiplicityLedger,
    Verdict,
    four_blowup_conditions,
    refinement_holds_on_unit_interval,
)

__all__ = [
    "ClauseResult",
    "TowerLedger",
    "adjunction_check",
    "blowup_ledger_check",
    "exceptional_coefficients",
    "four_blowup_corollary",
    "ledger_from_germ",
    "skoda_check",
    "small_multiplicity_bound",
    "transversal_pair_check",
    "FourBlowupResult",
    "MultiplicityLedger",
    "Verdict",
    "four_blowup_conditions",
    "refinement_holds_on_unit_interval",
]
