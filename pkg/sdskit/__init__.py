# -*- coding: utf-8 -*-
"""sdskit: randomized social choice with exact lotteries.

Social decision schemes, lottery extensions, efficiency verifiers, and
participation and strategyproofness audits, built on skbase objects.
"""
from .audit import (
    ALL_NOTIONS,
    AuditVerdict,
    Level,
    ParticipationNotion,
    StrategyproofnessVerdict,
    audit_all_notions,
    audit_participation,
    audit_strategyproofness,
    check_implications,
)
from .base import BaseLotteryExtension, BaseSDS, BudgetExceededError
from .efficiency import (
    EfficiencyVerdict,
    ex_post_efficient,
    pareto_optimal,
    sd_efficient,
)
from .esr import EgalitarianSimultaneousReservation, esr
from .extensions import (
    ComparisonResult,
    DLExtension,
    SDExtension,
    dl_compare,
    exists_strict_improvement,
    get_extension,
    sd_compare,
)
from .mr import MaximalRecursive, mr
from .preferences import (
    Lottery,
    Profile,
    ProfileSyntaxError,
    WeakOrder,
    parse_lottery,
    parse_order,
    parse_profile,
)
from .rules import (
    BordaUniform,
    ConstantRule,
    ProportionalPlurality,
    RandomSerialDictatorship,
    SerialDictatorship,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_NOTIONS",
    "AuditVerdict",
    "BaseLotteryExtension",
    "BaseSDS",
    "BordaUniform",
    "BudgetExceededError",
    "ComparisonResult",
    "ConstantRule",
    "DLExtension",
    "EfficiencyVerdict",
    "EgalitarianSimultaneousReservation",
    "Level",
    "Lottery",
    "MaximalRecursive",
    "ParticipationNotion",
    "Profile",
    "ProfileSyntaxError",
    "ProportionalPlurality",
    "RandomSerialDictatorship",
    "SDExtension",
    "SerialDictatorship",
    "StrategyproofnessVerdict",
    "WeakOrder",
    "audit_all_notions",
    "audit_participation",
    "audit_strategyproofness",
    "check_implications",
    "dl_compare",
    "esr",
    "ex_post_efficient",
    "exists_strict_improvement",
    "get_extension",
    "mr",
    "pareto_optimal",
    "parse_lottery",
    "parse_order",
    "parse_profile",
    "sd_compare",
    "sd_efficient",
]
