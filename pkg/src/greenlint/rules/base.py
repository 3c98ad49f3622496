"""Rule identifiers, metadata and result types shared by all five rules."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..spans import EditSet, SourceSpan


class RuleId(enum.Enum):
    VIEW_HOLDER = "ViewHolder"
    DRAW_ALLOCATION = "DrawAllocation"
    WAKE_LOCK = "WakeLock"
    RECYCLE = "Recycle"
    OBSOLETE_LAYOUT_PARAM = "ObsoleteLayoutParam"

    def __str__(self) -> str:
        return self.value


# Fixed execution/reporting order for the Java rules; ObsoleteLayoutParam
# runs on XML files only and comes last in reports.
JAVA_RULE_ORDER = (
    RuleId.VIEW_HOLDER,
    RuleId.DRAW_ALLOCATION,
    RuleId.WAKE_LOCK,
    RuleId.RECYCLE,
)
ALL_RULE_ORDER = JAVA_RULE_ORDER + (RuleId.OBSOLETE_LAYOUT_PARAM,)


@dataclass(frozen=True)
class RuleMeta:
    """Lint priority (1-10 scale) and reported energy improvement, carried
    as metadata only -- this tool never measures energy."""

    rule: RuleId
    lint_priority: int
    energy_improvement_pct: float


RULE_METADATA: dict[RuleId, RuleMeta] = {
    RuleId.VIEW_HOLDER: RuleMeta(RuleId.VIEW_HOLDER, 5, 4.5),
    RuleId.DRAW_ALLOCATION: RuleMeta(RuleId.DRAW_ALLOCATION, 9, 1.5),
    RuleId.WAKE_LOCK: RuleMeta(RuleId.WAKE_LOCK, 9, 1.5),
    RuleId.RECYCLE: RuleMeta(RuleId.RECYCLE, 7, 0.7),
    RuleId.OBSOLETE_LAYOUT_PARAM: RuleMeta(RuleId.OBSOLETE_LAYOUT_PARAM, 6, 0.7),
}


@dataclass
class Finding:
    rule: RuleId
    file: str
    span: SourceSpan
    message: str
    fixable: bool = True


@dataclass
class RuleResult:
    findings: list[Finding] = field(default_factory=list)
    edits: EditSet = field(default_factory=EditSet)

    @property
    def fixable_count(self) -> int:
        return sum(1 for f in self.findings if f.fixable)
