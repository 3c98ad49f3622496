"""Corpus-level aggregation of per-project refactoring counts.

Reduces many ProjectReports to one summary row per rule plus a combined
"Any" row: total refactorings, number of affected projects, percentage of
the corpus affected (integer percent) and mean refactorings per affected
project (one decimal). Both renderings round half up; incidence is "-"
when no project is affected.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .engine import ProjectReport
from .rules import ALL_RULE_ORDER, RuleId

ANY = "Any"
ROW_ORDER: tuple[str, ...] = tuple(str(r) for r in ALL_RULE_ORDER) + (ANY,)

CSV_HEADER = (
    "rule,total_refactorings,total_projects,percentage_of_projects,"
    "incidence_per_project"
)


@dataclass(frozen=True)
class RuleSummary:
    rule: str
    total_refactorings: int
    total_projects: int

    def percentage_of_projects(self, corpus_size: int) -> int:
        if corpus_size == 0:
            return 0
        return _round_half_up(
            Decimal(self.total_projects) * 100 / Decimal(corpus_size), 0
        )

    @property
    def incidence_per_project(self) -> str:
        if self.total_projects == 0:
            return "-"
        value = Decimal(self.total_refactorings) / Decimal(self.total_projects)
        return f"{_round_half_up_decimal(value, 1)}"


@dataclass(frozen=True)
class CorpusSummary:
    corpus_size: int
    rows: dict[str, RuleSummary]  # keyed by rule name, plus "Any"

    def row(self, rule: str) -> RuleSummary:
        return self.rows[rule]


def _round_half_up(value: Decimal, places: int) -> int:
    q = Decimal(1).scaleb(-places)
    return int(value.quantize(q, rounding=ROUND_HALF_UP))


def _round_half_up_decimal(value: Decimal, places: int) -> Decimal:
    q = Decimal(1).scaleb(-places)
    return value.quantize(q, rounding=ROUND_HALF_UP)


def aggregate(reports: list[ProjectReport]) -> CorpusSummary:
    """Reduce per-project reports to the per-rule summary table.

    A project counts toward a rule iff it has at least one refactoring
    (fixable finding) of that rule. Duplicate project ids are a hard error.
    """
    if not reports:
        raise ValueError("reports list must be non-empty")
    ids = [r.project_id for r in reports]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise ValueError(f"duplicate project ids: {dupes}")

    rows: dict[str, RuleSummary] = {}
    any_total = 0
    any_projects = 0
    for rule in ALL_RULE_ORDER:
        total = sum(r.rule_counts[rule].refactorings for r in reports)
        projects = sum(1 for r in reports if r.rule_counts[rule].refactorings >= 1)
        rows[str(rule)] = RuleSummary(str(rule), total, projects)
        any_total += total
    any_projects = sum(
        1
        for r in reports
        if any(r.rule_counts[rule].refactorings >= 1 for rule in ALL_RULE_ORDER)
    )
    rows[ANY] = RuleSummary(ANY, any_total, any_projects)
    return CorpusSummary(corpus_size=len(reports), rows=rows)


def emit(summary: CorpusSummary, format: str) -> bytes:
    """Render the summary as CSV or JSON; byte-deterministic."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for rule in ROW_ORDER:
            row = summary.row(rule)
            writer.writerow(
                [
                    rule,
                    row.total_refactorings,
                    row.total_projects,
                    row.percentage_of_projects(summary.corpus_size),
                    row.incidence_per_project,
                ]
            )
        return buf.getvalue().encode()
    if format == "json":
        payload = [
            {
                "rule": rule,
                "total_refactorings": summary.row(rule).total_refactorings,
                "total_projects": summary.row(rule).total_projects,
                "percentage_of_projects": summary.row(rule).percentage_of_projects(
                    summary.corpus_size
                ),
                "incidence_per_project": summary.row(rule).incidence_per_project,
                "corpus_size": summary.corpus_size,
            }
            for rule in ROW_ORDER
        ]
        return (json.dumps(payload, indent=2, sort_keys=False) + "\n").encode()
    raise ValueError(f"unknown format {format!r}")


def parse_summary(data: bytes) -> CorpusSummary:
    """Inverse of emit(..., 'json') for round-trip checks."""
    payload = json.loads(data.decode("utf-8"))
    rows = {
        entry["rule"]: RuleSummary(
            entry["rule"], entry["total_refactorings"], entry["total_projects"]
        )
        for entry in payload
    }
    return CorpusSummary(corpus_size=payload[0]["corpus_size"], rows=rows)


def make_report(
    project_id: str, refactorings: dict[RuleId, int]
) -> ProjectReport:
    """Build a synthetic ProjectReport from raw per-rule counts (test/tooling
    helper for aggregation without running the engine)."""
    from .engine import RuleCount

    counts = {rule: RuleCount(refactorings=refactorings.get(rule, 0)) for rule in RuleId}
    return ProjectReport(project_id=project_id, rule_counts=counts)
