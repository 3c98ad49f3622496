"""File discovery and the per-project analysis/refactoring pipeline.

Rules run per file in a fixed order; each rule re-parses the text produced
by the previous rule's edits, so edit sets never need cross-rule merging.
The engine owns the safety net: rewritten text must re-parse cleanly and a
re-run of the rules must report nothing fixable, otherwise the file's
fixes are rolled back and surfaced as an internal error.
"""

from __future__ import annotations

import difflib
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from .diagnostics import ParseDiagnostic
from .java.parser import parse_java_source
from .rules import (
    JAVA_RULE_ORDER,
    Finding,
    LayoutParamTable,
    RuleId,
    RuleResult,
    apply_draw_allocation,
    apply_obsolete_layout_param,
    apply_recycle,
    apply_view_holder,
    apply_wake_lock,
)
from .spans import EditError, apply_edit_set
from .xmltree import parse_layout_xml

DEFAULT_EXCLUDES = ("**/build/**", "**/.git/**", "**/generated/**")

MODE_REPORT = "report-only"
MODE_FIX = "fix-in-place"
MODE_PATCH = "emit-patch"


@dataclass
class RunConfig:
    input_path: Path
    mode: str = MODE_REPORT
    enabled_rules: frozenset[RuleId] = frozenset(RuleId)
    exclude_globs: tuple[str, ...] = DEFAULT_EXCLUDES
    paper_faithful_wakelock_guard: bool = False
    layout_param_table: Optional[Path] = None
    jobs: int = 0  # 0 = logical CPUs
    backup: bool = False

    def __post_init__(self) -> None:
        if not self.enabled_rules:
            raise ValueError("enabled_rules must be non-empty")
        if self.mode not in (MODE_REPORT, MODE_FIX, MODE_PATCH):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not Path(self.input_path).exists():
            raise FileNotFoundError(self.input_path)


@dataclass
class FileOutcome:
    path: Path
    language: str  # java | xml | skipped
    parse_ok: bool = True
    diagnostics: list[ParseDiagnostic] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)
    fixable_counts: dict[RuleId, int] = field(default_factory=dict)
    fixed_counts: dict[RuleId, int] = field(default_factory=dict)
    rewritten: bool = False
    patch: Optional[str] = None
    skip_reason: Optional[str] = None
    internal_error: Optional[str] = None


@dataclass
class RuleCount:
    refactorings: int = 0  # fixable findings
    fixed: int = 0
    unfixable: int = 0


@dataclass
class ProjectReport:
    project_id: str
    rule_counts: dict[RuleId, RuleCount]
    java_files: int = 0
    xml_files: int = 0
    parse_failures: int = 0
    wall_time_s: float = 0.0
    warnings: list[str] = field(default_factory=list)


def _glob_to_regex(glob: str) -> re.Pattern[str]:
    out = []
    i = 0
    while i < len(glob):
        c = glob[i]
        if glob.startswith("**/", i):
            out.append("(?:.*/)?")
            i += 3
        elif glob.startswith("**", i):
            out.append(".*")
            i += 2
        elif c == "*":
            out.append("[^/]*")
            i += 1
        elif c == "?":
            out.append("[^/]")
            i += 1
        else:
            out.append(re.escape(c))
            i += 1
    return re.compile("^" + "".join(out) + "$")


def _classify(path: Path) -> Optional[str]:
    if path.suffix == ".java":
        return "java"
    if path.suffix == ".xml":
        parts = path.parts
        for i in range(len(parts) - 1):
            if parts[i] == "res" and parts[i + 1].startswith("layout"):
                return "xml"
    return None


def discover_files(
    config: RunConfig, warnings: Optional[list[str]] = None
) -> list[tuple[Path, str]]:
    """Deterministic sorted list of (path, language) under the input path."""
    root = Path(config.input_path)
    patterns = [_glob_to_regex(g) for g in config.exclude_globs]

    def excluded(rel: str) -> bool:
        return any(p.match(rel) for p in patterns)

    if root.is_file():
        lang = _classify(root.resolve())
        return [(root, lang)] if lang else []

    found: list[tuple[Path, str]] = []
    visited: set[tuple[int, int]] = set()

    def walk(directory: Path) -> None:
        try:
            st = os.stat(directory)
        except OSError as exc:
            if warnings is not None:
                warnings.append(f"cannot stat {directory}: {exc}")
            return
        key = (st.st_dev, st.st_ino)
        if key in visited:
            return
        visited.add(key)
        try:
            entries = sorted(directory.iterdir(), key=lambda p: p.name)
        except OSError as exc:
            if warnings is not None:
                warnings.append(f"cannot read {directory}: {exc}")
            return
        for entry in entries:
            rel = entry.relative_to(root).as_posix()
            if excluded(rel) or excluded(rel + "/"):
                continue
            if entry.is_dir():
                walk(entry)
            elif entry.is_file():
                lang = _classify(entry)
                if lang:
                    found.append((entry, lang))

    walk(root)
    found.sort(key=lambda pair: pair[0].as_posix())
    return found


_JavaRule = Callable[..., RuleResult]


def _java_rule_runner(
    rule: RuleId, config: RunConfig
) -> Callable[[object, str], RuleResult]:
    if rule == RuleId.VIEW_HOLDER:
        return apply_view_holder
    if rule == RuleId.DRAW_ALLOCATION:
        return apply_draw_allocation
    if rule == RuleId.WAKE_LOCK:
        return lambda tree, path: apply_wake_lock(
            tree, path, paper_faithful_guard=config.paper_faithful_wakelock_guard
        )
    if rule == RuleId.RECYCLE:
        return apply_recycle
    raise ValueError(rule)


def process_file(
    path: Path,
    language: str,
    config: RunConfig,
    table: LayoutParamTable,
    display_path: Optional[str] = None,
) -> FileOutcome:
    """Run the enabled rules over one file; pure up to filesystem writes."""
    outcome = FileOutcome(path=path, language=language)
    shown = display_path if display_path is not None else str(path)
    try:
        original = path.read_bytes()
    except OSError as exc:
        outcome.language = "skipped"
        outcome.skip_reason = f"unreadable: {exc}"
        return outcome
    try:
        original.decode("utf-8")
    except UnicodeDecodeError:
        outcome.language = "skipped"
        outcome.skip_reason = "not UTF-8; refusing to touch unknown encodings"
        return outcome

    text = original
    try:
        if language == "java":
            rules = [r for r in JAVA_RULE_ORDER if r in config.enabled_rules]
            for rule in rules:
                tree, diags = parse_java_source(text)
                if tree is None:
                    if text is original:
                        outcome.parse_ok = False
                        outcome.diagnostics = diags
                        return outcome
                    raise _VerificationError(
                        f"rewritten text no longer parses: {diags[0]}"
                    )
                result = _java_rule_runner(rule, config)(tree, shown)
                outcome.findings.extend(result.findings)
                outcome.fixable_counts[rule] = (
                    outcome.fixable_counts.get(rule, 0) + result.fixable_count
                )
                if result.edits and config.mode != MODE_REPORT:
                    text = apply_edit_set(text, result.edits)
                elif result.edits and config.mode == MODE_REPORT:
                    # chain rewrites internally so later rules see the same
                    # text they would in fix mode; nothing is written
                    text = apply_edit_set(text, result.edits)
            if text != original:
                _verify_java(text, rules, config, shown)
        elif language == "xml":
            if RuleId.OBSOLETE_LAYOUT_PARAM in config.enabled_rules:
                tree, diags = parse_layout_xml(text)
                if tree is None:
                    outcome.parse_ok = False
                    outcome.diagnostics = diags
                    return outcome
                result = apply_obsolete_layout_param(tree, shown, table)
                outcome.findings.extend(result.findings)
                outcome.fixable_counts[RuleId.OBSOLETE_LAYOUT_PARAM] = (
                    result.fixable_count
                )
                if result.edits:
                    text = apply_edit_set(text, result.edits)
                    _verify_xml(text, table, shown)
    except (_VerificationError, EditError) as exc:
        outcome.internal_error = str(exc)
        return outcome

    if text != original and config.mode == MODE_FIX:
        try:
            _atomic_replace(path, text, backup=config.backup)
        except OSError as exc:
            outcome.internal_error = f"write failed: {exc}"
            return outcome
        outcome.rewritten = True
    elif text != original and config.mode == MODE_PATCH:
        outcome.patch = _unified_diff(original, text, shown)

    if text != original and config.mode != MODE_REPORT:
        for rule, count in outcome.fixable_counts.items():
            outcome.fixed_counts[rule] = count
    return outcome


class _VerificationError(Exception):
    pass


def _verify_java(
    text: bytes, rules: list[RuleId], config: RunConfig, shown: str
) -> None:
    tree, diags = parse_java_source(text)
    if tree is None:
        raise _VerificationError(f"rewritten output does not parse: {diags[0]}")
    for rule in rules:
        result = _java_rule_runner(rule, config)(tree, shown)
        if result.fixable_count:
            raise _VerificationError(
                f"rule {rule} still reports fixable findings after its own fix"
            )


def _verify_xml(text: bytes, table: LayoutParamTable, shown: str) -> None:
    tree, diags = parse_layout_xml(text)
    if tree is None:
        raise _VerificationError(f"rewritten output does not parse: {diags[0]}")
    result = apply_obsolete_layout_param(tree, shown, table)
    if result.fixable_count:
        raise _VerificationError(
            "ObsoleteLayoutParam still reports findings after its own fix"
        )


def _atomic_replace(path: Path, text: bytes, backup: bool) -> None:
    if backup:
        path.with_suffix(path.suffix + ".orig").write_bytes(path.read_bytes())
    mode = path.stat().st_mode
    tmp = path.with_name(path.name + ".greenlint.tmp")
    tmp.write_bytes(text)
    os.chmod(tmp, mode & 0o7777)
    os.replace(tmp, path)


def _unified_diff(original: bytes, text: bytes, shown: str) -> str:
    a = original.decode("utf-8").splitlines(keepends=True)
    b = text.decode("utf-8").splitlines(keepends=True)
    diff = difflib.unified_diff(a, b, fromfile=f"a/{shown}", tofile=f"b/{shown}")
    return "".join(diff)


def run_project(
    config: RunConfig, project_id: Optional[str] = None
) -> tuple[ProjectReport, list[FileOutcome]]:
    """Analyze (and, per mode, rewrite) every eligible file under the input."""
    start = time.monotonic()
    warnings: list[str] = []
    root = Path(config.input_path)
    if project_id is None:
        project_id = root.resolve().name
    files = discover_files(config, warnings)
    table = (
        LayoutParamTable.from_file(config.layout_param_table)
        if config.layout_param_table
        else LayoutParamTable()
    )

    def display(path: Path) -> str:
        try:
            return path.relative_to(root).as_posix()
        except ValueError:
            return path.as_posix()

    jobs = config.jobs if config.jobs > 0 else (os.cpu_count() or 1)
    if jobs == 1 or len(files) <= 1:
        outcomes = [
            process_file(p, lang, config, table, display(p)) for p, lang in files
        ]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(
                pool.map(
                    lambda pair: process_file(
                        pair[0], pair[1], config, table, display(pair[0])
                    ),
                    files,
                )
            )
    outcomes.sort(key=lambda o: o.path.as_posix())

    counts = {rule: RuleCount() for rule in RuleId}
    java_files = xml_files = parse_failures = 0
    for outcome in outcomes:
        if outcome.language == "java":
            java_files += 1
        elif outcome.language == "xml":
            xml_files += 1
        if not outcome.parse_ok:
            parse_failures += 1
        if outcome.skip_reason:
            warnings.append(f"{outcome.path}: skipped: {outcome.skip_reason}")
        if outcome.internal_error:
            warnings.append(f"{outcome.path}: error: {outcome.internal_error}")
        for rule, n in outcome.fixable_counts.items():
            counts[rule].refactorings += n
        for rule, n in outcome.fixed_counts.items():
            counts[rule].fixed += n
        for finding in outcome.findings:
            if not finding.fixable:
                counts[finding.rule].unfixable += 1

    report = ProjectReport(
        project_id=project_id,
        rule_counts=counts,
        java_files=java_files,
        xml_files=xml_files,
        parse_failures=parse_failures,
        wall_time_s=time.monotonic() - start,
        warnings=warnings,
    )
    return report, outcomes
