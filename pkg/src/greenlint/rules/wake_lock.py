"""WakeLock rule: ensure an acquired wake lock is released in onPause.

A lock acquired on an Activity field and never released in onPause keeps
the device awake after the app backgrounds. The fix appends an onPause
override (or extends an existing one) with a guarded release.

The emitted guard is `wl.isHeld()` by default; `paper_faithful_guard=True`
emits the negated form some references show, kept behind a flag because it
releases only when the lock is not held.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..java.parser import Node, SyntaxTree
from ..spans import Edit, SourceSpan
from .base import Finding, RuleId, RuleResult
from .javautil import (
    base_type_name,
    class_fields,
    declared_locals,
    dominant_eol,
    find_invocations,
    indent_unit,
    line_indent,
    line_start,
    methods_of,
    statements_of,
)

LIFECYCLE_METHODS = frozenset(
    ["onCreate", "onStart", "onResume", "onRestart", "onNewIntent"]
)


@dataclass
class _Acquisition:
    field: str
    span: SourceSpan  # the acquire() call


def _is_activity_class(node: Node) -> bool:
    if node.kind != "class_declaration":
        return False
    extends = node.props.get("extends")
    if not extends:
        return False
    return base_type_name(extends).endswith("Activity")


def _wake_lock_fields(owner: Node) -> set[str]:
    return {
        name
        for name, decl in class_fields(owner).items()
        if base_type_name(decl.props["type"]) == "WakeLock"
    }


def _method_named(owner: Node, name: str) -> Optional[Node]:
    for child in owner.children:
        if child.kind == "method_declaration" and child.props["name"] == name:
            return child
    return None


def _calls_on(tree: SyntaxTree, method: Node, receiver: str, name: str) -> list:
    body = method.props.get("body")
    if body is None:
        return []
    return [
        inv
        for inv in find_invocations(tree.tokens, body.tok_lo, body.tok_hi)
        if inv.name == name and inv.receiver == receiver
    ]


def apply_wake_lock(
    tree: SyntaxTree, path: str = "", paper_faithful_guard: bool = False
) -> RuleResult:
    result = RuleResult()
    data = tree.data
    eol = dominant_eol(data).decode()
    unit = indent_unit(data).decode()

    for owner, _ in _dedup_owners(tree):
        if not _is_activity_class(owner):
            continue
        wl_fields = _wake_lock_fields(owner)
        methods = [
            c
            for c in owner.children
            if c.kind == "method_declaration" and c.props.get("body") is not None
        ]
        lifecycle = [m for m in methods if m.props["name"] in LIFECYCLE_METHODS]

        acquisitions: list[_Acquisition] = []
        local_acquires: list[SourceSpan] = []
        for method in lifecycle:
            locals_ = declared_locals(method)
            body = method.props["body"]
            for inv in find_invocations(tree.tokens, body.tok_lo, body.tok_hi):
                if inv.name != "acquire" or inv.receiver is None:
                    continue
                if inv.receiver in wl_fields and inv.receiver not in locals_:
                    acquisitions.append(_Acquisition(inv.receiver, inv.span))
                elif _local_wake_lock(tree, method, inv.receiver):
                    local_acquires.append(inv.span)

        on_pause = _method_named(owner, "onPause")
        pending_release: list[str] = []
        for acq in acquisitions:
            if on_pause is not None and _calls_on(tree, on_pause, acq.field, "release"):
                continue
            result.findings.append(
                Finding(
                    rule=RuleId.WAKE_LOCK,
                    file=path,
                    span=acq.span,
                    message=(
                        f"wake lock field '{acq.field}' is acquired but never "
                        "released in onPause()"
                    ),
                )
            )
            if acq.field not in pending_release:
                pending_release.append(acq.field)
        for span in local_acquires:
            result.findings.append(
                Finding(
                    rule=RuleId.WAKE_LOCK,
                    file=path,
                    span=span,
                    message=(
                        "wake lock held only in a local variable is acquired but "
                        "never released; store it in a field and release it in "
                        "onPause()"
                    ),
                    fixable=False,
                )
            )

        if not pending_release:
            continue

        def guard(field: str) -> str:
            held = f"!{field}.isHeld()" if paper_faithful_guard else f"{field}.isHeld()"
            return f"{field} != null && {held}"

        if on_pause is None:
            mi = _member_indent(tree, data, owner, unit)
            lines = [
                "",
                f"{mi}@Override",
                f"{mi}protected void onPause() {{",
                f"{mi}{unit}super.onPause();",
            ]
            for field in pending_release:
                lines.append(f"{mi}{unit}if ({guard(field)}) {{")
                lines.append(f"{mi}{unit}{unit}{field}.release();")
                lines.append(f"{mi}{unit}}}")
            lines.append(f"{mi}}}")
            text = eol.join(lines) + eol
            insert_at = line_start(data, owner.props["rbrace"])
            result.edits.add(Edit.insert(insert_at, text.encode()))
        else:
            body = on_pause.props["body"]
            stmts = statements_of(body)
            if stmts and stmts[-1].kind == "return_statement":
                insert_at = line_start(data, tree.span_of(stmts[-1]).start)
                si = line_indent(data, tree.span_of(stmts[-1]).start).decode()
            else:
                insert_at = line_start(data, body.props["rbrace"])
                op_indent = line_indent(data, tree.span_of(on_pause).start).decode()
                si = (
                    line_indent(data, tree.span_of(stmts[0]).start).decode()
                    if stmts
                    else op_indent + unit
                )
            lines = []
            for field in pending_release:
                lines.append(f"{si}if ({guard(field)}) {{")
                lines.append(f"{si}{unit}{field}.release();")
                lines.append(f"{si}}}")
            text = eol.join(lines) + eol
            result.edits.add(Edit.insert(insert_at, text.encode()))

    return result


def _dedup_owners(tree: SyntaxTree):
    seen = []
    for owner, method in methods_of(tree):
        if owner not in seen:
            seen.append(owner)
            yield owner, method


def _local_wake_lock(tree: SyntaxTree, method: Node, name: str) -> bool:
    body = method.props.get("body")
    if body is None:
        return False
    for n in body.walk():
        if n.kind != "local_variable_declaration":
            continue
        if base_type_name(n.props["type"]) != "WakeLock":
            continue
        if any(d["name"] == name for d in n.props["declarators"]):
            return True
    return False


def _member_indent(tree: SyntaxTree, data: bytes, owner: Node, unit: str) -> str:
    for child in owner.children:
        if child.kind in ("method_declaration", "field_declaration"):
            return line_indent(data, tree.span_of(child).start).decode()
    return line_indent(data, tree.span_of(owner).start).decode() + unit
