"""DrawAllocation rule: hoist invariant allocations out of onDraw.

Only allocations whose constructor arguments cannot change between draw
passes are touched: literals, fields of the enclosing class, and
class-qualified constants. Anything referencing an onDraw parameter or
local, or involving a call, disqualifies the allocation -- missing those
dynamic cases is accepted by design.
"""

from __future__ import annotations

from ..java.lexer import Token
from ..java.parser import Node, SyntaxTree
from ..spans import Edit
from .base import Finding, RuleId, RuleResult
from .javautil import (
    base_type_name,
    class_fields,
    declared_locals,
    dominant_eol,
    find_creations,
    line_indent,
    line_start,
    member_names,
    methods_of,
    single_declarator,
    statements_of,
)


def _is_on_draw(method: Node) -> bool:
    if method.props["name"] != "onDraw":
        return False
    params = method.props["params"]
    return len(params) == 1 and base_type_name(params[0][0]) == "Canvas"


def _args_are_invariant(
    tokens: list[Token],
    args: tuple[tuple[int, int], ...],
    fields: set[str],
    locals_: set[str],
) -> bool:
    for lo, hi in args:
        for j in range(lo, hi):
            t = tokens[j]
            if t.is_kw("new"):
                return False
            if t.kind == "keyword" and t.value in ("this", "super"):
                return False
            if t.kind != "ident":
                continue
            if t.value in ("null", "true", "false"):
                continue
            if j + 1 < hi and tokens[j + 1].is_op("("):
                return False  # call: value may vary between iterations
            if j > lo and tokens[j - 1].is_op("."):
                continue  # later segment of a qualified name
            if t.value in locals_:
                return False
            qualified_head = j + 1 < hi and tokens[j + 1].is_op(".")
            if qualified_head and t.value[:1].isupper():
                continue  # class-qualified constant, e.g. Color.RED
            if t.value not in fields:
                return False
    return True


def _reassigned_elsewhere(
    tree: SyntaxTree, method: Node, decl: Node, name: str
) -> bool:
    body = method.props["body"]
    for j in range(body.tok_lo, body.tok_hi):
        if decl.tok_lo <= j < decl.tok_hi:
            continue
        t = tree.tokens[j]
        if t.kind == "ident" and t.value == name:
            nxt = tree.tokens[j + 1] if j + 1 < body.tok_hi else None
            if nxt is not None and nxt.kind == "op" and nxt.value in (
                "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "++", "--",
            ):
                return True
            prev = tree.tokens[j - 1]
            if prev.kind == "op" and prev.value in ("++", "--"):
                return True
    return False


def apply_draw_allocation(tree: SyntaxTree, path: str = "") -> RuleResult:
    result = RuleResult()
    data = tree.data
    eol = dominant_eol(data).decode()

    for owner, method in methods_of(tree):
        if not _is_on_draw(method):
            continue
        body = method.props["body"]
        fields = set(class_fields(owner))
        locals_ = declared_locals(method)
        members = member_names(owner)

        for stmt in statements_of(body):
            if stmt.kind != "local_variable_declaration":
                continue
            decl = single_declarator(stmt)
            if decl is None or decl["init"] == (None, None):
                continue
            init_lo, init_hi = decl["init"]
            creations = list(find_creations(tree.tokens, init_lo, init_hi))
            if len(creations) != 1:
                continue
            creation = creations[0]
            # initializer must be exactly the allocation, nothing around it
            if (
                creation.new_index != init_lo
                or creation.span.end != tree.tokens[init_hi - 1].end
                or creation.has_body
            ):
                continue
            if not _args_are_invariant(tree.tokens, creation.args, fields, locals_):
                continue
            name = decl["name"]
            if name in members:
                continue  # hoisting would collide with an existing member
            if _reassigned_elsewhere(tree, method, stmt, name):
                continue

            result.findings.append(
                Finding(
                    rule=RuleId.DRAW_ALLOCATION,
                    file=path,
                    span=creation.span,
                    message=(
                        f"allocation of {creation.type_name} inside onDraw() runs "
                        "on every draw pass; hoist it to a field"
                    ),
                )
            )

            # field declaration immediately above onDraw
            method_start = tree.span_of(method).start
            mi = line_indent(data, method_start).decode()
            stmt_span = tree.span_of(stmt)
            si = line_indent(data, stmt_span.start).decode()
            stmt_text = tree.text_of(stmt_span)
            field_lines = stmt_text.split("\n")
            rebuilt = [mi + field_lines[0]]
            for line in field_lines[1:]:
                line = line.rstrip("\r")
                if line.startswith(si):
                    line = mi + line[len(si) :]
                rebuilt.append(line)
            field_text = eol.join(rebuilt) + eol
            result.edits.add(
                Edit.insert(line_start(data, method_start), field_text.encode())
            )

            # remove the local declaration, taking its whole line when the
            # statement is alone on it
            del_start = stmt_span.start
            del_end = stmt_span.end
            ls = line_start(data, del_start)
            nl = data.find(b"\n", del_end)
            line_tail = data[del_end : nl if nl >= 0 else len(data)]
            if data[ls:del_start].strip() == b"" and line_tail.strip() == b"":
                del_start = ls
                if nl >= 0:
                    del_end = nl + 1
            result.edits.add(Edit.delete(del_start, del_end))

    return result
