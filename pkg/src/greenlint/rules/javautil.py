"""Shared token- and text-level helpers for the Java rules.

Rules are purely syntactic: expressions stay token runs, and these helpers
extract just enough structure (invocations, object creations, identifier
uses) for conservative detection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from ..java.lexer import Token
from ..java.parser import Node, SyntaxTree
from ..spans import SourceSpan

_OPEN = {"(": ")", "[": "]", "{": "}"}
_CLOSE = {")", "]", "}"}


def dominant_eol(data: bytes) -> bytes:
    crlf = data.count(b"\r\n")
    lf = data.count(b"\n") - crlf
    return b"\r\n" if crlf > lf else b"\n"


def line_start(data: bytes, offset: int) -> int:
    return data.rfind(b"\n", 0, offset) + 1


def line_indent(data: bytes, offset: int) -> bytes:
    """Leading whitespace of the line containing ``offset``."""
    start = line_start(data, offset)
    end = start
    while end < len(data) and data[end : end + 1] in (b" ", b"\t"):
        end += 1
    return data[start:end]


def indent_unit(data: bytes) -> bytes:
    """Best-effort indentation step: the smallest nonzero line indent."""
    best: Optional[bytes] = None
    for line in data.split(b"\n"):
        stripped = line.lstrip(b" \t")
        if not stripped:
            continue
        ws = line[: len(line) - len(stripped)]
        if ws and (best is None or len(ws) < len(best)):
            best = ws
    return best if best else b"    "


@dataclass(frozen=True)
class Invocation:
    name: str
    name_index: int  # index into tree.tokens
    receiver: Optional[str]  # simple identifier right before `.name(`, if any
    args: tuple[tuple[int, int], ...]  # token index ranges
    span: SourceSpan  # receiver-or-name start .. closing paren


@dataclass(frozen=True)
class Creation:
    type_name: str
    new_index: int
    args: tuple[tuple[int, int], ...]
    span: SourceSpan  # `new` .. closing paren
    has_body: bool  # anonymous class body follows


def match_group(tokens: list[Token], open_idx: int) -> int:
    """Index of the token closing the group opened at ``open_idx``."""
    close = _OPEN[tokens[open_idx].value]
    depth = 0
    for j in range(open_idx, len(tokens)):
        t = tokens[j]
        if t.kind != "op":
            continue
        if t.value == tokens[open_idx].value:
            depth += 1
        elif t.value == close:
            depth -= 1
            if depth == 0:
                return j
    raise ValueError("unbalanced group")


def split_args(tokens: list[Token], open_idx: int) -> tuple[list[tuple[int, int]], int]:
    """Split the argument list opened at ``open_idx`` on top-level commas.

    Returns (arg index ranges, index of the closing paren).
    """
    close_idx = match_group(tokens, open_idx)
    args: list[tuple[int, int]] = []
    depth = 0
    arg_lo = open_idx + 1
    for j in range(open_idx + 1, close_idx):
        t = tokens[j]
        if t.kind != "op":
            continue
        if t.value in _OPEN:
            depth += 1
        elif t.value in _CLOSE:
            depth -= 1
        elif t.value == "," and depth == 0:
            args.append((arg_lo, j))
            arg_lo = j + 1
    if arg_lo < close_idx:
        args.append((arg_lo, close_idx))
    return args, close_idx


def find_invocations(tokens: list[Token], lo: int, hi: int) -> Iterator[Invocation]:
    """Yield every `name(...)` call in tokens[lo:hi], outermost first."""
    for j in range(lo, min(hi, len(tokens))):
        t = tokens[j]
        if t.kind != "ident":
            continue
        if j + 1 >= len(tokens) or not tokens[j + 1].is_op("("):
            continue
        if j > 0 and tokens[j - 1].is_kw("new"):
            continue
        receiver = None
        start = t.start
        if j >= 2 and tokens[j - 1].is_op(".") and tokens[j - 2].kind == "ident":
            receiver = tokens[j - 2].value
            start = tokens[j - 2].start
        args, close_idx = split_args(tokens, j + 1)
        if close_idx >= hi:
            continue  # call extends past the slice; caller's slice was partial
        yield Invocation(
            name=t.value,
            name_index=j,
            receiver=receiver,
            args=tuple(args),
            span=SourceSpan(start, tokens[close_idx].end),
        )


def find_creations(tokens: list[Token], lo: int, hi: int) -> Iterator[Creation]:
    """Yield every `new Type(...)` in tokens[lo:hi] (array news excluded)."""
    for j in range(lo, min(hi, len(tokens))):
        if not tokens[j].is_kw("new"):
            continue
        k = j + 1
        parts = []
        while k < len(tokens) and tokens[k].kind in ("ident", "keyword"):
            parts.append(tokens[k].value)
            if k + 1 < len(tokens) and tokens[k + 1].is_op("."):
                k += 2
            else:
                k += 1
                break
        if not parts:
            continue
        if k < len(tokens) and tokens[k].is_op("<"):
            depth = 0
            while k < len(tokens):
                if tokens[k].is_op("<"):
                    depth += 1
                elif tokens[k].is_op(">"):
                    depth -= 1
                    if depth == 0:
                        k += 1
                        break
                k += 1
        if k >= len(tokens) or not tokens[k].is_op("("):
            continue  # array creation or malformed
        args, close_idx = split_args(tokens, k)
        if close_idx >= hi:
            continue
        has_body = close_idx + 1 < len(tokens) and tokens[close_idx + 1].is_op("{")
        yield Creation(
            type_name=".".join(parts),
            new_index=j,
            args=tuple(args),
            span=SourceSpan(tokens[j].start, tokens[close_idx].end),
            has_body=has_body,
        )


def ident_values(tokens: list[Token], lo: int, hi: int) -> set[str]:
    return {t.value for t in tokens[lo:hi] if t.kind == "ident"}


def single_declarator(node: Node) -> Optional[dict]:
    """The declarator of a one-variable local declaration, else None."""
    decls = node.props.get("declarators", [])
    if len(decls) == 1:
        return decls[0]
    return None


def statements_of(block: Node) -> list[Node]:
    return [c for c in block.children if c.kind != "annotation"]


def iter_statements(node: Node) -> Iterator[Node]:
    """All statement-ish nodes under ``node``, depth first."""
    for n in node.walk():
        if n.kind in (
            "block",
            "expression_statement",
            "local_variable_declaration",
            "if_statement",
            "for_statement",
            "while_statement",
            "do_statement",
            "try_statement",
            "switch_statement",
            "synchronized_statement",
            "return_statement",
            "throw_statement",
        ):
            yield n


OWNER_KINDS = (
    "class_declaration",
    "interface_declaration",
    "enum_declaration",
    "annotation_declaration",
    "anonymous_class_body",
)


def methods_of(tree: SyntaxTree) -> list[tuple[Node, Node]]:
    """(enclosing class-body-owner, method) pairs for every method with a body.

    The owner is the class/interface/enum/anonymous-body node whose member
    list directly contains the method.
    """
    out: list[tuple[Node, Node]] = []
    for owner in tree.root.walk():
        if owner.kind not in OWNER_KINDS:
            continue
        for child in owner.children:
            if (
                child.kind in ("method_declaration", "constructor_declaration")
                and child.props.get("body") is not None
            ):
                out.append((owner, child))
    return out


def class_fields(owner: Node) -> dict[str, Node]:
    """Field name -> field_declaration for the direct members of ``owner``."""
    fields: dict[str, Node] = {}
    for child in owner.children:
        if child.kind == "field_declaration":
            for d in child.props["declarators"]:
                fields[d["name"]] = child
    return fields


def member_names(owner: Node) -> set[str]:
    names: set[str] = set()
    for child in owner.children:
        if child.kind == "field_declaration":
            names.update(d["name"] for d in child.props["declarators"])
        elif child.kind in ("method_declaration", "constructor_declaration"):
            names.add(child.props["name"])
        elif child.kind in (
            "class_declaration",
            "interface_declaration",
            "enum_declaration",
        ):
            names.add(child.props["name"])
    return names


def declared_locals(method: Node) -> set[str]:
    """Parameter and local variable names declared anywhere in the method."""
    names = {name for _, name in method.props.get("params", [])}
    body = method.props.get("body")
    if body is not None:
        for n in body.walk():
            if n.kind == "local_variable_declaration":
                names.update(d["name"] for d in n.props["declarators"])
    return names


def base_type_name(type_text: str) -> str:
    """Last segment of a type reference, generics and arrays stripped."""
    t = type_text.split("<", 1)[0].replace("[]", "").strip()
    return t.split(".")[-1]
