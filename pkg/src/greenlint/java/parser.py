"""Structural recursive-descent parser for Java source files.

The parser recognizes the declarations and statement structure the energy
rules need (classes, methods, fields, blocks, local variable declarations,
if/return statements) while keeping expressions as token slices. Every node
carries a byte span and a token index range into the tree's token list, so
the original bytes are always reachable and re-serializing an unmodified
tree is trivially byte-identical to the input.

Anonymous class bodies inside expressions are parsed as full class bodies
and attached as child nodes, so rules see methods declared in anonymous
adapters too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Optional, Union

from ..diagnostics import ParseDiagnostic
from ..spans import SourceSpan
from .lexer import LexError, Token, tokenize

MODIFIER_KEYWORDS = frozenset(
    """public protected private static final abstract native synchronized
    transient volatile strictfp default""".split()
)

PRIMITIVE_TYPES = frozenset(
    "boolean byte char short int long float double void".split()
)


@dataclass(eq=False)
class Node:
    kind: str
    tok_lo: int
    tok_hi: int
    children: list["Node"] = field(default_factory=list)
    props: dict[str, Any] = field(default_factory=dict)

    def walk(self) -> Iterator["Node"]:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class SyntaxTree:
    data: bytes
    tokens: list[Token]
    root: Node

    def span_of(self, node: Node) -> SourceSpan:
        if node.kind == "compilation_unit":
            return SourceSpan(0, len(self.data))
        if node.tok_lo == node.tok_hi:
            off = (
                self.tokens[node.tok_lo].start
                if node.tok_lo < len(self.tokens)
                else len(self.data)
            )
            return SourceSpan(off, off)
        return SourceSpan(
            self.tokens[node.tok_lo].start, self.tokens[node.tok_hi - 1].end
        )

    def text_of(self, node_or_span: Union[Node, SourceSpan]) -> str:
        span = (
            node_or_span
            if isinstance(node_or_span, SourceSpan)
            else self.span_of(node_or_span)
        )
        return self.data[span.start : span.end].decode("utf-8")

    def toks(self, node: Node) -> list[Token]:
        return self.tokens[node.tok_lo : node.tok_hi]

    def serialize(self) -> bytes:
        return self.data

    def find_all(self, kind: str) -> list[Node]:
        return [n for n in self.root.walk() if n.kind == kind]


class _ParseFailure(Exception):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class _Parser:
    def __init__(self, data: bytes, tokens: list[Token]):
        self.data = data
        self.toks = tokens
        self.i = 0

    # --- token helpers -------------------------------------------------

    def _line_col(self, offset: int) -> tuple[int, int]:
        line = self.data.count(b"\n", 0, offset) + 1
        nl = self.data.rfind(b"\n", 0, offset)
        return line, offset - nl

    def fail(self, message: str) -> "_ParseFailure":
        offset = self.toks[self.i].start if self.i < len(self.toks) else len(self.data)
        return _ParseFailure(ParseDiagnostic(*self._line_col(offset), message))

    def peek(self, ahead: int = 0) -> Optional[Token]:
        j = self.i + ahead
        return self.toks[j] if j < len(self.toks) else None

    def at_op(self, value: str) -> bool:
        t = self.peek()
        return t is not None and t.is_op(value)

    def at_kw(self, value: str) -> bool:
        t = self.peek()
        return t is not None and t.is_kw(value)

    def advance(self) -> Token:
        if self.i >= len(self.toks):
            raise self.fail("unexpected end of file")
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, value: str) -> Token:
        if not self.at_op(value):
            raise self.fail(f"expected {value!r}")
        return self.advance()

    def expect_ident(self, what: str) -> Token:
        t = self.peek()
        if t is None or t.kind != "ident":
            raise self.fail(f"expected {what}")
        return self.advance()

    # --- entry ---------------------------------------------------------

    def parse_compilation_unit(self) -> Node:
        lo = self.i
        children: list[Node] = []
        if self._at_package_decl():
            children.append(self._parse_package())
        while self.at_kw("import"):
            children.append(self._parse_import())
        while self.i < len(self.toks):
            if self.at_op(";"):
                self.advance()
                continue
            children.append(self._parse_type_decl())
        return Node("compilation_unit", lo, self.i, children)

    def _at_package_decl(self) -> bool:
        # annotations may precede `package`
        j = self.i
        while j < len(self.toks) and self.toks[j].is_op("@"):
            j += 1
            while j < len(self.toks) and self.toks[j].kind in ("ident", "keyword"):
                j += 1
                if j < len(self.toks) and self.toks[j].is_op("."):
                    j += 1
                else:
                    break
            if j < len(self.toks) and self.toks[j].is_op("("):
                j = self._match_group_from(j)
        return j < len(self.toks) and self.toks[j].is_kw("package")

    def _match_group_from(self, j: int) -> int:
        # index just past the group that opens at toks[j]
        opens = {"(": ")", "[": "]", "{": "}", "<": ">"}
        close = opens[self.toks[j].value]
        depth = 0
        while j < len(self.toks):
            v = self.toks[j].value if self.toks[j].kind == "op" else None
            if v in opens and opens[v] == close:
                depth += 1
            elif v == close:
                depth -= 1
                if depth == 0:
                    return j + 1
            j += 1
        raise self.fail(f"unbalanced {close!r}")

    def _parse_package(self) -> Node:
        lo = self.i
        while not self.at_kw("package"):
            self.advance()
        self.advance()
        self._parse_qualified_name()
        self.expect_op(";")
        return Node("package_declaration", lo, self.i)

    def _parse_import(self) -> Node:
        lo = self.i
        self.advance()  # import
        if self.at_kw("static"):
            self.advance()
        self._parse_qualified_name()
        if self.at_op("."):
            self.advance()
            self.expect_op("*")
        self.expect_op(";")
        return Node("import_declaration", lo, self.i)

    def _parse_qualified_name(self) -> str:
        parts = [self.expect_ident("name").value]
        while self.at_op(".") and (p := self.peek(1)) is not None and p.kind == "ident":
            self.advance()
            parts.append(self.advance().value)
        return ".".join(parts)

    # --- annotations / modifiers --------------------------------------

    def _parse_annotation(self) -> Node:
        lo = self.i
        self.expect_op("@")
        name = self._parse_qualified_name()
        if self.at_op("("):
            self.i = self._match_group_from(self.i)
        return Node("annotation", lo, self.i, props={"name": name})

    def _parse_modifiers(self) -> tuple[list[Node], list[str], int]:
        """Returns (annotation nodes, modifier keywords, start token index)."""
        lo = self.i
        annotations: list[Node] = []
        modifiers: list[str] = []
        while True:
            t = self.peek()
            if t is None:
                break
            if t.is_op("@") and not (
                (p := self.peek(1)) is not None and p.is_kw("interface")
            ):
                annotations.append(self._parse_annotation())
            elif t.kind == "keyword" and t.value in MODIFIER_KEYWORDS:
                modifiers.append(t.value)
                self.advance()
            else:
                break
        return annotations, modifiers, lo

    # --- types ---------------------------------------------------------

    def _at_type_start(self) -> bool:
        t = self.peek()
        if t is None:
            return False
        return t.kind == "ident" or (t.kind == "keyword" and t.value in PRIMITIVE_TYPES)

    def _parse_type(self) -> str:
        """Parse a type reference; returns its source text."""
        start_tok = self.i
        t = self.peek()
        if t is None:
            raise self.fail("expected type")
        if t.kind == "keyword" and t.value in PRIMITIVE_TYPES:
            self.advance()
        elif t.kind == "ident":
            self._parse_qualified_name()
            if self.at_op("<"):
                self.i = self._match_group_from(self.i)
        else:
            raise self.fail("expected type")
        while self.at_op("[") and (p := self.peek(1)) is not None and p.is_op("]"):
            self.advance()
            self.advance()
        lo_off = self.toks[start_tok].start
        hi_off = self.toks[self.i - 1].end
        return self.data[lo_off:hi_off].decode("utf-8")

    # --- type declarations ---------------------------------------------

    def _parse_type_decl(self) -> Node:
        annotations, modifiers, lo = self._parse_modifiers()
        t = self.peek()
        if t is None:
            raise self.fail("expected type declaration")
        if t.is_op("@") and (p := self.peek(1)) is not None and p.is_kw("interface"):
            self.advance()
            self.advance()
            return self._finish_type_decl("annotation_declaration", annotations, lo)
        if t.kind == "keyword" and t.value in ("class", "interface", "enum"):
            kw = self.advance().value
            kind = {
                "class": "class_declaration",
                "interface": "interface_declaration",
                "enum": "enum_declaration",
            }[kw]
            return self._finish_type_decl(kind, annotations, lo)
        raise self.fail("expected class, interface or enum declaration")

    def _finish_type_decl(
        self, kind: str, annotations: list[Node], lo: int
    ) -> Node:
        name = self.expect_ident("type name").value
        if self.at_op("<"):
            self.i = self._match_group_from(self.i)
        extends: Optional[str] = None
        if self.at_kw("extends"):
            self.advance()
            extends = self._parse_type()
            while self.at_op(","):  # interfaces may extend several
                self.advance()
                self._parse_type()
        if self.at_kw("implements"):
            self.advance()
            self._parse_type()
            while self.at_op(","):
                self.advance()
                self._parse_type()
        if self.at_kw("permits"):  # tolerated, never used by rules
            self.advance()
            self._parse_type()
            while self.at_op(","):
                self.advance()
                self._parse_type()
        lbrace = self.expect_op("{")
        members = (
            self._parse_enum_body(name)
            if kind == "enum_declaration"
            else self._parse_members(name)
        )
        rbrace = self.expect_op("}")
        node = Node(kind, lo, self.i, annotations + members)
        node.props.update(
            name=name,
            extends=extends,
            lbrace=lbrace.start,
            rbrace=rbrace.start,
        )
        return node

    def _parse_enum_body(self, enclosing: str) -> list[Node]:
        members: list[Node] = []
        # constants: Name, Name(args), Name { body }
        while True:
            t = self.peek()
            if t is None or t.is_op("}") or t.is_op(";"):
                break
            self.expect_ident("enum constant")
            if self.at_op("("):
                self.i = self._match_group_from(self.i)
            if self.at_op("{"):
                self.advance()
                members.extend(self._parse_members(enclosing))
                self.expect_op("}")
            if self.at_op(","):
                self.advance()
            else:
                break
        if self.at_op(";"):
            self.advance()
            members.extend(self._parse_members(enclosing))
        return members

    def _parse_members(self, enclosing: str) -> list[Node]:
        members: list[Node] = []
        while True:
            t = self.peek()
            if t is None or t.is_op("}"):
                return members
            if t.is_op(";"):
                self.advance()
                continue
            members.append(self._parse_member(enclosing))

    def _parse_member(self, enclosing: str) -> Node:
        annotations, modifiers, lo = self._parse_modifiers()
        t = self.peek()
        if t is None:
            raise self.fail("unexpected end of class body")
        # nested types
        if (t.kind == "keyword" and t.value in ("class", "interface", "enum")) or (
            t.is_op("@") and (p := self.peek(1)) is not None and p.is_kw("interface")
        ):
            self.i = lo
            return self._parse_type_decl()
        # initializer block (static handled by modifiers)
        if t.is_op("{"):
            body = self._parse_block()
            return Node("initializer", lo, self.i, [body])
        # generic method type parameters
        if t.is_op("<"):
            self.i = self._match_group_from(self.i)
        # constructor: Name (
        t = self.peek()
        if (
            t is not None
            and t.kind == "ident"
            and t.value == enclosing
            and (p := self.peek(1)) is not None
            and p.is_op("(")
        ):
            name = self.advance().value
            return self._finish_method(
                "constructor_declaration", annotations, modifiers, lo, name, None
            )
        type_text = self._parse_type()
        name_tok = self.expect_ident("member name")
        if self.at_op("("):
            return self._finish_method(
                "method_declaration", annotations, modifiers, lo, name_tok.value,
                type_text, name_tok,
            )
        return self._finish_field(annotations, modifiers, lo, type_text, name_tok)

    def _finish_method(
        self,
        kind: str,
        annotations: list[Node],
        modifiers: list[str],
        lo: int,
        name: str,
        return_type: Optional[str],
        name_tok: Optional[Token] = None,
    ) -> Node:
        params = self._parse_params()
        while self.at_op("[") and (p := self.peek(1)) is not None and p.is_op("]"):
            self.advance()
            self.advance()
        if self.at_kw("throws"):
            self.advance()
            self._parse_type()
            while self.at_op(","):
                self.advance()
                self._parse_type()
        body: Optional[Node] = None
        if self.at_op("{"):
            body = self._parse_block()
        elif self.at_kw("default"):  # annotation member default value
            while not self.at_op(";"):
                self.advance()
            self.advance()
        else:
            self.expect_op(";")
        node = Node(kind, lo, self.i, annotations + ([body] if body else []))
        node.props.update(
            name=name,
            params=params,
            return_type=return_type,
            modifiers=modifiers,
            annotation_names=[a.props["name"] for a in annotations],
            body=body,
            name_span=(
                SourceSpan(name_tok.start, name_tok.end) if name_tok else None
            ),
        )
        return node

    def _parse_params(self) -> list[tuple[str, str]]:
        self.expect_op("(")
        params: list[tuple[str, str]] = []
        while not self.at_op(")"):
            while self.at_op("@"):
                self._parse_annotation()
            if self.at_kw("final"):
                self.advance()
            while self.at_op("@"):
                self._parse_annotation()
            type_text = self._parse_type()
            if self.at_op("..."):
                self.advance()
                type_text += "..."
            if self.at_kw("this"):  # receiver parameter
                self.advance()
                name = "this"
            else:
                name = self.expect_ident("parameter name").value
            while self.at_op("[") and (p := self.peek(1)) is not None and p.is_op("]"):
                self.advance()
                self.advance()
            params.append((type_text, name))
            if self.at_op(","):
                self.advance()
        self.advance()  # )
        return params

    def _finish_field(
        self,
        annotations: list[Node],
        modifiers: list[str],
        lo: int,
        type_text: str,
        name_tok: Token,
    ) -> Node:
        declarators: list[dict[str, Any]] = []
        children: list[Node] = []
        tok = name_tok
        while True:
            while self.at_op("[") and (p := self.peek(1)) is not None and p.is_op("]"):
                self.advance()
                self.advance()
            init_lo = init_hi = None
            if self.at_op("="):
                self.advance()
                init_lo = self.i
                children.extend(self._consume_expression(stop_at_comma=True))
                init_hi = self.i
            declarators.append(
                {
                    "name": tok.value,
                    "name_span": SourceSpan(tok.start, tok.end),
                    "init": (init_lo, init_hi),
                }
            )
            if self.at_op(","):
                self.advance()
                tok = self.expect_ident("field name")
            else:
                break
        self.expect_op(";")
        node = Node("field_declaration", lo, self.i, annotations + children)
        node.props.update(
            type=type_text, modifiers=modifiers, declarators=declarators
        )
        return node

    # --- statements ----------------------------------------------------

    def _parse_block(self) -> Node:
        lo = self.i
        lbrace = self.expect_op("{")
        stmts: list[Node] = []
        while not self.at_op("}"):
            if self.peek() is None:
                raise self.fail("unexpected end of file in block")
            stmts.append(self._parse_statement())
        rbrace = self.advance()
        node = Node("block", lo, self.i, stmts)
        node.props.update(lbrace=lbrace.start, rbrace=rbrace.start)
        return node

    def _parse_statement(self) -> Node:
        t = self.peek()
        if t is None:
            raise self.fail("expected statement")
        if t.is_op("{"):
            return self._parse_block()
        if t.is_op(";"):
            lo = self.i
            self.advance()
            return Node("empty_statement", lo, self.i)
        if t.kind == "keyword":
            handler = {
                "if": self._parse_if,
                "for": self._parse_for,
                "while": self._parse_while,
                "do": self._parse_do,
                "try": self._parse_try,
                "switch": self._parse_switch,
                "synchronized": self._parse_synchronized,
                "return": self._parse_return,
                "throw": self._parse_simple_semi("throw_statement"),
                "break": self._parse_simple_semi("break_statement"),
                "continue": self._parse_simple_semi("continue_statement"),
                "assert": self._parse_simple_semi("assert_statement"),
            }.get(t.value)
            if handler is not None:
                return handler()
            if t.value in ("class", "interface", "enum") or t.value in (
                "final",
                "abstract",
                "static",
            ):
                saved = self.i
                _, _, _ = self._parse_modifiers()
                if self.at_kw("class") or self.at_kw("interface") or self.at_kw("enum"):
                    self.i = saved
                    return self._parse_type_decl()
                self.i = saved
        decl = self._try_local_var_decl()
        if decl is not None:
            return decl
        return self._parse_expression_statement()

    def _parse_simple_semi(self, kind: str):
        def parse() -> Node:
            lo = self.i
            self.advance()
            children = self._consume_expression()
            self.expect_op(";")
            return Node(kind, lo, self.i, children)

        return parse

    def _parse_return(self) -> Node:
        lo = self.i
        self.advance()
        expr_lo = self.i
        children = self._consume_expression()
        expr_hi = self.i
        self.expect_op(";")
        node = Node("return_statement", lo, self.i, children)
        node.props.update(expr=(expr_lo, expr_hi))
        return node

    def _parse_if(self) -> Node:
        lo = self.i
        self.advance()
        cond_lo = self.i
        self.i = self._match_group_from(self.i) if self.at_op("(") else self.i
        if cond_lo == self.i:
            raise self.fail("expected '(' after if")
        cond_hi = self.i
        then_stmt = self._parse_statement()
        children = [then_stmt]
        if self.at_kw("else"):
            self.advance()
            children.append(self._parse_statement())
        node = Node("if_statement", lo, self.i, children)
        node.props.update(cond=(cond_lo + 1, cond_hi - 1))
        return node

    def _parse_for(self) -> Node:
        lo = self.i
        self.advance()
        if not self.at_op("("):
            raise self.fail("expected '(' after for")
        self.i = self._match_group_from(self.i)
        body = self._parse_statement()
        return Node("for_statement", lo, self.i, [body])

    def _parse_while(self) -> Node:
        lo = self.i
        self.advance()
        if not self.at_op("("):
            raise self.fail("expected '(' after while")
        self.i = self._match_group_from(self.i)
        body = self._parse_statement()
        return Node("while_statement", lo, self.i, [body])

    def _parse_do(self) -> Node:
        lo = self.i
        self.advance()
        body = self._parse_statement()
        if not self.at_kw("while"):
            raise self.fail("expected 'while' after do body")
        self.advance()
        if not self.at_op("("):
            raise self.fail("expected '(' after while")
        self.i = self._match_group_from(self.i)
        self.expect_op(";")
        return Node("do_statement", lo, self.i, [body])

    def _parse_try(self) -> Node:
        lo = self.i
        self.advance()
        children: list[Node] = []
        if self.at_op("("):  # try-with-resources header, kept opaque
            self.i = self._match_group_from(self.i)
        children.append(self._parse_block())
        while self.at_kw("catch"):
            self.advance()
            if not self.at_op("("):
                raise self.fail("expected '(' after catch")
            self.i = self._match_group_from(self.i)
            children.append(self._parse_block())
        if self.at_kw("finally"):
            self.advance()
            children.append(self._parse_block())
        return Node("try_statement", lo, self.i, children)

    def _parse_switch(self) -> Node:
        lo = self.i
        self.advance()
        if not self.at_op("("):
            raise self.fail("expected '(' after switch")
        self.i = self._match_group_from(self.i)
        if not self.at_op("{"):
            raise self.fail("expected '{' after switch header")
        # Case bodies stay opaque token runs; anonymous classes inside are
        # still brace-balanced by the group matcher.
        self.i = self._match_group_from(self.i)
        return Node("switch_statement", lo, self.i)

    def _parse_synchronized(self) -> Node:
        lo = self.i
        self.advance()
        if self.at_op("("):
            self.i = self._match_group_from(self.i)
        body = self._parse_block()
        return Node("synchronized_statement", lo, self.i, [body])

    def _try_local_var_decl(self) -> Optional[Node]:
        saved = self.i
        try:
            annotations, modifiers, lo = self._parse_modifiers()
            if not self._at_type_start():
                raise self.fail("not a declaration")
            type_text = self._parse_type()
            t = self.peek()
            if t is None or t.kind != "ident":
                raise self.fail("not a declaration")
            nxt = self.peek(1)
            if nxt is None or not (
                nxt.is_op("=") or nxt.is_op(";") or nxt.is_op(",") or nxt.is_op("[")
            ):
                raise self.fail("not a declaration")
        except _ParseFailure:
            self.i = saved
            return None
        declarators: list[dict[str, Any]] = []
        children: list[Node] = list(annotations)
        while True:
            tok = self.expect_ident("variable name")
            while self.at_op("[") and (p := self.peek(1)) is not None and p.is_op("]"):
                self.advance()
                self.advance()
            init_lo = init_hi = None
            if self.at_op("="):
                self.advance()
                init_lo = self.i
                children.extend(self._consume_expression(stop_at_comma=True))
                init_hi = self.i
            declarators.append(
                {
                    "name": tok.value,
                    "name_span": SourceSpan(tok.start, tok.end),
                    "init": (init_lo, init_hi),
                }
            )
            if self.at_op(","):
                self.advance()
            else:
                break
        self.expect_op(";")
        node = Node("local_variable_declaration", lo, self.i, children)
        node.props.update(type=type_text, modifiers=modifiers, declarators=declarators)
        return node

    def _parse_expression_statement(self) -> Node:
        lo = self.i
        children = self._consume_expression()
        self.expect_op(";")
        if self.i == lo + 1:
            raise self.fail("expected statement")
        return Node("expression_statement", lo, self.i, children)

    def _consume_expression(self, stop_at_comma: bool = False) -> list[Node]:
        """Consume expression tokens up to ';' (or top-level ',').

        Anonymous class bodies (`new T(...) { ... }`) are parsed into child
        class-body nodes; everything else remains a token run. Returns the
        child nodes discovered along the way.
        """
        children: list[Node] = []
        depth = 0
        while True:
            t = self.peek()
            if t is None:
                raise self.fail("unexpected end of file in expression")
            if t.kind == "op":
                v = t.value
                if v in "([":
                    depth += 1
                elif v in ")]":
                    if depth == 0:
                        return children
                    depth -= 1
                elif v == ";" and depth == 0:
                    return children
                elif v == "," and depth == 0 and stop_at_comma:
                    return children
                elif v == "{":
                    # brace in expression position: anonymous class body,
                    # lambda body, or array initializer
                    if self._brace_opens_anonymous_body():
                        children.append(self._parse_anonymous_body())
                        continue
                    self.i = self._match_group_from(self.i)
                    continue
                elif v == "}":
                    raise self.fail("unexpected '}' in expression")
            self.advance()

    def _brace_opens_anonymous_body(self) -> bool:
        """True iff the '{' at the cursor follows `new Type(...)`."""
        j = self.i - 1
        if j < 0 or not self.toks[j].is_op(")"):
            return False
        depth = 0
        while j >= 0:  # find the matching '('
            v = self.toks[j].value if self.toks[j].kind == "op" else None
            if v == ")":
                depth += 1
            elif v == "(":
                depth -= 1
                if depth == 0:
                    break
            j -= 1
        if j <= 0:
            return False
        j -= 1
        if self.toks[j].is_op(">"):  # skip generic args, e.g. new ArrayList<>()
            gdepth = 0
            while j >= 0:
                v = self.toks[j].value if self.toks[j].kind == "op" else None
                if v == ">":
                    gdepth += 1
                elif v == "<":
                    gdepth -= 1
                    if gdepth == 0:
                        break
                j -= 1
            j -= 1
        # walk back over the qualified type name to a `new` keyword
        while j >= 1 and self.toks[j].kind == "ident":
            if self.toks[j - 1].is_op("."):
                j -= 2
            else:
                j -= 1
                break
        return j >= 0 and self.toks[j].is_kw("new")

    def _parse_anonymous_body(self) -> Node:
        lo = self.i
        lbrace = self.expect_op("{")
        members = self._parse_members("")
        rbrace = self.expect_op("}")
        node = Node("anonymous_class_body", lo, self.i, members)
        node.props.update(lbrace=lbrace.start, rbrace=rbrace.start)
        return node


def parse_java_source(
    data: bytes, max_size: int = 16 * 1024 * 1024
) -> tuple[Optional[SyntaxTree], list[ParseDiagnostic]]:
    """Parse Java source bytes into a lossless SyntaxTree.

    Returns (tree, []) on success or (None, diagnostics) on failure; the
    caller is expected to skip undecodable or unparseable files.
    """
    if len(data) > max_size:
        return None, [ParseDiagnostic(1, 1, f"file exceeds size cap of {max_size} bytes")]
    try:
        data.decode("utf-8")
    except UnicodeDecodeError as exc:
        return None, [ParseDiagnostic(1, 1, f"not valid UTF-8: {exc.reason}")]
    try:
        tokens = tokenize(data)
    except LexError as exc:
        return None, [exc.diagnostic]
    parser = _Parser(data, tokens)
    try:
        root = parser.parse_compilation_unit()
    except _ParseFailure as exc:
        return None, [exc.diagnostic]
    except RecursionError:
        return None, [ParseDiagnostic(1, 1, "nesting too deep")]
    return SyntaxTree(data, tokens, root), []
