"""Byte-offset tokenizer for Java source.

Operates directly on UTF-8 bytes so token spans are byte spans; any byte
>= 0x80 is treated as an identifier-continue character, which is sound for
the syntactic analysis done here (non-ASCII only ever appears inside
identifiers, literals and comments). Trivia (whitespace and comments) is
dropped from the token stream but always recoverable from the original
bytes between adjacent token spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..diagnostics import ParseDiagnostic

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

# Multi-byte operators, longest first. '>' is deliberately always a single
# token so nested generics (>>) need no special lexer state; rules never
# depend on shift operators being one token.
_OPERATORS = [
    b"...", b"->", b"::", b"<<=", b"<<", b"<=", b">=", b"==", b"!=", b"&&",
    b"||", b"++", b"--", b"+=", b"-=", b"*=", b"/=", b"%=", b"&=", b"|=",
    b"^=",
]
_SINGLE = set(b"(){}[];,.=<>+-*/%&|^!~?:@")


class LexError(Exception):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


@dataclass(frozen=True)
class Token:
    kind: str  # ident | keyword | number | string | char | op
    value: str
    start: int  # byte offset, inclusive
    end: int  # byte offset, exclusive

    def is_op(self, value: str) -> bool:
        return self.kind == "op" and self.value == value

    def is_kw(self, value: str) -> bool:
        return self.kind == "keyword" and self.value == value


def _line_col(data: bytes, offset: int) -> tuple[int, int]:
    line = data.count(b"\n", 0, offset) + 1
    nl = data.rfind(b"\n", 0, offset)
    return line, offset - nl


def _is_ident_start(b: int) -> bool:
    return b == 0x5F or b == 0x24 or 0x41 <= b <= 0x5A or 0x61 <= b <= 0x7A or b >= 0x80


def _is_ident_part(b: int) -> bool:
    return _is_ident_start(b) or 0x30 <= b <= 0x39


def tokenize(data: bytes) -> list[Token]:
    """Tokenize Java source bytes; raises LexError on malformed literals."""
    tokens: list[Token] = []
    i = 0
    n = len(data)
    while i < n:
        b = data[i]
        # whitespace
        if b in (0x20, 0x09, 0x0A, 0x0D, 0x0C):
            i += 1
            continue
        # comments
        if data.startswith(b"//", i):
            j = data.find(b"\n", i)
            i = n if j < 0 else j + 1
            continue
        if data.startswith(b"/*", i):
            j = data.find(b"*/", i + 2)
            if j < 0:
                raise LexError(
                    ParseDiagnostic(*_line_col(data, i), "unterminated block comment")
                )
            i = j + 2
            continue
        # identifiers / keywords
        if _is_ident_start(b):
            j = i + 1
            while j < n and _is_ident_part(data[j]):
                j += 1
            word = data[i:j].decode("utf-8", errors="replace")
            kind = "keyword" if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, i, j))
            i = j
            continue
        # numbers (incl. hex/bin, underscores, suffixes, exponents)
        if 0x30 <= b <= 0x39 or (
            b == 0x2E and i + 1 < n and 0x30 <= data[i + 1] <= 0x39
        ):
            j = i + 1
            while j < n:
                c = data[j]
                if _is_ident_part(c) or c == 0x2E:
                    j += 1
                elif c in (0x2B, 0x2D) and data[j - 1] in (0x65, 0x45, 0x70, 0x50):
                    j += 1  # exponent sign
                else:
                    break
            tokens.append(Token("number", data[i:j].decode("ascii", "replace"), i, j))
            i = j
            continue
        # text blocks and string literals
        if data.startswith(b'"""', i):
            j = data.find(b'"""', i + 3)
            if j < 0:
                raise LexError(
                    ParseDiagnostic(*_line_col(data, i), "unterminated text block")
                )
            j += 3
            tokens.append(Token("string", data[i:j].decode("utf-8", "replace"), i, j))
            i = j
            continue
        if b == 0x22 or b == 0x27:  # " or '
            quote = b
            j = i + 1
            while j < n:
                c = data[j]
                if c == 0x5C:  # backslash
                    j += 2
                    continue
                if c == quote:
                    break
                if c == 0x0A:
                    j = n  # newline inside literal: malformed
                    break
                j += 1
            if j >= n:
                what = "string" if quote == 0x22 else "character"
                raise LexError(
                    ParseDiagnostic(*_line_col(data, i), f"unterminated {what} literal")
                )
            j += 1
            kind = "string" if quote == 0x22 else "char"
            tokens.append(Token(kind, data[i:j].decode("utf-8", "replace"), i, j))
            i = j
            continue
        # operators
        matched = False
        for op in _OPERATORS:
            if data.startswith(op, i):
                tokens.append(Token("op", op.decode("ascii"), i, i + len(op)))
                i += len(op)
                matched = True
                break
        if matched:
            continue
        if b in _SINGLE:
            tokens.append(Token("op", chr(b), i, i + 1))
            i += 1
            continue
        raise LexError(
            ParseDiagnostic(*_line_col(data, i), f"unexpected character {chr(b)!r}")
        )
    return tokens
