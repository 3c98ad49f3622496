"""Byte spans over source files and the edit machinery built on them.

All rewriting in this project happens through :class:`EditSet`: rules emit
byte-range replacements against the *original* file and never see
intermediate states, which keeps overlap checkable and conflicts explicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class EditError(Exception):
    """An EditSet violated its invariants (overlap or out-of-bounds span).

    This is a programming bug in a rule, never a user-input problem.
    """


@dataclass(frozen=True, order=True)
class SourceSpan:
    """Half-open byte range [start, end) measured on the raw input bytes."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid span [{self.start}, {self.end})")

    def __len__(self) -> int:
        return self.end - self.start

    def contains(self, other: "SourceSpan") -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, other: "SourceSpan") -> bool:
        return self.start < other.end and other.start < self.end


@dataclass(frozen=True)
class Edit:
    """Replace ``span`` of the original file with ``replacement`` bytes."""

    span: SourceSpan
    replacement: bytes

    @staticmethod
    def delete(start: int, end: int) -> "Edit":
        return Edit(SourceSpan(start, end), b"")

    @staticmethod
    def insert(offset: int, text: bytes) -> "Edit":
        return Edit(SourceSpan(offset, offset), text)

    @staticmethod
    def replace(start: int, end: int, text: bytes) -> "Edit":
        return Edit(SourceSpan(start, end), text)


@dataclass
class EditSet:
    """Ordered, pairwise non-overlapping edits against one file."""

    edits: list[Edit] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.edits)

    def __len__(self) -> int:
        return len(self.edits)

    def add(self, edit: Edit) -> None:
        self.edits.append(edit)

    def extend(self, other: "EditSet") -> None:
        self.edits.extend(other.edits)

    def sorted(self) -> list[Edit]:
        # Insertions at the same offset keep their relative order.
        return sorted(self.edits, key=lambda e: (e.span.start, e.span.end))

    def validate(self, length: int) -> None:
        prev_end = 0
        prev: Edit | None = None
        for edit in self.sorted():
            if edit.span.end > length:
                raise EditError(
                    f"edit span [{edit.span.start}, {edit.span.end}) exceeds "
                    f"text length {length}"
                )
            if prev is not None and edit.span.start < prev_end:
                raise EditError(
                    f"edit spans overlap: [{prev.span.start}, {prev.span.end}) "
                    f"and [{edit.span.start}, {edit.span.end})"
                )
            # Two pure insertions at the same offset are allowed; anything
            # touching actual bytes must not share them.
            prev_end = max(prev_end, edit.span.end)
            if len(edit.span) == 0:
                prev_end = max(prev_end, edit.span.start)
            prev = edit


def apply_edit_set(text: bytes, edits: EditSet) -> bytes:
    """Apply ``edits`` to ``text``; bytes outside all spans are untouched."""
    edits.validate(len(text))
    out = bytearray()
    cursor = 0
    for edit in edits.sorted():
        out += text[cursor : edit.span.start]
        out += edit.replacement
        cursor = edit.span.end
    out += text[cursor:]
    return bytes(out)
