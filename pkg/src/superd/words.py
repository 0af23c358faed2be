"""Parsing and rendering words over an indexed alphabet.

Letters 0..25 render as ``a``..``z``.  If the alphabet has more than 26
letters the whole word is written as bracketed indices, e.g. ``[0][27][3]``.
"""

from __future__ import annotations

import re
import string
from typing import Iterable, Sequence

_BRACKETED = re.compile(r"\[(\d+)\]")


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"aabbbaaa"`` or ``"[0][1][27]"`` into a tuple of letter indices."""
    if text.startswith("["):
        pieces = _BRACKETED.findall(text)
        if "".join(f"[{p}]" for p in pieces) != text:
            raise ValueError(f"malformed bracketed word: {text!r}")
        return tuple(int(p) for p in pieces)
    if not all(c in string.ascii_lowercase for c in text):
        raise ValueError(f"words use letters a-z or bracketed indices, got {text!r}")
    return tuple(ord(c) - ord("a") for c in text)


def render_word(word: Sequence[int], alphabet_size: int | None = None) -> str:
    size = alphabet_size if alphabet_size is not None else max(word, default=-1) + 1
    if size <= 26:
        return "".join(string.ascii_lowercase[x] for x in word)
    return "".join(f"[{x}]" for x in word)


def sort_words(words: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Lexicographic order by letter index, so ``a < aa < ab < b``."""
    return sorted(tuple(w) for w in words)


def rainbow(n: int) -> tuple[int, ...]:
    return tuple(range(n))
