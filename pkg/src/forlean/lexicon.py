"""Lexical layer: input normalization, tokenization, and the lexicon tables
shared by the parser and the translator.

The lexicon is a static table loaded from ``data/lexicon.tsv`` (one entry per
line, ``category<TAB>KEY<TAB>form1|form2|...``).  Surface forms may span
several words ("less than or equal to") and singular/plural variants of a
noun map to the same entry, so number agreement is deliberately not checked:
"x are an odd integers" is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

__all__ = [
    "Category",
    "Lexicon",
    "LexiconEntry",
    "LexiconError",
    "Token",
    "TokenKind",
    "UnknownCharacter",
    "default_lexicon",
    "detokenize",
    "match_lexicon",
    "preprocess",
    "tokenize",
]

SYMBOLS = "+-*/^(),"


class TokenKind(Enum):
    WORD = "Word"
    INT_LIT = "IntLit"
    SYMBOL = "Symbol"
    PERIOD = "Period"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    value: int | None = None
    # byte offsets into the tokenized string; excluded from equality so that
    # tokens compare by content
    span: tuple[int, int] = field(default=(0, 0), compare=False)

    def __repr__(self) -> str:
        if self.kind is TokenKind.INT_LIT:
            return f"IntLit({self.value})"
        return f"{self.kind.value}({self.text!r})"


class UnknownCharacter(ValueError):
    """A character outside letters, digits, symbols, whitespace and '.'."""

    def __init__(self, char: str, span: tuple[int, int]):
        super().__init__(f"unknown character {char!r} at byte offset {span[0]}")
        self.char = char
        self.span = span


def preprocess(raw: str) -> str:
    """Lowercase the input and collapse whitespace runs to single spaces."""
    return " ".join(raw.lower().split())


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _byte_offsets(text: str) -> list[int]:
    offsets = [0]
    total = 0
    for ch in text:
        total += len(ch.encode("utf-8"))
        offsets.append(total)
    return offsets


def tokenize(text: str) -> list[Token]:
    """Turn preprocessed text into word/integer/symbol/period tokens.

    The symbols ``+ - * / ^ ( ) ,`` and the sentence terminator ``.`` become
    their own tokens even when glued to words.  A ``-`` immediately followed
    by digits is a negative integer literal; a spaced ``-`` is the binary
    operator.  An apostrophe is allowed inside a word ("it's").
    """
    offsets = _byte_offsets(text)
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == ".":
            tokens.append(Token(TokenKind.PERIOD, ".", span=(offsets[i], offsets[i + 1])))
            i += 1
        elif ch == "-" and i + 1 < n and _is_digit(text[i + 1]):
            j = i + 1
            while j < n and _is_digit(text[j]):
                j += 1
            lit = text[i:j]
            tokens.append(Token(TokenKind.INT_LIT, lit, value=int(lit), span=(offsets[i], offsets[j])))
            i = j
        elif ch in SYMBOLS:
            tokens.append(Token(TokenKind.SYMBOL, ch, span=(offsets[i], offsets[i + 1])))
            i += 1
        elif _is_digit(ch):
            j = i
            while j < n and _is_digit(text[j]):
                j += 1
            lit = text[i:j]
            tokens.append(Token(TokenKind.INT_LIT, lit, value=int(lit), span=(offsets[i], offsets[j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalpha() or (text[j] == "'" and j > i)):
                j += 1
            tokens.append(Token(TokenKind.WORD, text[i:j], span=(offsets[i], offsets[j])))
            i = j
        else:
            raise UnknownCharacter(ch, (offsets[i], offsets[i + 1]))
    return tokens


def detokenize(tokens: Iterable[Token]) -> str:
    """Join token texts with single spaces (inverse of tokenize up to spans)."""
    return " ".join(t.text for t in tokens)


class Category(Enum):
    RAW_NOUN0 = "rawNoun0"
    RAW_NOUN2 = "rawNoun2"
    RAW_ADJECTIVE0 = "rawAdjective0"
    RAW_ADJECTIVE1 = "rawAdjective1"
    VARIABLE = "variable"


@dataclass(frozen=True)
class LexiconEntry:
    category: Category
    key: str
    # alternative surface forms, each a sequence of token texts
    surface: tuple[tuple[str, ...], ...]


class LexiconError(ValueError):
    pass


class Lexicon:
    """A matchable collection of lexicon entries."""

    def __init__(self, entries: Iterable[LexiconEntry]):
        self._entries = tuple(entries)
        seen: set[tuple[Category, tuple[str, ...]]] = set()
        for entry in self._entries:
            for form in entry.surface:
                if not form or not all(form):
                    raise LexiconError(f"empty surface form in entry {entry.key}")
                marker = (entry.category, form)
                if marker in seen:
                    raise LexiconError(
                        f"duplicate surface form {' '.join(form)!r} in category {entry.category.value}"
                    )
                seen.add(marker)

    @classmethod
    def parse(cls, text: str) -> "Lexicon":
        entries = []
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise LexiconError(f"line {line_no}: expected 3 tab-separated fields")
            cat_name, key, forms = parts
            try:
                category = Category(cat_name)
            except ValueError:
                raise LexiconError(f"line {line_no}: unknown category {cat_name!r}") from None
            surface = tuple(tuple(form.split()) for form in forms.split("|"))
            entries.append(LexiconEntry(category, key, surface))
        return cls(entries)

    @classmethod
    def load(cls, path) -> "Lexicon":
        with open(path, encoding="utf-8") as handle:
            return cls.parse(handle.read())

    def entries(self, category: Category | None = None) -> tuple[LexiconEntry, ...]:
        if category is None:
            return self._entries
        return tuple(e for e in self._entries if e.category is category)

    def keys(self, category: Category) -> tuple[str, ...]:
        return tuple(e.key for e in self.entries(category))

    @staticmethod
    def _element_matches(element: str, token: Token) -> bool:
        if len(element) == 1 and element in SYMBOLS:
            return token.kind is TokenKind.SYMBOL and token.text == element
        return token.kind is TokenKind.WORD and token.text == element

    def match(self, tokens: Sequence[Token], position: int) -> list[tuple[LexiconEntry, int]]:
        """Every entry whose surface form starts at ``position``, longest first.

        All matches are returned; ambiguity between overlapping forms (such as
        "greater than" inside "greater than or equal to") is left to the
        parser.
        """
        if position < 0 or position > len(tokens):
            raise IndexError(f"position {position} out of range")
        out: list[tuple[LexiconEntry, int]] = []
        for entry in self._entries:
            for form in entry.surface:
                if position + len(form) > len(tokens):
                    continue
                if all(
                    self._element_matches(el, tokens[position + k])
                    for k, el in enumerate(form)
                ):
                    candidate = (entry, len(form))
                    if candidate not in out:
                        out.append(candidate)
        out.sort(key=lambda pair: (-pair[1], pair[0].category.value, pair[0].key))
        return out


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    data = resources.files("forlean").joinpath("data/lexicon.tsv").read_text("utf-8")
    return Lexicon.parse(data)


def match_lexicon(
    tokens: Sequence[Token], position: int, lexicon: Lexicon | None = None
) -> list[tuple[LexiconEntry, int]]:
    return (lexicon or default_lexicon()).match(tokens, position)
