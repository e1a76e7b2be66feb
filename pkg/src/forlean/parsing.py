"""Parser for the controlled language, returning every tree the grammar
admits for a token stream.

Arithmetic precedence, tightest first: ``^``, then ``* /``, then ``-``, then
``+``; each level is left-associative and parentheses override.  Statement
connectives, tightest first: "and", ",", "or", "iff", "if ... then"; "and",
"," and "or" associate to the right.  Genuinely ambiguous inputs yield
multiple trees; the documented case is "not equal to", which parses both as
the lexical unit and as polarity "not" plus "equal to".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .forthel import (
    And,
    BinApp,
    Does,
    Example,
    ForQuantified,
    ForthelText,
    IfThen,
    Iff,
    IntLit,
    IsAdj,
    IsAdj1,
    IsNotion,
    IsPred,
    IsTerm,
    Meta,
    MetaVar,
    Named,
    Not,
    Notion,
    Or,
    Polarity,
    Quantified,
    QuantifiedNotion,
    Quantifier,
    SuchThat,
    ThereExists,
    ThereExistsNo,
    Unnamed,
    Var,
)
from .lexicon import Category, Lexicon, Token, TokenKind, default_lexicon

__all__ = ["ParseFailure", "ParseResult", "parse_statement", "parse_term", "parse_text"]

Diagnostic = tuple[tuple[int, int], str]


@dataclass(frozen=True)
class ParseResult:
    """All distinct parses, or diagnostics at the point of furthest progress."""

    trees: tuple
    diagnostics: tuple[Diagnostic, ...] = ()

    @property
    def ok(self) -> bool:
        return bool(self.trees)

    def expect_trees(self) -> tuple:
        if not self.trees:
            raise ParseFailure(self.diagnostics)
        return self.trees


class ParseFailure(ValueError):
    def __init__(self, diagnostics: tuple[Diagnostic, ...]):
        span, message = diagnostics[0] if diagnostics else ((0, 0), "no parse")
        super().__init__(f"{message} (bytes {span[0]}..{span[1]})")
        self.diagnostics = diagnostics
        self.span = span


# arithmetic levels, loosest first; (symbol, rawNoun2 key) per level
_TERM_LEVELS = (
    (("+", "SUM"),),
    (("-", "MINUS"),),
    (("*", "PROD"), ("/", "DIV")),
    (("^", "EXP"),),
)


class _Parser:
    """Backtracking recursive descent; every production returns all
    (node, next_position) alternatives."""

    def __init__(self, tokens: Sequence[Token], lexicon: Lexicon):
        self.toks = list(tokens)
        self.lex = lexicon
        self.furthest = 0
        self.expected: set[str] = set()

    # --- primitives ---------------------------------------------------------

    def _tok(self, pos: int) -> Token | None:
        return self.toks[pos] if pos < len(self.toks) else None

    def _want(self, pos: int, what: str) -> None:
        if pos > self.furthest:
            self.furthest = pos
            self.expected = {what}
        elif pos == self.furthest:
            self.expected.add(what)

    def word(self, pos: int, text: str) -> list[int]:
        t = self._tok(pos)
        if t is not None and t.kind is TokenKind.WORD and t.text == text:
            return [pos + 1]
        self._want(pos, repr(text))
        return []

    def word_any(self, pos: int, texts: tuple[str, ...]) -> list[int]:
        out = []
        for text in texts:
            out.extend(self.word(pos, text))
        return out

    def words(self, pos: int, texts: tuple[str, ...]) -> list[int]:
        positions = [pos]
        for text in texts:
            positions = [p1 for p in positions for p1 in self.word(p, text)]
        return positions

    def symbol(self, pos: int, text: str) -> list[int]:
        t = self._tok(pos)
        if t is not None and t.kind is TokenKind.SYMBOL and t.text == text:
            return [pos + 1]
        self._want(pos, repr(text))
        return []

    def period(self, pos: int) -> list[int]:
        t = self._tok(pos)
        if t is not None and t.kind is TokenKind.PERIOD:
            return [pos + 1]
        self._want(pos, "'.'")
        return []

    def lex_matches(self, pos: int, category: Category) -> list[tuple]:
        matches = [
            (entry, pos + length)
            for entry, length in self.lex.match(self.toks, pos)
            if entry.category is category
        ]
        if not matches:
            self._want(pos, category.value)
        return matches

    # --- texts --------------------------------------------------------------

    def text(self, pos: int) -> list[tuple]:
        out = []
        for p1 in self.word(pos, "ex"):
            for p2 in self.period(p1):
                for assumptions, p3 in self.assumption_list(p2):
                    # "then" is optional and not recorded in the tree
                    for p4 in self.word(p3, "then") + [p3]:
                        for conclusion, p5 in self.statement(p4):
                            for p6 in self.period(p5):
                                out.append(
                                    (ForthelText(Example(assumptions, conclusion)), p6)
                                )
        return out

    def assumption_list(self, pos: int) -> list[tuple]:
        out: list[tuple] = [((), pos)]
        for p1 in self.word(pos, "assume"):
            for stmt, p2 in self.statement(p1):
                for p3 in self.period(p2):
                    for rest, p4 in self.assumption_list(p3):
                        out.append(((stmt, *rest), p4))
        return out

    # --- statements ---------------------------------------------------------

    def statement(self, pos: int) -> list[tuple]:
        out = []
        for p1 in self.word(pos, "if"):
            for antecedent, p2 in self.statement(p1):
                for p3 in self.word(p2, "then"):
                    for consequent, p4 in self.statement(p3):
                        out.append((IfThen(antecedent, consequent), p4))
        out.extend(self.iff_level(pos))
        return out

    def _infix_right(self, pos, sub: Callable, sep: Callable, build) -> list[tuple]:
        out = []
        for left, p1 in sub(pos):
            out.append((left, p1))
            for p2 in sep(p1):
                for right, p3 in self._infix_right(p2, sub, sep, build):
                    out.append((build(left, right), p3))
        return out

    def iff_level(self, pos: int) -> list[tuple]:
        return self._infix_right(pos, self.or_level, lambda p: self.word(p, "iff"), Iff)

    def or_level(self, pos: int) -> list[tuple]:
        return self._infix_right(pos, self.comma_level, lambda p: self.word(p, "or"), Or)

    def comma_level(self, pos: int) -> list[tuple]:
        return self._infix_right(pos, self.and_level, lambda p: self.symbol(p, ","), And)

    def and_level(self, pos: int) -> list[tuple]:
        return self._infix_right(pos, self.atom_statement, lambda p: self.word(p, "and"), And)

    def atom_statement(self, pos: int) -> list[tuple]:
        out = []
        for p1 in self.words(pos, ("it's", "not", "that")):
            for body, p2 in self.statement(p1):
                out.append((Not(body), p2))
        for p1 in self.word(pos, "for"):
            for qnotion, p2 in self.quantified_notion(p1):
                for p3 in self.symbol(p2, ","):
                    for body, p4 in self.statement(p3):
                        out.append((ForQuantified(qnotion, body), p4))
        for p1 in self.word(pos, "there"):
            for p2 in self.word_any(p1, ("exists", "exist")):
                for p3 in self.word(p2, "no"):
                    for notion, p4 in self.notion(p3):
                        out.append((ThereExistsNo(notion), p4))
                for p3 in self.opt_article(p2):
                    for notion, p4 in self.notion(p3):
                        out.append((ThereExists(notion), p4))
        for subject, p1 in self.term(pos):
            for predicate, p2 in self.does_predicate(p1):
                out.append((Does(subject, predicate), p2))
        return out

    # --- predicates ---------------------------------------------------------

    def polarity(self, pos: int) -> list[tuple]:
        return [(Polarity.POS, pos)] + [(Polarity.NEG, p) for p in self.word(pos, "not")]

    def opt_article(self, pos: int) -> list[int]:
        return [pos] + self.word_any(pos, ("a", "an"))

    def does_predicate(self, pos: int) -> list[tuple]:
        out = []
        for p1 in self.word_any(pos, ("is", "are")):
            for polarity, p2 in self.polarity(p1):
                for entry, p3 in self.lex_matches(p2, Category.RAW_ADJECTIVE0):
                    out.append((IsAdj(polarity, entry.key), p3))
                for entry, p3 in self.lex_matches(p2, Category.RAW_ADJECTIVE1):
                    for term, p4 in self.term(p3):
                        out.append((IsAdj1(polarity, entry.key, term), p4))
                for p3 in self.opt_article(p2):
                    for notion, p4 in self.notion(p3):
                        out.append((IsNotion(polarity, notion), p4))
                for term, p3 in self.definite_term(p2):
                    out.append((IsTerm(polarity, term), p3))
        return out

    # --- notions ------------------------------------------------------------

    def notion(self, pos: int) -> list[tuple]:
        out = []
        lefts: list[tuple] = [(None, pos)]
        lefts += [(e.key, p) for e, p in self.lex_matches(pos, Category.RAW_ADJECTIVE0)]
        for left, p1 in lefts:
            for head, p2 in self.lex_matches(p1, Category.RAW_NOUN0):
                for name, p3 in self.name_slot(p2):
                    for right, p4 in self.right_attribute(p3):
                        out.append((Notion(head.key, name, left, right), p4))
        return out

    def name_slot(self, pos: int) -> list[tuple]:
        out: list[tuple] = [(Unnamed(), pos)]
        for entry, p1 in self.lex_matches(pos, Category.VARIABLE):
            out.append((Named(entry.key), p1))
        for mv, p1 in self.meta_ref(pos):
            out.append((Meta(mv.ident), p1))
        return out

    def right_attribute(self, pos: int) -> list[tuple]:
        out: list[tuple] = [(None, pos)]
        for polarity, p1 in self.polarity(pos):
            for entry, p2 in self.lex_matches(p1, Category.RAW_ADJECTIVE0):
                out.append((IsPred(IsAdj(polarity, entry.key)), p2))
            for entry, p2 in self.lex_matches(p1, Category.RAW_ADJECTIVE1):
                for term, p3 in self.term(p2):
                    out.append((IsPred(IsAdj1(polarity, entry.key, term)), p3))
        for p1 in self.word(pos, "that"):
            for predicate, p2 in self.does_predicate(p1):
                out.append((IsPred(predicate), p2))
        for p1 in self.words(pos, ("such", "that")):
            for stmt, p2 in self.statement(p1):
                out.append((SuchThat(stmt), p2))
        return out

    def quantified_notion(self, pos: int) -> list[tuple]:
        out = []
        for quantifier in Quantifier:
            for p1 in self.word(pos, quantifier.value):
                for notion, p2 in self.notion(p1):
                    out.append((QuantifiedNotion(quantifier, notion), p2))
        return out

    # --- terms ----------------------------------------------------------------

    def term(self, pos: int, level: int = 0) -> list[tuple]:
        if level == len(_TERM_LEVELS):
            return self.atom_term(pos)
        sub = lambda p: self.term(p, level + 1)
        results = list(sub(pos))
        frontier = list(results)
        while frontier:
            grown = []
            for left, p in frontier:
                for symbol, key in _TERM_LEVELS[level]:
                    for p1 in self.symbol(p, symbol):
                        for right, p2 in sub(p1):
                            grown.append((BinApp(key, left, right), p2))
            results.extend(grown)
            frontier = grown
        return results

    def definite_term(self, pos: int) -> list[tuple]:
        return [(t, p) for t, p in self.term(pos) if not isinstance(t, Quantified)]

    def atom_term(self, pos: int) -> list[tuple]:
        out: list[tuple] = []
        t = self._tok(pos)
        if t is not None and t.kind is TokenKind.INT_LIT:
            out.append((IntLit(t.value), pos + 1))
        else:
            self._want(pos, "integer literal")
        for entry, p1 in self.lex_matches(pos, Category.VARIABLE):
            out.append((Var(entry.key), p1))
        out.extend(self.meta_ref(pos))
        for p1 in self.symbol(pos, "("):
            for inner, p2 in self.term(p1):
                for p3 in self.symbol(p2, ")"):
                    out.append((inner, p3))
        for qnotion, p1 in self.quantified_notion(pos):
            out.append((Quantified(qnotion), p1))
        return out

    def meta_ref(self, pos: int) -> list[tuple]:
        # generated-name reference "(x N)"
        out = []
        for p1 in self.symbol(pos, "("):
            for p2 in self.word(p1, "x"):
                t = self._tok(p2)
                if t is not None and t.kind is TokenKind.INT_LIT and t.value >= 0:
                    for p3 in self.symbol(p2 + 1, ")"):
                        out.append((MetaVar(t.value), p3))
        return out


def _run(tokens: Sequence[Token], lexicon: Lexicon | None, production: str) -> ParseResult:
    parser = _Parser(tokens, lexicon or default_lexicon())
    results = getattr(parser, production)(0)
    trees: list = []
    for tree, end in results:
        if end == len(parser.toks) and tree not in trees:
            trees.append(tree)
    if trees:
        return ParseResult(tuple(trees))
    at = min(parser.furthest, len(parser.toks))
    if at < len(parser.toks):
        span = parser.toks[at].span
        found = f"found {parser.toks[at].text!r}"
    else:
        end_offset = parser.toks[-1].span[1] if parser.toks else 0
        span = (end_offset, end_offset)
        found = "found end of input"
    message = f"expected {', '.join(sorted(parser.expected))}; {found}"
    return ParseResult((), ((span, message),))


def parse_text(tokens: Sequence[Token], lexicon: Lexicon | None = None) -> ParseResult:
    """Parse a full text ``ex. <assumptions> [then] <statement> .``"""
    return _run(tokens, lexicon, "text")


def parse_statement(tokens: Sequence[Token], lexicon: Lexicon | None = None) -> ParseResult:
    """Parse the token list as one complete statement."""
    return _run(tokens, lexicon, "statement")


def parse_term(tokens: Sequence[Token], lexicon: Lexicon | None = None) -> ParseResult:
    """Parse the token list as one complete arithmetic term."""
    return _run(tokens, lexicon, "term")
