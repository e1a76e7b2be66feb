"""Reader for the printer's Lean fragment.

The corpus harness compares outputs modulo renaming, so it needs to parse
expected output strings back into command trees before normalizing them.
Only the fixed fragment the printer emits is supported: fully parenthesized
compound terms and propositions, bare relations and applications, and
``∀``/``∃`` with a single annotated binder.
"""

from __future__ import annotations

import re

from .lean import (
    AndP,
    ArithT,
    Exists,
    Forall,
    HypBinder,
    IffP,
    Imp,
    LeanCommand,
    LeanProp,
    LeanTerm,
    LeanType,
    LitT,
    NotP,
    OrP,
    PredApp,
    Rel,
    TypeBinder,
    VarT,
)

__all__ = ["LeanReadError", "read_command"]

_TOKEN_RE = re.compile(r":=|-?[0-9]+|[A-Za-z][A-Za-z0-9]*|[()∀∃∧∨¬→↔≤≥≠ℝℤℚ<>=+\-*/^:,]")

_TYPES = {t.value: t for t in LeanType}
_RELS = {"<", "≤", ">", "≥", "=", "≠"}
_ARITH = {"+", "-", "*", "/", "^"}
_CONNECTIVES = {"∧": AndP, "∨": OrP, "→": Imp, "↔": IffP}
_PREDS = {"pos", "odd", "even", "nneg", "neg"}
_INT_RE = re.compile(r"-?[0-9]+\Z")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


class LeanReadError(ValueError):
    pass


def _lex(text: str) -> list[str]:
    tokens = []
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        if text[pos : m.start()].strip():
            raise LeanReadError(f"unreadable input at {text[pos:m.start()]!r}")
        tokens.append(m.group())
        pos = m.end()
    if text[pos:].strip():
        raise LeanReadError(f"unreadable input at {text[pos:]!r}")
    return tokens


class _Reader:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> str | None:
        i = self.pos + ahead
        return self.toks[i] if i < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise LeanReadError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.take()
        if tok != text:
            raise LeanReadError(f"expected {text!r}, found {tok!r}")

    # --- grammar ------------------------------------------------------------

    def command(self) -> LeanCommand:
        self.expect("example")
        binders: list = []
        while self.peek() == "(":
            binders.append(self.binder())
        self.expect(":")
        goal = self.prop()
        self.expect(":=")
        self.expect("sorry")
        if self.peek() is not None:
            raise LeanReadError(f"trailing input at {self.peek()!r}")
        return LeanCommand(tuple(binders), goal)

    def binder(self):
        self.expect("(")
        name = self.take()
        if not _IDENT_RE.fullmatch(name):
            raise LeanReadError(f"bad binder name {name!r}")
        self.expect(":")
        tok = self.peek()
        if tok in _TYPES and self.peek(1) == ")":
            self.take()
            self.expect(")")
            return TypeBinder(name, _TYPES[tok])
        prop = self.prop()
        self.expect(")")
        return HypBinder(name, prop)

    def prop(self) -> LeanProp:
        tok = self.peek()
        if tok in ("∀", "∃"):
            return self.quantifier()
        if tok == "(":
            saved = self.pos
            try:
                return self.compound()
            except LeanReadError:
                self.pos = saved
            return self.relation()
        if tok in _PREDS:
            self.take()
            return PredApp(tok, self.term())
        return self.relation()

    def quantifier(self) -> LeanProp:
        head = self.take()
        self.expect("(")
        name = self.take()
        self.expect(":")
        type_tok = self.take()
        if type_tok not in _TYPES:
            raise LeanReadError(f"bad binder type {type_tok!r}")
        self.expect(")")
        self.expect(",")
        body = self.prop()
        cls = Forall if head == "∀" else Exists
        return cls(name, _TYPES[type_tok], body)

    def compound(self) -> LeanProp:
        self.expect("(")
        if self.peek() == "¬":
            self.take()
            body = self.prop()
            self.expect(")")
            return NotP(body)
        left = self.prop()
        conn = self.take()
        if conn not in _CONNECTIVES:
            raise LeanReadError(f"expected a connective, found {conn!r}")
        right = self.prop()
        self.expect(")")
        return _CONNECTIVES[conn](left, right)

    def relation(self) -> LeanProp:
        left = self.term()
        op = self.take()
        if op not in _RELS:
            raise LeanReadError(f"expected a relation, found {op!r}")
        return Rel(op, left, self.term())

    def term(self) -> LeanTerm:
        tok = self.take()
        if _INT_RE.fullmatch(tok):
            return LitT(int(tok))
        if tok == "(":
            left = self.term()
            op = self.take()
            if op not in _ARITH:
                raise LeanReadError(f"expected an operator, found {op!r}")
            right = self.term()
            self.expect(")")
            return ArithT(op, left, right)
        if _IDENT_RE.fullmatch(tok):
            return VarT(tok)
        raise LeanReadError(f"expected a term, found {tok!r}")


def read_command(text: str) -> LeanCommand:
    """Parse one printed command back into its tree."""
    return _Reader(_lex(text)).command()
