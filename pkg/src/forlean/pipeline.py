"""End-to-end driver: preprocess, tokenize, parse, simplify, translate and
print, keeping per-stage snapshots for the CLI dump flags.

A source string may hold several ``ex.``-delimited texts; each is processed
independently and failures in one text do not abort the others.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forthel import ForthelText
from .lean import LeanCommand, print_command
from .lexicon import Token, TokenKind, UnknownCharacter, detokenize, preprocess, tokenize
from .parsing import Diagnostic, parse_text
from .simplify import simplify
from .translate import UntranslatableNode, translate_text

__all__ = ["PipelineTrace", "run_pipeline", "split_texts"]


@dataclass(frozen=True)
class PipelineTrace:
    """Stage snapshots for one text; parses, normals and commands are
    index-aligned, printed is deduplicated preserving order."""

    source: str
    parses: tuple[ForthelText, ...] = ()
    normals: tuple[ForthelText, ...] = ()
    commands: tuple[LeanCommand, ...] = ()
    printed: tuple[str, ...] = ()
    diagnostics: tuple[Diagnostic, ...] = ()

    @property
    def ok(self) -> bool:
        return bool(self.printed) and not self.diagnostics


def split_texts(tokens: list[Token]) -> list[list[Token]]:
    """Split a token stream on the text delimiter "ex." at sentence starts."""
    starts = [
        i
        for i, tok in enumerate(tokens)
        if tok.kind is TokenKind.WORD
        and tok.text == "ex"
        and i + 1 < len(tokens)
        and tokens[i + 1].kind is TokenKind.PERIOD
        and (i == 0 or tokens[i - 1].kind is TokenKind.PERIOD)
    ]
    if not tokens:
        return []
    if not starts or starts[0] != 0:
        starts = [0] + starts
    bounds = starts + [len(tokens)]
    return [tokens[a:b] for a, b in zip(bounds, bounds[1:])]


def _run_one(tokens: list[Token], first_parse_only: bool) -> PipelineTrace:
    source = detokenize(tokens)
    result = parse_text(tokens)
    if not result.ok:
        return PipelineTrace(source=source, diagnostics=result.diagnostics)
    parses = result.trees[:1] if first_parse_only else result.trees
    normals = tuple(simplify(tree) for tree in parses)
    try:
        commands = tuple(translate_text(normal) for normal in normals)
    except UntranslatableNode as err:
        return PipelineTrace(
            source=source,
            parses=parses,
            normals=normals,
            diagnostics=(((0, 0), f"untranslatable: {err}"),),
        )
    printed = tuple(dict.fromkeys(print_command(command) for command in commands))
    return PipelineTrace(source, parses, normals, commands, printed)


def run_pipeline(source: str, *, first_parse_only: bool = False) -> list[PipelineTrace]:
    """Process every text in ``source``; one trace per text."""
    pre = preprocess(source)
    try:
        tokens = tokenize(pre)
    except UnknownCharacter as err:
        return [PipelineTrace(source=pre, diagnostics=((err.span, str(err)),))]
    return [_run_one(segment, first_parse_only) for segment in split_texts(tokens)]
