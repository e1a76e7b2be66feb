"""Tree normalization between parsing and translation.

Passes run in this order: fresh-name assignment, variable unification,
quantifier raising, attribute flattening, assumption splitting.  The middle
three repeat until nothing changes: flattening an adjectival attribute can
expose an in-situ quantifier that still has to be raised, and raising can
expose a clause whose metavariable still has to unify.  On ordinary input one
round suffices.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .forthel import (
    And,
    BinApp,
    Does,
    Example,
    ForQuantified,
    ForthelText,
    IfThen,
    Iff,
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
    Predicate,
    Quantified,
    QuantifiedNotion,
    Statement,
    SuchThat,
    Term,
    ThereExists,
    ThereExistsNo,
    Unnamed,
    Var,
)

__all__ = [
    "NameSupply",
    "assign_names",
    "flatten_attributes",
    "is_normal_form",
    "normal_form_violations",
    "raise_quantifiers",
    "simplify",
    "split_assumptions",
    "unify_variables",
]


@dataclass
class NameSupply:
    """Source of fresh metavariable ids, avoiding every name already in use."""

    used_names: frozenset[str] = frozenset()
    next_id: int = 1

    def fresh(self) -> int:
        while f"x{self.next_id}" in self.used_names:
            self.next_id += 1
        ident = self.next_id
        self.next_id += 1
        return ident

    @classmethod
    def for_text(cls, text: ForthelText) -> "NameSupply":
        return cls(used_names=frozenset(_names_in(text)))


def _names_in(node) -> set[str]:
    names: set[str] = set()

    def visit(n) -> None:
        match n:
            case Var(name):
                names.add(name)
            case Named(letter):
                names.add(letter)
            case Meta(ident) | MetaVar(ident):
                names.add(f"x{ident}")
        if dataclasses.is_dataclass(n):
            for f in dataclasses.fields(n):
                visit(getattr(n, f.name))
        elif isinstance(n, tuple):
            for item in n:
                visit(item)

    visit(node)
    return names


def _name_ref(notion: Notion) -> Term:
    match notion.name:
        case Named(letter):
            return Var(letter)
        case Meta(ident):
            return MetaVar(ident)
    raise ValueError(f"notion {notion!r} has no name")


# --- fresh names --------------------------------------------------------------


def assign_names(text: ForthelText, supply: NameSupply) -> ForthelText:
    """Replace every unnamed notion slot by a fresh metavariable name."""
    return _map_text(text, lambda s: _an_stmt(s, supply))


def _an_stmt(s: Statement, supply) -> Statement:
    return _rebuild_stmt(
        s,
        on_term=lambda t: _an_term(t, supply),
        on_notion=lambda n: _an_notion(n, supply),
    )


def _an_notion(n: Notion, supply) -> Notion:
    name = Meta(supply.fresh()) if isinstance(n.name, Unnamed) else n.name
    right = _rebuild_right(
        n.right_attribute,
        on_term=lambda t: _an_term(t, supply),
        on_notion=lambda m: _an_notion(m, supply),
    )
    return Notion(n.head, name, n.left_attribute, right)


def _an_term(t: Term, supply) -> Term:
    match t:
        case BinApp(op, left, right):
            return BinApp(op, _an_term(left, supply), _an_term(right, supply))
        case Quantified(qn):
            return Quantified(QuantifiedNotion(qn.quantifier, _an_notion(qn.notion, supply)))
    return t


# --- variable unification -------------------------------------------------------


def unify_variables(text: ForthelText) -> ForthelText:
    """In "v is a <notion named (x n)>", rename the metavariable to v,
    including every reference to it inside the notion's condition."""
    return _map_text(text, _uv_stmt)


def _uv_stmt(s: Statement) -> Statement:
    s = _rebuild_stmt(s, on_term=_uv_term, on_notion=_uv_notion, on_stmt=_uv_stmt)
    match s:
        case Does(Var(v), IsNotion(polarity, notion)) if isinstance(notion.name, Meta):
            renamed = _substitute_meta(notion, notion.name.ident, v)
            return Does(Var(v), IsNotion(polarity, renamed))
    return s


def _substitute_meta(node, ident: int, letter: str):
    match node:
        case Meta(i) if i == ident:
            return Named(letter)
        case MetaVar(i) if i == ident:
            return Var(letter)
    if dataclasses.is_dataclass(node):
        return type(node)(
            **{
                f.name: _substitute_meta(getattr(node, f.name), ident, letter)
                for f in dataclasses.fields(node)
            }
        )
    if isinstance(node, tuple):
        return tuple(_substitute_meta(item, ident, letter) for item in node)
    return node


def _uv_notion(n: Notion) -> Notion:
    right = _rebuild_right(n.right_attribute, on_term=_uv_term, on_notion=_uv_notion, on_stmt=_uv_stmt)
    return dataclasses.replace(n, right_attribute=right)


def _uv_term(t: Term) -> Term:
    match t:
        case BinApp(op, left, right):
            return BinApp(op, _uv_term(left), _uv_term(right))
        case Quantified(qn):
            return Quantified(QuantifiedNotion(qn.quantifier, _uv_notion(qn.notion)))
    return t


# --- quantifier raising ----------------------------------------------------------


def raise_quantifiers(stmt: Statement) -> Statement:
    """Turn in-situ quantified terms into leading ex-situ quantifiers.

    The subject is raised first, then quantified terms inside the predicate,
    left to right; earlier raisings scope over later ones.
    """
    match stmt:
        case Does():
            return _raise_does(stmt)
    return _rebuild_stmt(stmt, on_notion=_raise_notion, on_stmt=raise_quantifiers)


def _raise_does(does: Does) -> Statement:
    found = _find_quantified(does.subject)
    where = "subject"
    if found is None:
        where = "predicate"
        match does.predicate:
            case IsAdj1(_, _, term) | IsTerm(_, term):
                found = _find_quantified(term)
    if found is None:
        # nothing in-situ; still normalize nested such-that statements
        predicate = _rebuild_pred(does.predicate, on_notion=_raise_notion)
        return Does(does.subject, predicate)
    ref = _name_ref(found.qnotion.notion)
    if where == "subject":
        residual = Does(_replace_first(does.subject, found, ref), does.predicate)
    else:
        match does.predicate:
            case IsAdj1(pol, adj, term):
                residual = Does(does.subject, IsAdj1(pol, adj, _replace_first(term, found, ref)))
            case IsTerm(pol, term):
                residual = Does(does.subject, IsTerm(pol, _replace_first(term, found, ref)))
    qn = QuantifiedNotion(found.qnotion.quantifier, _raise_notion(found.qnotion.notion))
    return ForQuantified(qn, _raise_does(residual))


def _raise_notion(n: Notion) -> Notion:
    right = _rebuild_right(n.right_attribute, on_notion=_raise_notion, on_stmt=raise_quantifiers)
    return dataclasses.replace(n, right_attribute=right)


def _find_quantified(t: Term) -> Quantified | None:
    match t:
        case Quantified():
            return t
        case BinApp(_, left, right):
            return _find_quantified(left) or _find_quantified(right)
    return None


def _replace_first(t: Term, target: Quantified, ref: Term) -> Term:
    if t == target:
        return ref
    match t:
        case BinApp(op, left, right):
            new_left = _replace_first(left, target, ref)
            if new_left != left:
                return BinApp(op, new_left, right)
            return BinApp(op, left, _replace_first(right, target, ref))
    return t


# --- attribute flattening ---------------------------------------------------------


def flatten_attributes(n: Notion) -> Notion:
    """Rewrite the left adjective and an adjectival right attribute as a
    single such-that condition; conjunct order is left attribute first."""
    subject = _name_ref(n)
    right = n.right_attribute
    conjuncts: list[Statement] = []
    if n.left_attribute is not None:
        conjuncts.append(Does(subject, IsAdj(Polarity.POS, n.left_attribute)))
    match right:
        case IsPred(predicate):
            conjuncts.append(Does(subject, _flatten_pred(predicate)))
        case SuchThat(statement):
            conjuncts.append(_flatten_stmt(statement))
    if n.left_attribute is None and not isinstance(right, IsPred):
        if isinstance(right, SuchThat):
            return Notion(n.head, n.name, None, SuchThat(conjuncts[0]))
        return n
    return Notion(n.head, n.name, None, SuchThat(_conjoin(conjuncts)))


def _conjoin(conjuncts: list[Statement]) -> Statement:
    if len(conjuncts) == 1:
        return conjuncts[0]
    return And(conjuncts[0], _conjoin(conjuncts[1:]))


def _flatten_stmt(s: Statement) -> Statement:
    return _rebuild_stmt(s, on_term=_flatten_term, on_notion=flatten_attributes, on_stmt=_flatten_stmt)


def _flatten_pred(p: Predicate) -> Predicate:
    return _rebuild_pred(p, on_term=_flatten_term, on_notion=flatten_attributes)


def _flatten_term(t: Term) -> Term:
    match t:
        case BinApp(op, left, right):
            return BinApp(op, _flatten_term(left), _flatten_term(right))
        case Quantified(qn):
            return Quantified(QuantifiedNotion(qn.quantifier, flatten_attributes(qn.notion)))
    return t


# --- assumption splitting -----------------------------------------------------------


def split_assumptions(ex: Example) -> Example:
    """Split conjunctive assumptions, and "v is a <notion such that S>" into
    the bare typing assumption followed by the conjuncts of S."""
    out: list[Statement] = []
    for assumption in ex.assumptions:
        out.extend(_split_one(assumption))
    return Example(tuple(out), ex.conclusion)


def _split_one(stmt: Statement) -> list[Statement]:
    match stmt:
        case And(left, right):
            return _split_one(left) + _split_one(right)
        case Does(Var(v), IsNotion(Polarity.POS, n)) if (
            n.name == Named(v)
            and n.left_attribute is None
            and isinstance(n.right_attribute, SuchThat)
        ):
            bare = Does(Var(v), IsNotion(Polarity.POS, Notion(n.head, n.name)))
            rest = [
                piece
                for conjunct in _conjuncts(n.right_attribute.statement)
                for piece in _split_one(conjunct)
            ]
            return [bare, *rest]
    return [stmt]


def _conjuncts(s: Statement) -> list[Statement]:
    match s:
        case And(left, right):
            return _conjuncts(left) + _conjuncts(right)
    return [s]


# --- the composed pass ----------------------------------------------------------------


def simplify(text: ForthelText) -> ForthelText:
    """Full normalization; the result satisfies the normal-form invariants.

    Unification stays in the loop because raising can expose new "v is a
    <notion>" clauses (a quantified subject over a notion predicate) whose
    metavariables still have to unify; one round suffices on ordinary input.
    """
    supply = NameSupply.for_text(text)
    t = assign_names(text, supply)
    while True:
        t2 = _map_text(_map_text(unify_variables(t), raise_quantifiers), _flatten_stmt)
        if t2 == t:
            break
        t = t2
    return ForthelText(split_assumptions(t.example))


# --- normal-form checking ----------------------------------------------------------------


def normal_form_violations(text: ForthelText) -> tuple[str, ...]:
    """Why ``text`` is not in simplifier normal form; empty when it is."""
    problems: list[str] = []

    def visit(node) -> None:
        match node:
            case Unnamed():
                problems.append("unnamed notion")
            case Quantified():
                problems.append("in-situ quantified term")
            case Notion(_, _, left, right):
                if left is not None:
                    problems.append(f"left attribute {left}")
                if isinstance(right, IsPred):
                    problems.append("adjectival right attribute")
        if dataclasses.is_dataclass(node):
            for f in dataclasses.fields(node):
                visit(getattr(node, f.name))
        elif isinstance(node, tuple):
            for item in node:
                visit(item)

    visit(text)
    for assumption in text.example.assumptions:
        if isinstance(assumption, And):
            problems.append("conjunctive assumption")
        elif _split_one(assumption) != [assumption]:
            problems.append("unsplit typing assumption")
    return tuple(problems)


def is_normal_form(text: ForthelText) -> bool:
    return not normal_form_violations(text)


# --- generic rebuilding helpers --------------------------------------------------------


def _identity(x):
    return x


def _map_text(text: ForthelText, on_stmt) -> ForthelText:
    ex = text.example
    return ForthelText(
        Example(tuple(on_stmt(a) for a in ex.assumptions), on_stmt(ex.conclusion))
    )


def _rebuild_stmt(s: Statement, on_term=_identity, on_notion=_identity, on_stmt=None) -> Statement:
    """Rebuild one statement, applying the callbacks to children.  When
    ``on_stmt`` is None the rebuild recurses structurally with the same
    callbacks; otherwise child statements go through ``on_stmt``."""
    rec = on_stmt or (lambda child: _rebuild_stmt(child, on_term, on_notion))
    match s:
        case And(left, right):
            return And(rec(left), rec(right))
        case Or(left, right):
            return Or(rec(left), rec(right))
        case IfThen(antecedent, consequent):
            return IfThen(rec(antecedent), rec(consequent))
        case Iff(left, right):
            return Iff(rec(left), rec(right))
        case Not(body):
            return Not(rec(body))
        case ForQuantified(qn, body):
            return ForQuantified(QuantifiedNotion(qn.quantifier, on_notion(qn.notion)), rec(body))
        case Does(subject, predicate):
            return Does(on_term(subject), _rebuild_pred(predicate, on_term, on_notion))
        case ThereExists(notion):
            return ThereExists(on_notion(notion))
        case ThereExistsNo(notion):
            return ThereExistsNo(on_notion(notion))
    raise TypeError(f"not a statement: {s!r}")


def _rebuild_pred(p: Predicate, on_term=_identity, on_notion=_identity) -> Predicate:
    match p:
        case IsAdj1(polarity, adjective, term):
            return IsAdj1(polarity, adjective, on_term(term))
        case IsTerm(polarity, term):
            return IsTerm(polarity, on_term(term))
        case IsNotion(polarity, notion):
            return IsNotion(polarity, on_notion(notion))
    return p


def _rebuild_right(right, on_term=_identity, on_notion=_identity, on_stmt=None):
    match right:
        case IsPred(predicate):
            return IsPred(_rebuild_pred(predicate, on_term, on_notion))
        case SuchThat(statement):
            rec = on_stmt or (lambda child: _rebuild_stmt(child, on_term, on_notion))
            return SuchThat(rec(statement))
    return right
