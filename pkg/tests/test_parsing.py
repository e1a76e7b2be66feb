import pytest

from conftest import parse_source
from forlean.forthel import (
    And,
    BinApp,
    Does,
    IntLit,
    IsAdj,
    IsAdj1,
    Not,
    Or,
    Polarity,
    Var,
    linearize_forthel,
)
from forlean.lexicon import preprocess, tokenize
from forlean.parsing import ParseFailure, parse_statement, parse_term, parse_text


def term_of(text: str):
    trees = parse_term(tokenize(preprocess(text))).expect_trees()
    assert len(trees) == 1
    return trees[0]


def statement_of(text: str):
    trees = parse_statement(tokenize(preprocess(text))).expect_trees()
    assert len(trees) == 1
    return trees[0]


class TestTerms:
    def test_multiplication_binds_tighter_than_addition(self):
        assert term_of("2 + 2 * 2") == term_of("2 + (2 * 2)")

    def test_parentheses_override(self):
        assert term_of("(2 + 2) * 2") == BinApp(
            "PROD", BinApp("SUM", IntLit(2), IntLit(2)), IntLit(2)
        )

    def test_minus_chain_left_associative(self):
        # x ^ 3 - 5 * x - 1 groups as ((x ^ 3) - (5 * x)) - 1
        assert term_of("x ^ 3 - 5 * x - 1") == BinApp(
            "MINUS",
            BinApp("MINUS", BinApp("EXP", Var("x"), IntLit(3)), BinApp("PROD", IntLit(5), Var("x"))),
            IntLit(1),
        )

    def test_minus_binds_tighter_than_plus(self):
        # 4 * n ^ 3 + 2 * n - 1 groups as (4 * (n ^ 3)) + ((2 * n) - 1)
        assert term_of("4 * n ^ 3 + 2 * n - 1") == BinApp(
            "SUM",
            BinApp("PROD", IntLit(4), BinApp("EXP", Var("n"), IntLit(3))),
            BinApp("MINUS", BinApp("PROD", IntLit(2), Var("n")), IntLit(1)),
        )

    def test_exponent_tightest(self):
        assert term_of("x * y ^ 2") == BinApp(
            "PROD", Var("x"), BinApp("EXP", Var("y"), IntLit(2))
        )

    def test_negative_literal(self):
        assert term_of("-5 * n - 3") == BinApp(
            "MINUS", BinApp("PROD", IntLit(-5), Var("n")), IntLit(3)
        )


class TestStatements:
    def test_plain_conjunction(self):
        assert statement_of("x is odd and y is odd") == And(
            Does(Var("x"), IsAdj(Polarity.POS, "ODD")),
            Does(Var("y"), IsAdj(Polarity.POS, "ODD")),
        )

    def test_its_not_that(self):
        assert statement_of("it's not that x is odd") == Not(
            Does(Var("x"), IsAdj(Polarity.POS, "ODD"))
        )

    def test_connective_precedence(self):
        # "and" binds tighter than ",", "," tighter than "or"; all right-nested
        def adj(v, polarity=Polarity.POS):
            return Does(Var(v), IsAdj(polarity, "EVEN"))

        got = statement_of(
            "x is even , y is even and z is not even "
            "or x is even , y is not even and z is even "
            "or x is not even , y is even and z is even"
        )
        neg = Polarity.NEG
        expected = Or(
            And(adj("x"), And(adj("y"), adj("z", neg))),
            Or(
                And(adj("x"), And(adj("y", neg), adj("z"))),
                And(adj("x", neg), And(adj("y"), adj("z"))),
            ),
        )
        assert got == expected

    def test_comma_after_and_nests_left(self):
        got = statement_of("x is even and y is even , z is even")
        def adj(v):
            return Does(Var(v), IsAdj(Polarity.POS, "EVEN"))
        assert got == And(And(adj("x"), adj("y")), adj("z"))


class TestTexts:
    def test_two_assumptions(self):
        result = parse_source(
            "Ex. Assume x is a real number. Assume x is less than 0. "
            "Then x ^ 2 + 1 is greater than 0."
        )
        (tree,) = result.expect_trees()
        assert len(tree.example.assumptions) == 2

    def test_lexical_ambiguity_yields_two_trees(self):
        result = parse_source(
            "Ex. Assume x is a real number. Assume x is greater than 0 and x is less than 1. "
            "Then x ^ 2 - 2 * x + 2 is not equal to 0."
        )
        first, second = result.expect_trees()
        pred1 = first.example.conclusion.predicate
        pred2 = second.example.conclusion.predicate
        assert pred1 == IsAdj1(Polarity.POS, "NOT_EQUAL_TO", pred1.term)
        assert pred2 == IsAdj1(Polarity.NEG, "EQUAL_TO", pred2.term)

    def test_without_leading_then(self):
        result = parse_source(
            "Ex. Assume n is an integer. If 1 - n ^ 2 is greater than 0 then 3 * n - 2 is even."
        )
        assert len(result.trees) == 1

    def test_number_agreement_not_enforced(self):
        # singular and plural forms produce the same tree
        sloppy = parse_source("Ex. Assume x are an odd integers. Then x is odd.")
        strict = parse_source("Ex. Assume x is an odd integer. Then x is odd.")
        assert sloppy.trees == strict.trees

    def test_truncated_sentence_fails(self):
        result = parse_source("Ex. Assume x is.")
        assert not result.ok
        assert result.diagnostics
        with pytest.raises(ParseFailure):
            result.expect_trees()

    def test_failure_reports_furthest_position(self):
        result = parse_source("Ex. Assume x is a real number. Then x is banana.")
        ((span, message),) = result.diagnostics
        source = preprocess("Ex. Assume x is a real number. Then x is banana.")
        assert source[span[0] : span[1]] == "banana"
        assert "expected" in message

    def test_empty_input_fails(self):
        result = parse_text([])
        assert not result.ok


class TestParseSetProperties:
    def test_corpus_tree_counts(self, corpus_cases):
        # one tree everywhere except the documented ambiguous case
        for case in corpus_cases:
            trees = parse_source(case.input).expect_trees()
            expected = 2 if case.id == "exercise-3-1" else 1
            assert len(trees) == expected, case.id

    def test_deterministic_tree_order(self, corpus_cases):
        for case in corpus_cases:
            tokens = tokenize(preprocess(case.input))
            assert parse_text(tokens).trees == parse_text(tokens).trees

    def test_no_structurally_equal_duplicates(self, corpus_cases):
        for case in corpus_cases:
            trees = parse_source(case.input).trees
            for i, a in enumerate(trees):
                assert a not in trees[i + 1 :]

    def test_linearization_reparses_to_same_tree(self, corpus_cases):
        # parse(linearize(t)) contains t for every corpus parse t
        for case in corpus_cases:
            for tree in parse_source(case.input).expect_trees():
                again = parse_source(linearize_forthel(tree))
                assert tree in again.trees, case.id

    def test_metavariable_reference_reparses(self):
        source = (
            "ex . assume x is an integer x. then for no integer (x 35) such that "
            "(x 35) is odd, (x 35) is greater than x."
        )
        (tree,) = parse_source(source).expect_trees()
        assert tree in parse_source(linearize_forthel(tree)).trees
