import pytest

from forlean.lean import (
    AndP,
    ArithT,
    DuplicateBinderName,
    Exists,
    Forall,
    HypBinder,
    IffP,
    Imp,
    LeanCommand,
    LeanType,
    LitT,
    NotP,
    OrP,
    PredApp,
    Rel,
    TypeBinder,
    VarT,
    alpha_equivalent,
    normalize_names,
    print_command,
    print_prop,
    print_term,
)
from forlean.lean_reader import LeanReadError, read_command

X = VarT("x")


class TestPrintTerm:
    def test_compound_always_parenthesized(self):
        term = ArithT("+", ArithT("^", X, LitT(2)), LitT(1))
        assert print_term(term) == "((x ^ 2) + 1)"

    def test_negative_literal(self):
        assert print_term(LitT(-2)) == "-2"

    def test_atom_bare(self):
        assert print_term(X) == "x"


class TestPrintProp:
    def test_forall_with_condition(self):
        prop = Forall("x34", LeanType.INT, Imp(Rel("<", VarT("x34"), LitT(32)), Rel(">", X, VarT("x34"))))
        assert print_prop(prop) == "∀ (x34 : ℤ), (x34 < 32 → x > x34)"

    def test_negated_forall(self):
        prop = NotP(
            Forall(
                "x53",
                LeanType.INT,
                Imp(PredApp("neg", VarT("x53")), Rel("<", VarT("x32"), VarT("x53"))),
            )
        )
        assert print_prop(prop) == "(¬ ∀ (x53 : ℤ), (neg x53 → x32 < x53))"

    def test_double_negation(self):
        prop = NotP(NotP(Rel(">", VarT("a"), X)))
        assert print_prop(prop) == "(¬ (¬ a > x))"

    def test_relation_unparenthesized(self):
        assert print_prop(Rel("≠", X, LitT(0))) == "x ≠ 0"

    def test_connectives(self):
        even_x = PredApp("even", X)
        odd_x = PredApp("odd", X)
        assert print_prop(AndP(even_x, odd_x)) == "(even x ∧ odd x)"
        assert print_prop(OrP(even_x, odd_x)) == "(even x ∨ odd x)"
        assert print_prop(IffP(even_x, odd_x)) == "(even x ↔ odd x)"

    def test_exists(self):
        assert print_prop(Exists("y", LeanType.RAT, PredApp("pos", VarT("y")))) == (
            "∃ (y : ℚ), pos y"
        )


class TestPrintCommand:
    def test_binders_and_goal(self):
        command = LeanCommand(
            (
                TypeBinder("x", LeanType.REAL),
                HypBinder("h1", Rel("<", X, LitT(0))),
            ),
            Rel(">", ArithT("+", ArithT("^", X, LitT(2)), LitT(1)), LitT(0)),
        )
        assert print_command(command) == (
            "example (x : ℝ) (h1 : x < 0) : ((x ^ 2) + 1) > 0 := sorry"
        )

    def test_zero_binders(self):
        command = LeanCommand((), Rel(">", LitT(4), LitT(3)))
        assert print_command(command) == "example : 4 > 3 := sorry"

    def test_goal_quantifier_without_parens(self):
        command = LeanCommand(
            (
                TypeBinder("a", LeanType.INT),
                HypBinder("h1", PredApp("odd", VarT("a"))),
                TypeBinder("c", LeanType.INT),
                HypBinder("h2", PredApp("odd", VarT("c"))),
            ),
            Forall(
                "b",
                LeanType.INT,
                PredApp(
                    "even",
                    ArithT("+", ArithT("*", VarT("a"), VarT("b")), ArithT("*", VarT("a"), VarT("c"))),
                ),
            ),
        )
        assert print_command(command) == (
            "example (a : ℤ) (h1 : odd a) (c : ℤ) (h2 : odd c) : "
            "∀ (b : ℤ), even ((a * b) + (a * c)) := sorry"
        )

    def test_single_assignment_and_sorry(self, corpus_cases):
        for case in corpus_cases:
            for expected in case.expected:
                assert expected.count(":=") == 1
                assert expected.endswith("sorry")

    def test_duplicate_binder_names_rejected(self):
        command = LeanCommand(
            (TypeBinder("x", LeanType.INT), TypeBinder("x", LeanType.INT)),
            Rel(">", LitT(4), LitT(3)),
        )
        with pytest.raises(DuplicateBinderName):
            print_command(command)


class TestNormalizeNames:
    def test_labels_renumbered_in_binder_order(self):
        source = (
            "example (a : ℤ) (h106 : odd a) (b : ℤ) (h85 : odd b) (c : ℤ) (h64 : odd c) "
            "(h51 : ((a + b) + c) = 0) : ((a * b) * c) < 0 := sorry"
        )
        normalized = normalize_names(read_command(source))
        labels = [b.label for b in normalized.binders if isinstance(b, HypBinder)]
        assert labels == ["h1", "h2", "h3", "h4"]
        assert alpha_equivalent(read_command(source), normalized)

    def test_generated_variables_renumbered(self):
        source = (
            "example (x : ℤ) (h111 : odd x) (h98 : x > 3) : ∀ (x32 : ℤ), "
            "((even x32 ∧ x32 > x) → (¬ ∀ (x53 : ℤ), (neg x53 → x32 < x53))) := sorry"
        )
        normalized = normalize_names(read_command(source))
        printed = print_command(normalized)
        assert "x32" not in printed and "x53" not in printed
        assert "∀ (x1 : ℤ)" in printed and "∀ (x2 : ℤ)" in printed
        assert alpha_equivalent(read_command(source), normalized)

    def test_user_letters_untouched(self):
        source = "example (x : ℚ) (h39 : x = (2 + (2 * 2))) : x > 3 := sorry"
        printed = print_command(normalize_names(read_command(source)))
        assert printed == "example (x : ℚ) (h1 : x = (2 + (2 * 2))) : x > 3 := sorry"

    def test_fixpoint(self):
        source = "example (x : ℤ) (h1 : even x) : ∀ (x1 : ℤ), x1 < x := sorry"
        command = read_command(source)
        assert normalize_names(command) == command

    def test_alpha_equivalence_on_corpus(self, corpus_cases):
        for case in corpus_cases:
            for expected in case.expected:
                command = read_command(expected)
                assert alpha_equivalent(command, normalize_names(command)), case.id


class TestAlphaEquivalence:
    def test_label_names_ignored(self):
        a = read_command("example (x : ℤ) (h9 : even x) : odd x := sorry")
        b = read_command("example (x : ℤ) (h1 : even x) : odd x := sorry")
        assert alpha_equivalent(a, b)

    def test_bound_variable_renaming(self):
        a = read_command("example : ∀ (x34 : ℤ), x34 < 32 := sorry")
        b = read_command("example : ∀ (x1 : ℤ), x1 < 32 := sorry")
        assert alpha_equivalent(a, b)

    def test_structural_difference_detected(self):
        a = read_command("example : ∀ (x1 : ℤ), x1 < 32 := sorry")
        b = read_command("example : ∀ (x1 : ℤ), x1 > 32 := sorry")
        assert not alpha_equivalent(a, b)

    def test_type_difference_detected(self):
        a = read_command("example (x : ℤ) : odd x := sorry")
        b = read_command("example (x : ℝ) : odd x := sorry")
        assert not alpha_equivalent(a, b)

    def test_free_variable_must_match(self):
        a = read_command("example : x > 3 := sorry")
        b = read_command("example : y > 3 := sorry")
        assert not alpha_equivalent(a, b)


class TestReader:
    def test_roundtrips_every_corpus_output(self, corpus_cases):
        for case in corpus_cases:
            for expected in case.expected:
                reconstructed = print_command(read_command(expected))
                assert reconstructed == " ".join(expected.split()), case.id

    def test_rejects_garbage(self):
        with pytest.raises(LeanReadError):
            read_command("example : := sorry")
        with pytest.raises(LeanReadError):
            read_command("theorem foo : 1 < 2 := sorry")
        with pytest.raises(LeanReadError):
            read_command("example : 1 < 2 := sorry trailing")
