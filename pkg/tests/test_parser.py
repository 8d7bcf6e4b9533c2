"""Declaration parsing: grammar coverage, positions, and error reporting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import strategies
from structind.core import App, Arrow, ConstructorDecl, DataDecl, TupleType, Var
from structind.parser import ParseError, parse_decl, parse_program
from structind.render import render_decl_source

import corpus


class TestGrammar:
    def test_nat(self):
        decl = parse_decl(corpus.NAT)
        assert decl == DataDecl(
            "Nat",
            (),
            (ConstructorDecl("Z"), ConstructorDecl("S", (App("Nat"),))),
        )

    def test_list(self):
        decl = parse_decl(corpus.LIST)
        assert decl.type_params == ("a",)
        assert decl.constructors[1] == ConstructorDecl(
            "Cons", (Var("a"), App("List", (Var("a"),)))
        )

    def test_swap_tree_argument_order(self):
        decl = parse_decl(corpus.SWAPTREE)
        node = decl.constructors[1]
        assert node.arg_types == (
            Var("a"),
            App("SwapTree", (Var("b"), Var("a"))),
            App("SwapTree", (Var("b"), Var("a"))),
        )

    def test_undeclared_type_names_accepted(self):
        decl = parse_decl(corpus.LAMBDA)
        assert decl.constructors[0].arg_types == (App("String"),)

    def test_tuple_argument(self):
        decl = parse_decl("data Pair a b = MkPair (a, b)")
        assert decl.constructors[0].arg_types == (TupleType((Var("a"), Var("b"))),)

    def test_arrow_argument(self):
        decl = parse_decl("data Fun a b = MkFun (a -> b)")
        assert decl.constructors[0].arg_types == (Arrow(Var("a"), Var("b")),)

    def test_arrow_is_right_associative(self):
        decl = parse_decl("data T a = C (a -> a -> a)")
        assert decl.constructors[0].arg_types == (
            Arrow(Var("a"), Arrow(Var("a"), Var("a"))),
        )

    def test_nested_application_needs_parens(self):
        decl = parse_decl("data Rose a = Rose a (List (Rose a))")
        assert decl.constructors[0].arg_types[1] == App(
            "List", (App("Rose", (Var("a"),)),)
        )

    def test_comments_and_whitespace(self):
        text = "-- natural numbers\ndata Nat = Z -- base\n  | S Nat -- step\n"
        assert parse_decl(text) == parse_decl(corpus.NAT)

    def test_grouping_parens(self):
        assert parse_decl("data T = C (Nat)") == parse_decl("data T = C Nat")


class TestErrors:
    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("data Nat =", "constructor"),
            ("data nat = Z", "type name"),
            ("data Nat = z", "uppercase"),
            ("data T a a = C a", "duplicate type parameter"),
            ("data T A = C", "lowercase"),
            ("data T = C | | D", "constructor"),
            ("Nat = Z", "'data'"),
            ("data T = C b", "not a parameter"),
            ("data T a = C (f a)", "type variable"),
            ("data T a = C ((Either a) a)", "parenthesized"),
            ("data T = C ()", "type"),
        ],
    )
    def test_rejected(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_decl(text)
        assert fragment in err.value.message

    @pytest.mark.parametrize(
        "text",
        [
            "data T = C !Int",
            "data T = C { field :: Int }",
            "data T a = T1 a deriving Show",
            "data T = A :+: B",
        ],
    )
    def test_unsupported_features(self, text):
        with pytest.raises(ParseError) as err:
            parse_decl(text)
        assert "unsupported feature" in err.value.message

    def test_position_of_duplicate_param(self):
        with pytest.raises(ParseError) as err:
            parse_decl("data T a a = C a")
        assert (err.value.pos.line, err.value.pos.column) == (1, 10)

    def test_position_on_later_line(self):
        with pytest.raises(ParseError) as err:
            parse_decl("data T =\n  C |")
        assert err.value.pos.line == 2

    def test_positions_stay_in_bounds(self):
        for text in ["data Nat =", "data", "data T = C ("]:
            with pytest.raises(ParseError) as err:
                parse_decl(text)
            lines = text.split("\n")
            pos = err.value.pos
            assert 1 <= pos.line <= len(lines)
            assert 1 <= pos.column <= len(lines[pos.line - 1]) + 1

    def test_trailing_input_rejected(self):
        with pytest.raises(ParseError):
            parse_decl(corpus.NAT + "\n" + corpus.BOOL)

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as err:
            parse_decl("data T = C [a]")
        assert "unexpected character" in err.value.message


class TestProgram:
    def test_two_declarations(self):
        decls = parse_program(corpus.BOOL + "\n" + corpus.MAYBE)
        assert [d.type_name for d in decls] == ["Bool", "Maybe"]

    def test_empty_input(self):
        assert parse_program("") == []
        assert parse_program("-- nothing here\n") == []

    def test_duplicate_type_names(self):
        with pytest.raises(ParseError) as err:
            parse_program(corpus.NAT + "\n" + corpus.NAT)
        assert "duplicate declaration" in err.value.message
        assert err.value.pos.line == 2

    @given(st.lists(strategies.data_decls(), max_size=4))
    @settings(max_examples=100, deadline=None)
    def test_concatenated_roundtrip(self, decls):
        unique = list({d.type_name: d for d in decls}.values())
        parsed = parse_program("\n".join(render_decl_source(d) for d in unique))
        assert parsed == unique

    def test_concatenation_preserves_order(self):
        sources = [corpus.NAT, corpus.LIST, corpus.BOOL]
        decls = parse_program("\n".join(sources))
        assert [d.type_name for d in decls] == ["Nat", "List", "Bool"]
