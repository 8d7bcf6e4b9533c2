"""Ground-term enumeration and the finite-model soundness check."""

import pytest
from hypothesis import given, settings

import corpus
import strategies
from structind.core import Principle
from structind.generator import GenOptions, assemble, induction_principle
from structind.parser import parse_decl
from structind.semantics import (
    Atom,
    BottomTerm,
    EXHAUSTIVE_LIMIT,
    Exhaustive,
    GroundEnv,
    Node,
    Sampled,
    UnsupportedTypeError,
    check_principle,
    check_soundness,
    enumerate_terms,
    format_ground_term,
    immediate_subterms,
    term_depth,
)

NO_PARAMS = GroundEnv({})


def delete_clause(decl, pointed, index):
    """The principle with one constructor clause removed."""
    full = induction_principle(decl, GenOptions(pointed=pointed))
    kept = [c for i, c in enumerate(full.clauses) if i != index]
    return Principle(decl, pointed, assemble(decl, pointed, [f for _, f in kept]), tuple(kept))


class TestEnumeration:
    def test_nat_depth_three(self):
        nat = parse_decl(corpus.NAT)
        z = Node("Z")
        assert enumerate_terms(nat, NO_PARAMS, 3) == [
            z,
            Node("S", (z,)),
            Node("S", (Node("S", (z,)),)),
        ]

    @pytest.mark.parametrize("depth", [1, 2, 3, 4, 5])
    def test_nat_universe_sizes(self, depth):
        nat = parse_decl(corpus.NAT)
        assert len(enumerate_terms(nat, NO_PARAMS, depth)) == depth
        assert len(enumerate_terms(nat, NO_PARAMS, depth, pointed=True)) == 2 * depth

    def test_bool_any_depth(self):
        bool_ = parse_decl(corpus.BOOL)
        for depth in (1, 3, 7):
            assert enumerate_terms(bool_, NO_PARAMS, depth) == [Node("T"), Node("F")]

    def test_btree_single_atom_depth_two(self):
        btree = parse_decl(corpus.BTREE)
        env = GroundEnv({"a": ("u",)})
        leaf = Node("Leaf", (Atom("u", "a"),))
        assert enumerate_terms(btree, env, 2) == [leaf, Node("Fork", (leaf, leaf))]

    def test_pointed_nat_depth_two(self):
        nat = parse_decl(corpus.NAT)
        bot = BottomTerm()
        z = Node("Z")
        assert enumerate_terms(nat, NO_PARAMS, 2, pointed=True) == [
            bot,
            z,
            Node("S", (bot,)),
            Node("S", (z,)),
        ]

    def test_atom_order_follows_carrier(self):
        maybe = parse_decl(corpus.MAYBE)
        env = GroundEnv({"a": ("v", "u")})
        assert enumerate_terms(maybe, env, 1) == [
            Node("Nothing"),
            Node("Just", (Atom("v", "a"),)),
            Node("Just", (Atom("u", "a"),)),
        ]

    def test_depth_counts_recursion_only(self):
        list_ = parse_decl(corpus.LIST)
        env = GroundEnv({"a": ("u",)})
        nil = Node("Nil")
        cons1 = Node("Cons", (Atom("u", "a"), nil))
        assert term_depth(cons1) == 2
        assert enumerate_terms(list_, env, 2) == [nil, cons1]

    def test_downward_closure(self):
        swap = parse_decl(corpus.SWAPTREE)
        env = GroundEnv({"a": ("u",), "b": ("v",)})
        universe = enumerate_terms(swap, env, 3)
        members = set(universe)
        for t in universe:
            for sub in immediate_subterms(t):
                assert sub in members

    def test_depth_bound_respected(self):
        nat = parse_decl(corpus.NAT)
        for depth in (1, 2, 3, 4):
            assert all(
                term_depth(t) <= depth for t in enumerate_terms(nat, NO_PARAMS, depth)
            )

    def test_invalid_inputs(self):
        nat = parse_decl(corpus.NAT)
        with pytest.raises(ValueError):
            enumerate_terms(nat, NO_PARAMS, 0)
        list_ = parse_decl(corpus.LIST)
        with pytest.raises(ValueError):
            enumerate_terms(list_, GroundEnv({}), 2)
        with pytest.raises(ValueError):
            enumerate_terms(list_, GroundEnv({"a": ()}), 2)

    def test_unsupported_fragment(self):
        lam = parse_decl(corpus.LAMBDA)
        with pytest.raises(UnsupportedTypeError, match="String"):
            enumerate_terms(lam, GroundEnv({"c": ("k",)}), 2)
        fun = parse_decl("data Fun a = MkFun (a -> a)")
        with pytest.raises(UnsupportedTypeError):
            enumerate_terms(fun, GroundEnv({"a": ("u",)}), 2)

    # Small shapes: depth-3 layers grow like |U|^arity per constructor.
    @given(
        strategies.data_decls(max_ctors=3, max_arity=2, supported_only=True),
        strategies.st_depths(),
    )
    @settings(max_examples=100, deadline=None)
    def test_closure_and_depth_properties(self, decl, depth):
        env = GroundEnv.default_for(decl, atoms_per_param=1)
        universe = enumerate_terms(decl, env, depth)
        members = set(universe)
        assert len(universe) == len(members)
        for t in universe:
            assert term_depth(t) <= depth
            for sub in immediate_subterms(t):
                assert sub in members


class TestImmediateSubterms:
    def test_examples(self):
        z = Node("Z")
        assert immediate_subterms(Node("S", (z,))) == [z]
        assert immediate_subterms(z) == []
        assert immediate_subterms(BottomTerm()) == []
        assert immediate_subterms(Atom("u", "a")) == []

    def test_atoms_are_not_subterms(self):
        cons = Node("Cons", (Atom("u", "a"), Node("Nil")))
        assert immediate_subterms(cons) == [Node("Nil")]

    def test_bottom_child_counts(self):
        s_bot = Node("S", (BottomTerm(),))
        assert immediate_subterms(s_bot) == [BottomTerm()]
        assert term_depth(s_bot) == 2


class TestSoundness:
    def test_bool_exhaustive(self):
        report = check_soundness(
            parse_decl(corpus.BOOL), GenOptions(), NO_PARAMS, 3, Exhaustive()
        )
        assert report.passed
        assert report.universe_size == 2
        assert report.predicates_checked == 4

    def test_nat_exhaustive(self):
        report = check_soundness(
            parse_decl(corpus.NAT), GenOptions(), NO_PARAMS, 3, Exhaustive()
        )
        assert report.passed
        assert report.predicates_checked == 8

    def test_missing_base_clause_found_immediately(self):
        nat = parse_decl(corpus.NAT)
        mutant = delete_clause(nat, False, 0)
        report = check_principle(mutant, NO_PARAMS, 3, Exhaustive())
        assert not report.passed
        predicate, failing = report.counterexample
        assert predicate == ()
        assert failing == Node("Z")
        assert report.predicates_checked == 1

    def test_missing_step_clause(self):
        nat = parse_decl(corpus.NAT)
        mutant = delete_clause(nat, False, 1)
        report = check_principle(mutant, NO_PARAMS, 3, Exhaustive())
        assert not report.passed
        predicate, failing = report.counterexample
        assert Node("Z") in predicate
        assert failing == Node("S", (Node("Z"),))

    def test_exhaustive_limit(self):
        list_ = parse_decl(corpus.LIST)
        env = GroundEnv({"a": ("u", "v")})
        assert len(enumerate_terms(list_, env, 5)) > EXHAUSTIVE_LIMIT
        with pytest.raises(ValueError, match="too large"):
            check_soundness(list_, GenOptions(), env, 5, Exhaustive())

    def test_sampled_determinism(self):
        list_ = parse_decl(corpus.LIST)
        env = GroundEnv({"a": ("u", "v")})
        mode = Sampled(50, seed=7)
        first = check_soundness(list_, GenOptions(), env, 4, mode)
        second = check_soundness(list_, GenOptions(), env, 4, mode)
        assert first == second
        assert first.passed

    def test_sampled_mutant_determinism(self):
        list_ = parse_decl(corpus.LIST)
        env = GroundEnv({"a": ("u", "v")})
        mutant = delete_clause(list_, False, 1)
        mode = Sampled(200, seed=11)
        first = check_principle(mutant, env, 4, mode)
        second = check_principle(mutant, env, 4, mode)
        assert first == second
        assert not first.passed

    def test_unsupported_type_raises(self):
        with pytest.raises(UnsupportedTypeError):
            check_soundness(
                parse_decl(corpus.LAMBDA), GenOptions(), GroundEnv({"c": ("k",)}), 2, Exhaustive()
            )

    @given(
        strategies.data_decls(max_ctors=3, max_arity=2, supported_only=True),
        strategies.gen_options(),
    )
    @settings(max_examples=60, deadline=None)
    def test_generator_output_always_passes(self, decl, opts):
        env = GroundEnv.default_for(decl, atoms_per_param=1)
        # Back off the depth until the check is cheap enough to run.
        depth = 3
        universe = enumerate_terms(decl, env, depth, opts.pointed)
        while depth > 1 and len(universe) > 60:
            depth -= 1
            universe = enumerate_terms(decl, env, depth, opts.pointed)
        mode = Exhaustive() if len(universe) <= EXHAUSTIVE_LIMIT else Sampled(40, seed=3)
        report = check_soundness(decl, opts, env, depth, mode)
        assert report.passed


class TestFormatGroundTerm:
    def test_forms(self):
        assert format_ground_term(Node("Z")) == "Z"
        assert format_ground_term(Node("S", (BottomTerm(),))) == "(S ⊥)"
        assert format_ground_term(Node("Leaf", (Atom("u", "a"),))) == "(Leaf u)"
