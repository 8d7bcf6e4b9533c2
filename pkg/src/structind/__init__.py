"""Structural induction principles for algebraic data type declarations.

Parse Haskell-style `data` declarations, generate the corresponding
structural induction principle as a first-order formula, render it as
text, LaTeX, or s-expressions, and validate it with a finite-model
soundness check.
"""

from .core import (
    And,
    App,
    Arrow,
    BOTTOM,
    Bottom,
    ConstructorDecl,
    DataDecl,
    Forall,
    Formula,
    Implies,
    KIND_STAR,
    KindStar,
    OF_KIND_STAR,
    OfKindStar,
    OfType,
    PredApp,
    PredOver,
    Principle,
    Sort,
    TApp,
    TRUTH,
    TVar,
    Term,
    TupleType,
    Truth,
    TypeExpr,
    Var,
    alpha_eq,
    free_vars,
    prefix_perm_eq,
    ty_con,
)
from .generator import (
    GenOptions,
    clause_parts,
    constructor_clause,
    induction_principle,
    mind_check,
    name_arguments,
    nested_recursion_warnings,
)
from .parser import ParseError, SourcePos, parse_decl, parse_program
from .render import (
    parse_sexpr,
    render_decl_source,
    render_latex,
    render_sexpr,
    render_text,
)
from .semantics import (
    Atom,
    BottomTerm,
    DEFAULT_SEED,
    Exhaustive,
    GroundEnv,
    GroundTerm,
    Node,
    Sampled,
    SoundnessReport,
    UnsupportedTypeError,
    check_principle,
    check_soundness,
    enumerate_terms,
    immediate_subterms,
)

__version__ = "0.1.0"
