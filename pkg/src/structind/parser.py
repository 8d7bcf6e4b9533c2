"""Recursive-descent parser for the data-declaration language.

Grammar (one token of lookahead throughout):

    program  :=  { decl }
    decl     :=  "data" UpperName { lowerName } "=" ctor { "|" ctor }
    ctor     :=  UpperName { atype }
    atype    :=  lowerName | UpperName | "(" type ")" | "(" type "," type { "," type } ")"
    type     :=  btype [ "->" type ]
    btype    :=  ( UpperName | lowerName | parenthesized type ) { atype }

Whitespace and "--" line comments are skipped. Recognizable Haskell
features outside this fragment (deriving clauses, record syntax,
strictness annotations, infix constructors) raise a ParseError that says
the feature is unsupported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import App, Arrow, ConstructorDecl, DataDecl, TupleType, TypeExpr, Var, type_vars


@dataclass(frozen=True)
class SourcePos:
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(Exception):
    """Syntax or semantic error in declaration or s-expression input."""

    def __init__(self, pos: SourcePos, message: str, expected: tuple[str, ...] = ()):
        super().__init__(f"{pos}: {message}")
        self.pos = pos
        self.message = message
        self.expected = tuple(expected)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: SourcePos


_KEYWORDS = {"data", "deriving"}
_SINGLES = "=|(),!{}"
_OP_CHARS = set(":#$%&*+./<>?@\\^~-")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if text.startswith("--", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        pos = SourcePos(line, col)
        if text.startswith("->", i):
            tokens.append(_Token("->", "->", pos))
            i += 2
            col += 2
            continue
        if ch in _SINGLES:
            tokens.append(_Token(ch, ch, pos))
            i += 1
            col += 1
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            word = text[i:j]
            if word in _KEYWORDS:
                kind = word
            elif word[0].isupper():
                kind = "upper"
            else:
                kind = "lower"
            tokens.append(_Token(kind, word, pos))
            col += j - i
            i = j
            continue
        if ch in _OP_CHARS:
            j = i
            while j < n and text[j] in _OP_CHARS:
                j += 1
            tokens.append(_Token("op", text[i:j], pos))
            col += j - i
            i = j
            continue
        raise ParseError(pos, f"unexpected character {ch!r}")
    tokens.append(_Token("eof", "", SourcePos(line, col)))
    return tokens


_ATYPE_FIRST = ("lower", "upper", "(")


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, tok: _Token, message: str, expected: tuple[str, ...] = ()):
        found = f"{tok.text!r}" if tok.kind != "eof" else "end of input"
        raise ParseError(tok.pos, f"{message}, found {found}", expected)

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(tok, f"expected {what}", (what,))
        return self.advance()

    # --- declarations ---

    def decl(self) -> tuple[DataDecl, SourcePos]:
        self.expect("data", "'data'")
        name_tok = self.expect("upper", "type name")
        params: list[str] = []
        param_pos: list[SourcePos] = []
        while self.peek().kind == "lower":
            tok = self.advance()
            params.append(tok.text)
            param_pos.append(tok.pos)
        for k, (p, pos) in enumerate(zip(params, param_pos)):
            if p in params[:k]:
                raise ParseError(pos, f"duplicate type parameter {p!r}")
        if self.peek().kind == "upper":
            self.fail(self.peek(), "type parameters must be lowercase names")
        self.expect("=", "'='")
        scope = frozenset(params)
        ctors = [self.ctor(name_tok.text, scope)]
        while self.peek().kind == "|":
            self.advance()
            ctors.append(self.ctor(name_tok.text, scope))
        if self.peek().kind == "deriving":
            self.fail(self.peek(), "unsupported feature: deriving clause")
        decl = DataDecl(name_tok.text, tuple(params), tuple(ctors))
        return decl, name_tok.pos

    def ctor(self, type_name: str, scope: frozenset[str]) -> ConstructorDecl:
        tok = self.peek()
        if tok.kind == "lower":
            self.fail(tok, "constructor names must be uppercase")
        name_tok = self.expect("upper", "constructor name")
        if self.peek().kind == "{":
            self.fail(self.peek(), "unsupported feature: record syntax")
        args: list[TypeExpr] = []
        while True:
            tok = self.peek()
            if tok.kind == "!":
                self.fail(tok, "unsupported feature: strictness annotation")
            if tok.kind not in _ATYPE_FIRST:
                break
            pos = tok.pos
            ty = self.atype()
            loose = type_vars(ty) - scope
            if loose:
                raise ParseError(
                    pos,
                    f"type variable {min(loose)!r} is not a parameter of {type_name!r}",
                )
            args.append(ty)
        tok = self.peek()
        if tok.kind == "op":
            if tok.text.startswith(":"):
                self.fail(tok, "unsupported feature: infix constructor")
            self.fail(tok, "unexpected operator")
        return ConstructorDecl(name_tok.text, tuple(args))

    # --- types ---

    def atype(self) -> TypeExpr:
        tok = self.peek()
        if tok.kind == "lower":
            self.advance()
            return Var(tok.text)
        if tok.kind == "upper":
            self.advance()
            return App(tok.text, ())
        if tok.kind == "(":
            return self.paren_type()
        self.fail(tok, "expected a type")

    def paren_type(self) -> TypeExpr:
        self.expect("(", "'('")
        elems = [self.type_()]
        while self.peek().kind == ",":
            self.advance()
            elems.append(self.type_())
        self.expect(")", "')'")
        if len(elems) == 1:
            return elems[0]
        return TupleType(tuple(elems))

    def type_(self) -> TypeExpr:
        left = self.btype()
        if self.peek().kind == "->":
            self.advance()
            return Arrow(left, self.type_())
        return left

    def btype(self) -> TypeExpr:
        tok = self.peek()
        if tok.kind == "upper":
            self.advance()
            args = []
            while self.peek().kind in _ATYPE_FIRST:
                args.append(self.atype())
            return App(tok.text, tuple(args))
        if tok.kind == "lower":
            self.advance()
            if self.peek().kind in _ATYPE_FIRST:
                self.fail(self.peek(), f"cannot apply arguments to type variable {tok.text!r}")
            return Var(tok.text)
        if tok.kind == "(":
            ty = self.paren_type()
            if self.peek().kind in _ATYPE_FIRST:
                self.fail(self.peek(), "unsupported feature: application of a parenthesized type")
            return ty
        self.fail(tok, "expected a type")


def parse_decl(text: str) -> DataDecl:
    """Parse exactly one declaration; the whole input must be consumed."""
    parser = _Parser(_tokenize(text))
    decl, _ = parser.decl()
    parser.expect("eof", "end of input")
    return decl


def parse_program(text: str) -> list[DataDecl]:
    """Parse zero or more declarations with distinct type names."""
    parser = _Parser(_tokenize(text))
    decls: list[DataDecl] = []
    seen: set[str] = set()
    while parser.peek().kind != "eof":
        decl, name_pos = parser.decl()
        if decl.type_name in seen:
            raise ParseError(name_pos, f"duplicate declaration of type {decl.type_name!r}")
        seen.add(decl.type_name)
        decls.append(decl)
    return decls
