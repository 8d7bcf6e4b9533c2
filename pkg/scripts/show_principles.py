#!/usr/bin/env python3
"""Print induction principles for a handful of textbook types."""

import argparse

from structind.generator import GenOptions, induction_principle
from structind.parser import parse_decl
from structind.render import render_latex, render_sexpr, render_text

DECLS = [
    "data Nat = Z | S Nat",
    "data Bool = T | F",
    "data Maybe a = Nothing | Just a",
    "data List a = Nil | Cons a (List a)",
    "data Tsil a = Snoc (Tsil a) a | Lin",
    "data BTree a = Leaf a | Fork (BTree a) (BTree a)",
    "data SwapTree a b = Leaf | Node a (SwapTree b a) (SwapTree b a)",
]

RENDERERS = {"text": render_text, "latex": render_latex, "sexpr": render_sexpr}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=sorted(RENDERERS), default="text")
    ap.add_argument("--pointed", action="store_true", help="include the undefinedness clause")
    args = ap.parse_args()
    render = RENDERERS[args.format]
    opts = GenOptions(pointed=args.pointed)
    for source in DECLS:
        decl = parse_decl(source)
        principle = induction_principle(decl, opts)
        print(source)
        print(f"  {render(principle.formula)}")
        print()


if __name__ == "__main__":
    main()
