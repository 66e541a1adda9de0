# src/logic/parser.py

"""
Concrete syntax of QHC, parsed with lark (LALR).

Precedence, tightest first: ~ ? ! box nabla dia forall exists; then &; then |;
then -> (right associative); then <->. Abbreviations are expanded here:
~A is A -> bot or A -> 0 by the sort of A, A <-> B is (A -> B) & (B -> A),
top is ~bot, 1 is ~0 and dia A is ~box ~A.
"""

from __future__ import annotations

from functools import lru_cache

from lark import Lark, Token, Transformer, Tree, v_args
from lark.exceptions import UnexpectedInput, VisitError

from logic.errors import ArityMismatch, ParseError, QHCError
from logic.formula import (
    And, Atom, AtomDecl, Box, Exists, FalseC, FalseI, Forall, Formula, Imp, Nabla,
    Oc, Or, Signature, Sort, Wn, iff, neg, top, typecheck,
)

GRAMMAR = r"""
    document: decl* (formula (";" formula)* ";"?)?
    sigfile: decl*
    sequent: (formula (";" formula)*)? TURNSTILE formula

    decl: "prob" atomdecl ("," atomdecl)* "."   -> prob_decl
        | "prop" atomdecl ("," atomdecl)* "."   -> prop_decl
    atomdecl: NAME ("(" INT ")")?

    ?formula: iff
    ?iff: imp
        | imp "<->" imp                  -> iff
    ?imp: disj
        | disj "->" imp                  -> imp
    ?disj: conj
        | disj "|" conj                  -> disj
    ?conj: unary
         | conj "&" unary                -> conj
    ?unary: primary
          | "~" unary                    -> neg
          | "?" unary                    -> wn
          | "!" unary                    -> oc
          | "box" unary                  -> box
          | "nabla" unary                -> nabla
          | "dia" unary                  -> dia
          | "forall" NAME "." unary      -> forall
          | "exists" NAME "." unary      -> exists
    ?primary: atom
            | "bot"                      -> bot
            | "0"                        -> zero
            | "top"                      -> top
            | "1"                        -> one
            | "(" formula ")"
    atom: NAME
        | NAME "(" NAME ("," NAME)* ")"

    TURNSTILE: "|-"
    NAME: /[A-Za-z_][A-Za-z0-9_']*/
    COMMENT: /#[^\n]*/

    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

KEYWORDS = frozenset({"prob", "prop", "forall", "exists", "box", "nabla", "dia", "bot", "top", "by"})


@lru_cache(maxsize=1)
def _lark() -> Lark:
    return Lark(GRAMMAR, parser="lalr", start=["document", "sigfile", "sequent", "formula"],
                maybe_placeholders=False)


@v_args(inline=True)
class FormulaBuilder(Transformer):
    """Turns a parse tree into a Formula, resolving atoms against a signature."""

    def __init__(self, sig: Signature):
        super().__init__()
        self.sig = sig

    def atom(self, name: Token, *args: Token) -> Formula:
        decl = self.sig.lookup(str(name))
        if decl.arity != len(args):
            raise ArityMismatch(f"Atom '{name}' is declared with arity {decl.arity} "
                                f"but used with {len(args)} argument(s).")
        return Atom(str(name), tuple(str(a) for a in args), decl.sort)

    def bot(self) -> Formula:
        return FalseI()

    def zero(self) -> Formula:
        return FalseC()

    def top(self) -> Formula:
        return top(Sort.PROBLEM)

    def one(self) -> Formula:
        return top(Sort.PROPOSITION)

    def neg(self, body: Formula) -> Formula:
        return neg(body)

    def wn(self, body: Formula) -> Formula:
        return Wn(body)

    def oc(self, body: Formula) -> Formula:
        return Oc(body)

    def box(self, body: Formula) -> Formula:
        return Box(body)

    def nabla(self, body: Formula) -> Formula:
        return Nabla(body)

    def dia(self, body: Formula) -> Formula:
        return neg(Box(neg(body)))

    def forall(self, var: Token, body: Formula) -> Formula:
        return Forall(str(var), body)

    def exists(self, var: Token, body: Formula) -> Formula:
        return Exists(str(var), body)

    def conj(self, left: Formula, right: Formula) -> Formula:
        return And(left, right)

    def disj(self, left: Formula, right: Formula) -> Formula:
        return Or(left, right)

    def imp(self, left: Formula, right: Formula) -> Formula:
        return Imp(left, right)

    def iff(self, left: Formula, right: Formula) -> Formula:
        return iff(left, right)


def _declarations(trees: list[Tree]) -> Signature:
    decls = []
    for tree in trees:
        sort = Sort.PROBLEM if tree.data == "prob_decl" else Sort.PROPOSITION
        for item in tree.children:
            name = str(item.children[0])
            if name in KEYWORDS:
                raise ParseError(f"'{name}' is a reserved word and cannot name an atom.")
            arity = int(item.children[1]) if len(item.children) > 1 else 0
            decls.append(AtomDecl(name, sort, arity))
    try:
        return Signature(tuple(decls))
    except ValueError as e:
        raise ParseError(str(e)) from None


def _parse_tree(text: str, start: str) -> Tree:
    try:
        return _lark().parse(text, start=start)
    except UnexpectedInput as e:
        context = e.get_context(text).rstrip()
        raise ParseError(f"Syntax error at line {e.line}, column {e.column}:\n{context}") from None


def _build(tree: Tree | Formula, sig: Signature) -> Formula:
    if isinstance(tree, Formula):
        return tree
    try:
        formula = FormulaBuilder(sig).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, QHCError):
            raise e.orig_exc from None
        raise
    typecheck(formula, sig)
    return formula


def parse_formula(text: str, sig: Signature) -> Formula:
    """
    Parses and typechecks a single formula.

    Raises:
        ParseError, UndeclaredAtom, ArityMismatch, SortClash
    """
    return _build(_parse_tree(text, "formula"), sig)


def parse_signature(text: str) -> Signature:
    return _declarations(_parse_tree(text, "sigfile").children)


def parse_sequent(text: str, sig: Signature) -> tuple[tuple[Formula, ...], Formula]:
    """`A; B |- C` gives ((A, B), C); a bare formula is a sequent without premises."""
    if "|-" not in text:
        return (), parse_formula(text, sig)
    tree = _parse_tree(text, "sequent")
    parts = [c for c in tree.children if not (isinstance(c, Token) and c.type == "TURNSTILE")]
    formulas = tuple(_build(p, sig) for p in parts)
    return formulas[:-1], formulas[-1]


def parse_document(text: str, sig: Signature | None = None) -> tuple[Signature, list[Formula]]:
    """A declaration preamble followed by formulas separated by ';'."""
    tree = _parse_tree(text, "document")
    decls, bodies = [], []
    for child in tree.children:
        is_decl = isinstance(child, Tree) and child.data in ("prob_decl", "prop_decl")
        (decls if is_decl else bodies).append(child)
    try:
        full = (sig or Signature()).merge(_declarations(decls))
    except QHCError as e:
        raise ParseError(str(e)) from None
    return full, [_build(b, full) for b in bodies]
