# src/logic/formula.py

"""
Two-sorted formula language of QHC.

Problems (the intuitionistic sort) and propositions (the classical sort) share the
connectives &, |, ->, forall and exists; `?` turns a problem into a proposition,
`!` turns a proposition into a problem. `Box` and `Nabla` are the primitive
modalities of the QS4 and QH4 languages, whose QHC readings are `?!` and `!?`.

All nodes are immutable and compare structurally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

from logic.errors import ArityMismatch, CaptureViolation, SortClash, UndeclaredAtom

Term = str


class Sort(str, Enum):
    PROBLEM = "problem"
    PROPOSITION = "proposition"

    @property
    def other(self) -> "Sort":
        return Sort.PROPOSITION if self is Sort.PROBLEM else Sort.PROBLEM

    @property
    def keyword(self) -> str:
        """Declaration keyword used in concrete syntax."""
        return "prob" if self is Sort.PROBLEM else "prop"


class Formula:
    """Base class of every AST node."""

    __slots__ = ()

    def __str__(self) -> str:
        from logic.printer import format_formula
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str
    args: tuple[Term, ...] = ()
    sort: Sort = Sort.PROPOSITION

    @property
    def arity(self) -> int:
        return len(self.args)


@dataclass(frozen=True, slots=True)
class FalseC(Formula):
    """Classical falsity `0`."""

    @property
    def sort(self) -> Sort:
        return Sort.PROPOSITION


@dataclass(frozen=True, slots=True)
class FalseI(Formula):
    """Intuitionistic absurdity `bot`."""

    @property
    def sort(self) -> Sort:
        return Sort.PROBLEM


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula

    @property
    def sort(self) -> Sort:
        return self.left.sort


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula

    @property
    def sort(self) -> Sort:
        return self.left.sort


@dataclass(frozen=True, slots=True)
class Imp(Formula):
    left: Formula
    right: Formula

    @property
    def sort(self) -> Sort:
        return self.left.sort


@dataclass(frozen=True, slots=True)
class Forall(Formula):
    var: str
    body: Formula

    @property
    def sort(self) -> Sort:
        return self.body.sort


@dataclass(frozen=True, slots=True)
class Exists(Formula):
    var: str
    body: Formula

    @property
    def sort(self) -> Sort:
        return self.body.sort


@dataclass(frozen=True, slots=True)
class Wn(Formula):
    """`?`: a problem has a solution."""
    body: Formula

    @property
    def sort(self) -> Sort:
        return Sort.PROPOSITION


@dataclass(frozen=True, slots=True)
class Oc(Formula):
    """`!`: prove the proposition."""
    body: Formula

    @property
    def sort(self) -> Sort:
        return Sort.PROBLEM


@dataclass(frozen=True, slots=True)
class Box(Formula):
    body: Formula

    @property
    def sort(self) -> Sort:
        return Sort.PROPOSITION


@dataclass(frozen=True, slots=True)
class Nabla(Formula):
    body: Formula

    @property
    def sort(self) -> Sort:
        return Sort.PROBLEM


BINARY = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)
UNARY = (Wn, Oc, Box, Nabla)

# operand sort demanded by each sort-changing connective
_OPERAND_SORT = {
    Wn: Sort.PROBLEM,
    Oc: Sort.PROPOSITION,
    Box: Sort.PROPOSITION,
    Nabla: Sort.PROBLEM,
}


# -----------------------------
# Signatures
# -----------------------------

@dataclass(frozen=True, slots=True)
class AtomDecl:
    name: str
    sort: Sort
    arity: int = 0

    def __str__(self) -> str:
        return self.name if self.arity == 0 else f"{self.name}({self.arity})"


@dataclass(frozen=True, slots=True)
class Signature:
    """
    The declared atom alphabet. Names are unique across both sorts.

    Args:
        atoms (tuple): AtomDecl entries, in declaration order.
    """
    atoms: tuple[AtomDecl, ...] = ()
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for decl in self.atoms:
            if decl.arity < 0:
                raise ValueError(f"Atom '{decl.name}' has negative arity {decl.arity}.")
            if decl.name in index:
                raise ValueError(f"Atom '{decl.name}' is declared twice.")
            index[decl.name] = decl
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, problems: Iterable[str | tuple[str, int]] = (),
           propositions: Iterable[str | tuple[str, int]] = ()) -> "Signature":
        """Builds a signature from names, or (name, arity) pairs, per sort."""
        decls = []
        for sort, entries in ((Sort.PROBLEM, problems), (Sort.PROPOSITION, propositions)):
            for entry in entries:
                name, arity = (entry, 0) if isinstance(entry, str) else entry
                decls.append(AtomDecl(name, sort, arity))
        return cls(tuple(decls))

    def lookup(self, name: str) -> AtomDecl:
        try:
            return self._index[name]
        except KeyError:
            raise UndeclaredAtom(f"Atom '{name}' is not declared in the signature.") from None

    def get(self, name: str) -> AtomDecl | None:
        return self._index.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[AtomDecl]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def names(self) -> set[str]:
        return set(self._index)

    def of_sort(self, sort: Sort) -> tuple[AtomDecl, ...]:
        return tuple(d for d in self.atoms if d.sort is sort)

    def declare(self, *decls: AtomDecl) -> "Signature":
        """Returns a signature extended by decls; redeclaring identically is a no-op."""
        extra = []
        for decl in decls:
            known = self._index.get(decl.name)
            if known is None:
                extra.append(decl)
            elif known != decl:
                raise SortClash(f"Atom '{decl.name}' is already declared as {known.sort.value} "
                                f"of arity {known.arity}.")
        return Signature(self.atoms + tuple(extra)) if extra else self

    def merge(self, other: "Signature") -> "Signature":
        return self.declare(*other.atoms)

    def retyped(self, sort: Sort | None = None) -> "Signature":
        """Flips every atom to `sort`, or to its other sort when sort is None."""
        return Signature(tuple(AtomDecl(d.name, sort or d.sort.other, d.arity) for d in self.atoms))

    def to_text(self) -> str:
        lines = []
        for sort in Sort:
            decls = self.of_sort(sort)
            if decls:
                lines.append(f"{sort.keyword} {', '.join(str(d) for d in decls)}.")
        return "\n".join(lines)


# -----------------------------
# Construction helpers
# -----------------------------

def falsum(sort: Sort) -> Formula:
    return FalseI() if sort is Sort.PROBLEM else FalseC()


def is_falsum(f: Formula) -> bool:
    return isinstance(f, (FalseC, FalseI))


def neg(f: Formula) -> Formula:
    """~f, with the falsity constant of f's sort."""
    return Imp(f, falsum(f.sort))


def negated(f: Formula) -> Formula | None:
    """Returns A when f is ~A (with the matching falsity constant), else None."""
    if isinstance(f, Imp) and is_falsum(f.right) and f.right.sort is f.left.sort:
        return f.left
    return None


def iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


def top(sort: Sort) -> Formula:
    return neg(falsum(sort))


def box(f: Formula) -> Formula:
    """The QHC rendering of box: ?!f."""
    return Wn(Oc(f))


def nabla(f: Formula) -> Formula:
    """The QHC rendering of nabla: !?f."""
    return Oc(Wn(f))


def diamond(f: Formula) -> Formula:
    """~?!~f on propositions."""
    return neg(box(neg(f)))


# -----------------------------
# Traversal
# -----------------------------

def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, BINARY):
        return (f.left, f.right)
    if isinstance(f, QUANTIFIERS + UNARY):
        return (f.body,)
    return ()


def rebuild(f: Formula, *parts: Formula) -> Formula:
    """Same connective as f, new immediate subformulas."""
    if isinstance(f, BINARY):
        return type(f)(parts[0], parts[1])
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, parts[0])
    if isinstance(f, UNARY):
        return type(f)(parts[0])
    return f


def subformulas(f: Formula) -> set[Formula]:
    seen: set[Formula] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g not in seen:
            seen.add(g)
            stack.extend(children(g))
    return seen


def atoms_of(f: Formula) -> set[Atom]:
    return {g for g in subformulas(f) if isinstance(g, Atom)}


def atom_decls(f: Formula) -> set[AtomDecl]:
    return {AtomDecl(a.name, a.sort, a.arity) for a in atoms_of(f)}


def depth(f: Formula) -> int:
    """Connective nesting depth; atoms and constants have depth 0."""
    parts = children(f)
    return 0 if not parts else 1 + max(depth(p) for p in parts)


def modal_depth(f: Formula) -> int:
    parts = children(f)
    inner = max((modal_depth(p) for p in parts), default=0)
    return inner + 1 if isinstance(f, UNARY) else inner


def size(f: Formula) -> int:
    return 1 + sum(size(p) for p in children(f))


def is_quantifier_free(f: Formula) -> bool:
    return not any(isinstance(g, QUANTIFIERS) for g in subformulas(f))


def is_propositional(f: Formula) -> bool:
    """No quantifiers and only 0-ary atoms."""
    return all(not isinstance(g, QUANTIFIERS) and not (isinstance(g, Atom) and g.args)
               for g in subformulas(f))


# -----------------------------
# Typing
# -----------------------------

def typecheck(f: Formula, sig: Signature) -> Sort:
    """
    Returns the unique sort of f over sig.

    Raises:
        UndeclaredAtom, ArityMismatch, SortClash
    """
    if isinstance(f, Atom):
        decl = sig.lookup(f.name)
        if decl.arity != f.arity:
            raise ArityMismatch(f"Atom '{f.name}' is declared with arity {decl.arity} "
                                f"but used with {f.arity} argument(s).")
        if decl.sort is not f.sort:
            raise SortClash(f"Atom '{f.name}' is declared as a {decl.sort.value} "
                            f"but occurs as a {f.sort.value}.")
        return decl.sort
    if isinstance(f, (FalseC, FalseI)):
        return f.sort
    if isinstance(f, BINARY):
        left, right = typecheck(f.left, sig), typecheck(f.right, sig)
        if left is not right:
            raise SortClash(f"{type(f).__name__} joins a {left.value} with a {right.value}: {f}")
        return left
    if isinstance(f, QUANTIFIERS):
        return typecheck(f.body, sig)
    if isinstance(f, UNARY):
        wanted = _OPERAND_SORT[type(f)]
        got = typecheck(f.body, sig)
        if got is not wanted:
            raise SortClash(f"{_connective_symbol(f)} expects a {wanted.value} operand, "
                            f"got a {got.value}: {f}")
        return f.sort
    raise TypeError(f"Not a formula: {f!r}")


def _connective_symbol(f: Formula) -> str:
    return {Wn: "'?'", Oc: "'!'", Box: "'box'", Nabla: "'nabla'"}[type(f)]


# -----------------------------
# Variables and substitution
# -----------------------------

def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        return frozenset(f.args)
    if isinstance(f, QUANTIFIERS):
        return free_vars(f.body) - {f.var}
    result: frozenset[str] = frozenset()
    for part in children(f):
        result |= free_vars(part)
    return result


def bound_vars(f: Formula) -> frozenset[str]:
    return frozenset(g.var for g in subformulas(f) if isinstance(g, QUANTIFIERS))


def subst_term(f: Formula, var: str, term: Term) -> Formula:
    """f with term replacing the free occurrences of var; never renames."""
    return subst_terms(f, {var: term})


def subst_terms(f: Formula, mapping: Mapping[str, Term]) -> Formula:
    """
    Simultaneous capture-checked replacement of free variables.

    Raises:
        CaptureViolation: a replacing term would fall under one of f's quantifiers.
    """
    live = {var: term for var, term in mapping.items() if var != term}
    if not live:
        return f
    return _subst(f, live)


def _subst(f: Formula, mapping: dict[str, Term]) -> Formula:
    if isinstance(f, Atom):
        if not any(a in mapping for a in f.args):
            return f
        return Atom(f.name, tuple(mapping.get(a, a) for a in f.args), f.sort)
    if isinstance(f, QUANTIFIERS):
        inner = {var: term for var, term in mapping.items() if var != f.var}
        if not inner:
            return f
        body_free = free_vars(f.body)
        for var, term in inner.items():
            if term == f.var and var in body_free:
                raise CaptureViolation(f"'{term}' is not free for '{var}' in {f}: "
                                       f"it would be captured by the quantifier on '{f.var}'.")
        return type(f)(f.var, _subst(f.body, inner))
    parts = children(f)
    if not parts:
        return f
    return rebuild(f, *(_subst(p, mapping) for p in parts))


def retype(f: Formula, sort: Sort) -> Formula:
    """
    Name-preserving sort flip: every atom and falsity constant moves to `sort`.
    Only defined on the shared connectives (the QH/QC fragment).
    """
    if isinstance(f, Atom):
        return f if f.sort is sort else Atom(f.name, f.args, sort)
    if isinstance(f, (FalseC, FalseI)):
        return falsum(sort)
    if isinstance(f, UNARY):
        raise SortClash(f"Cannot retype across sorts through {_connective_symbol(f)}: {f}")
    parts = children(f)
    return rebuild(f, *(retype(p, sort) for p in parts))
