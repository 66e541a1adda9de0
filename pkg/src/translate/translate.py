# src/translate/translate.py

"""
Syntactic interpretations between QHC, QS4, QH4, QH and QC.

Every transformer is total on its source language and returns a formula of its
target language. Atoms that change sort keep their names (see logic.formula.retype).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from logic.errors import SortClash
from logic.formula import (
    Atom, Box, Exists, FalseC, FalseI, Forall, Formula, Imp, Nabla, Oc, Or, Sort, Wn,
    box, children, diamond, nabla, neg, rebuild,
)


def _structural(f: Formula, rec: Callable[[Formula], Formula]) -> Formula:
    parts = children(f)
    return rebuild(f, *(rec(p) for p in parts)) if parts else f


def _retyped(atom: Atom, sort: Sort) -> Atom:
    return Atom(atom.name, atom.args, sort)


def _negneg(f: Formula) -> Formula:
    return neg(neg(f))


# -----------------------------
# QHC -> QS4
# -----------------------------

def box_translate(f: Formula, prefix_all: bool = False) -> Formula:
    """
    Into the QS4 language: atomic problems become boxed atomic propositions, bot
    becomes 0, intuitionistic -> and forall are boxed, ? is erased and ! becomes box.
    With prefix_all every intuitionistic connective is boxed; on QH formulas the two
    forms are S4-equivalent.
    """
    def rec(g: Formula) -> Formula:
        if isinstance(g, Atom):
            return Box(_retyped(g, Sort.PROPOSITION)) if g.sort is Sort.PROBLEM else g
        if isinstance(g, (FalseI, FalseC)):
            return FalseC()
        if isinstance(g, Wn):
            return rec(g.body)
        if isinstance(g, (Oc, Box, Nabla)):
            return Box(rec(g.body))
        image = _structural(g, rec)
        if g.sort is Sort.PROBLEM and (prefix_all or isinstance(g, (Imp, Forall))):
            return Box(image)
        return image
    return rec(f)


# -----------------------------
# QHC -> QH
# -----------------------------

def negneg_translate(f: Formula) -> Formula:
    """
    Into the QH language: atomic propositions become doubly negated atomic problems,
    0 becomes bot, classical | and exists are doubly negated, ! is erased and ?
    becomes ~~.
    """
    def rec(g: Formula) -> Formula:
        if isinstance(g, Atom):
            return _negneg(_retyped(g, Sort.PROBLEM)) if g.sort is Sort.PROPOSITION else g
        if isinstance(g, (FalseI, FalseC)):
            return FalseI()
        if isinstance(g, Oc):
            return rec(g.body)
        if isinstance(g, (Wn, Box, Nabla)):
            return _negneg(rec(g.body))
        image = _structural(g, rec)
        if g.sort is Sort.PROPOSITION and isinstance(g, (Or, Exists)):
            return _negneg(image)
        return image
    return rec(f)


def kuroda_translate(f: Formula) -> Formula:
    """
    The Kuroda-style form: atoms are retyped without negations, ~~ is inserted
    after every classical forall and in front of the whole formula.
    """
    def rec(g: Formula) -> Formula:
        if isinstance(g, Atom):
            return _retyped(g, Sort.PROBLEM)
        if isinstance(g, (FalseI, FalseC)):
            return FalseI()
        if isinstance(g, Oc):
            return rec(g.body)
        if isinstance(g, (Wn, Box, Nabla)):
            return _negneg(rec(g.body))
        if isinstance(g, Forall) and g.sort is Sort.PROPOSITION:
            return Forall(g.var, _negneg(rec(g.body)))
        return _structural(g, rec)
    image = rec(f)
    return _negneg(image) if f.sort is Sort.PROPOSITION else image


# -----------------------------
# Within QHC
# -----------------------------

def nabla_translate(f: Formula, primitive: bool = False) -> Formula:
    """
    Prefixes atomic problems, intuitionistic | and intuitionistic exists by !? (by the
    primitive nabla of QH4 when primitive is set); structural otherwise.
    """
    wrap = Nabla if primitive else nabla

    def rec(g: Formula) -> Formula:
        if isinstance(g, Atom):
            return wrap(g) if g.sort is Sort.PROBLEM else g
        image = _structural(g, rec)
        if g.sort is Sort.PROBLEM and isinstance(g, (Or, Exists)):
            return wrap(image)
        return image
    return rec(f)


def _bdb(f: Formula) -> Formula:
    return box(diamond(box(f)))


def diamond_translate(f: Formula) -> Formula:
    """
    Prefixes atomic propositions, ? and classical | and exists by box dia box, and
    classical -> and forall by box, where box is ?! and dia is ~box~.
    """
    def rec(g: Formula) -> Formula:
        if isinstance(g, Atom):
            return _bdb(g) if g.sort is Sort.PROPOSITION else g
        if isinstance(g, (FalseI, FalseC)):
            return g
        image = _structural(g, rec)
        if isinstance(g, Wn):
            return _bdb(image)
        if g.sort is Sort.PROPOSITION and isinstance(g, (Or, Exists)):
            return _bdb(image)
        if g.sort is Sort.PROPOSITION and isinstance(g, (Imp, Forall)):
            return box(image)
        return image
    return rec(f)


# -----------------------------
# Embeddings of the modal calculi
# -----------------------------

def embed_qs4(f: Formula) -> Formula:
    """box becomes ?!."""
    def rec(g: Formula) -> Formula:
        if isinstance(g, Box):
            return box(rec(g.body))
        return _structural(g, rec)
    return rec(f)


def embed_qh4(f: Formula) -> Formula:
    """nabla becomes !?."""
    def rec(g: Formula) -> Formula:
        if isinstance(g, Nabla):
            return nabla(rec(g.body))
        return _structural(g, rec)
    return rec(f)


def unembed_qs4(f: Formula) -> Formula:
    """
    Folds ?! back into box.

    Raises:
        SortClash: a ? or ! is left that is not part of a ?! pair.
    """
    def rec(g: Formula) -> Formula:
        if isinstance(g, Wn) and isinstance(g.body, Oc):
            return Box(rec(g.body.body))
        if isinstance(g, (Wn, Oc)):
            raise SortClash(f"{g} has no reading in the QS4 language")
        return _structural(g, rec)
    return rec(f)


def unembed_qh4(f: Formula) -> Formula:
    """Folds !? back into nabla; other ? and ! raise SortClash."""
    def rec(g: Formula) -> Formula:
        if isinstance(g, Oc) and isinstance(g.body, Wn):
            return Nabla(rec(g.body.body))
        if isinstance(g, (Wn, Oc)):
            raise SortClash(f"{g} has no reading in the QH4 language")
        return _structural(g, rec)
    return rec(f)


def subst_nabla_negneg(f: Formula) -> Formula:
    """nabla becomes ~~, giving a QH formula from a QH4 one."""
    def rec(g: Formula) -> Formula:
        if isinstance(g, Nabla):
            return _negneg(rec(g.body))
        return _structural(g, rec)
    return rec(f)


# -----------------------------
# Registry
# -----------------------------

@dataclass(frozen=True)
class Translation:
    name: str
    source: str
    target: str
    apply: Callable[[Formula], Formula]

    def __call__(self, f: Formula) -> Formula:
        return self.apply(f)


TRANSLATIONS = {
    "box": Translation("Box", "QHC", "QS4", box_translate),
    "negneg": Translation("NegNeg", "QHC", "QH", negneg_translate),
    "nabla": Translation("Nabla", "QHC", "QHC", nabla_translate),
    "diamond": Translation("Diamond", "QHC", "QHC", diamond_translate),
    "embed_qs4": Translation("EmbedQS4", "QS4", "QHC", embed_qs4),
    "embed_qh4": Translation("EmbedQH4", "QH4", "QHC", embed_qh4),
}


def get_translation(name: str) -> Translation:
    try:
        return TRANSLATIONS[name.lower()]
    except KeyError:
        raise KeyError(f"Unknown translation '{name}'; expected one of {', '.join(TRANSLATIONS)}.") from None
