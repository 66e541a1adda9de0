# src/logic/printer.py

"""
Pretty-printer for the concrete syntax accepted by logic.parser.

Modes:
    keep    canonical text; parse(format(f)) == f
    fold    display ?!A as `box A`, !?A as `nabla A` and ~?!~A as `dia A`
    expand  display the primitive modalities box/nabla as ?!/!?
Abbreviations ~, <->, top and 1 are folded back in every mode.
"""

from __future__ import annotations

from logic.formula import (
    And, Atom, Box, Exists, FalseC, FalseI, Forall, Formula, Imp, Nabla, Oc, Or,
    Signature, Wn, negated,
)

MODES = ("keep", "fold", "expand")

# binding strength of each printed form
_IFF, _IMP, _DISJ, _CONJ, _UNARY, _ATOM = range(6)


def format_formula(f: Formula, mode: str = "keep") -> str:
    if mode not in MODES:
        raise ValueError(f"Unknown print mode '{mode}'; expected one of {', '.join(MODES)}.")
    return _fmt(f, mode)[0]


def format_sequent(hypotheses, goal: Formula, mode: str = "keep") -> str:
    if not hypotheses:
        return format_formula(goal, mode)
    return f"{'; '.join(format_formula(h, mode) for h in hypotheses)} |- {format_formula(goal, mode)}"


def format_signature(sig: Signature) -> str:
    return sig.to_text()


def _wrap(part: tuple[str, int], level: int) -> str:
    text, strength = part
    return text if strength >= level else f"({text})"


def _boxed(f: Formula, mode: str) -> Formula | None:
    """Operand of a box, as displayed in mode."""
    if isinstance(f, Box):
        return f.body
    if mode == "fold" and isinstance(f, Wn) and isinstance(f.body, Oc):
        return f.body.body
    return None


def _fmt(f: Formula, mode: str) -> tuple[str, int]:
    if isinstance(f, Atom):
        return (f.name if not f.args else f"{f.name}({','.join(f.args)})"), _ATOM
    if isinstance(f, FalseI):
        return "bot", _ATOM
    if isinstance(f, FalseC):
        return "0", _ATOM

    if isinstance(f, Imp) and isinstance(f.left, FalseI) and isinstance(f.right, FalseI):
        return "top", _ATOM
    if isinstance(f, Imp) and isinstance(f.left, FalseC) and isinstance(f.right, FalseC):
        return "1", _ATOM

    if isinstance(f, And) and isinstance(f.left, Imp) and isinstance(f.right, Imp) \
            and f.left.left == f.right.right and f.left.right == f.right.left:
        return f"{_wrap(_fmt(f.left.left, mode), _IMP)} <-> {_wrap(_fmt(f.left.right, mode), _IMP)}", _IFF

    body = negated(f)
    if body is not None:
        if mode == "fold":
            inner = _boxed(body, mode)
            if inner is not None and negated(inner) is not None:
                return f"dia {_wrap(_fmt(negated(inner), mode), _UNARY)}", _UNARY
        return f"~{_wrap(_fmt(body, mode), _UNARY)}", _UNARY

    if isinstance(f, Imp):
        return f"{_wrap(_fmt(f.left, mode), _DISJ)} -> {_wrap(_fmt(f.right, mode), _IMP)}", _IMP
    if isinstance(f, Or):
        return f"{_wrap(_fmt(f.left, mode), _DISJ)} | {_wrap(_fmt(f.right, mode), _CONJ)}", _DISJ
    if isinstance(f, And):
        return f"{_wrap(_fmt(f.left, mode), _CONJ)} & {_wrap(_fmt(f.right, mode), _UNARY)}", _CONJ
    if isinstance(f, (Forall, Exists)):
        keyword = "forall" if isinstance(f, Forall) else "exists"
        return f"{keyword} {f.var}. {_wrap(_fmt(f.body, mode), _UNARY)}", _UNARY

    if mode == "fold":
        if isinstance(f, Wn) and isinstance(f.body, Oc):
            return f"box {_wrap(_fmt(f.body.body, mode), _UNARY)}", _UNARY
        if isinstance(f, Oc) and isinstance(f.body, Wn):
            return f"nabla {_wrap(_fmt(f.body.body, mode), _UNARY)}", _UNARY
    if isinstance(f, Box):
        prefix = "?!" if mode == "expand" else "box "
        return f"{prefix}{_wrap(_fmt(f.body, mode), _UNARY)}", _UNARY
    if isinstance(f, Nabla):
        prefix = "!?" if mode == "expand" else "nabla "
        return f"{prefix}{_wrap(_fmt(f.body, mode), _UNARY)}", _UNARY
    if isinstance(f, Wn):
        return f"?{_wrap(_fmt(f.body, mode), _UNARY)}", _UNARY
    if isinstance(f, Oc):
        return f"!{_wrap(_fmt(f.body, mode), _UNARY)}", _UNARY
    raise TypeError(f"Not a formula: {f!r}")
