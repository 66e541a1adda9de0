from .errors import (
    QHCError, ParseError, UndeclaredAtom, ArityMismatch, SortClash, CaptureViolation,
    UnboundMetavariable, UnknownCalculus, UnknownLemma, NonPropositionalInput, UnknownAtom,
    CyclicLemmaDependency, ScriptError, DeductionError,
)
from .formula import (
    Sort, Term, Formula, Atom, FalseC, FalseI, And, Or, Imp, Forall, Exists, Wn, Oc, Box, Nabla,
    AtomDecl, Signature, typecheck, free_vars, subst_term, subst_terms, retype,
    neg, iff, falsum, top, box, nabla, diamond, negated,
)
from .schema import Instance, Metavariable, Schema, instantiate, match_schema, lam
from .parser import parse_formula, parse_signature, parse_sequent, parse_document
from .printer import format_formula, format_sequent
from .generator import FormulaGenerator
