from .calculi import (
    Calculus, RuleSchema, Discipline, CalculusRegistry, CALCULI, BUILTIN_NAMES,
    builtin, extend, register, get_calculus, make_schema, make_rule, hilbert_base,
    define_theory, register_theory,
)
