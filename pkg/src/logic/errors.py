"""Exception hierarchy shared by every QHC component."""


class QHCError(Exception):
    """Base class for all errors raised by the QHC toolchain."""


class ParseError(QHCError, ValueError):
    pass


class UndeclaredAtom(QHCError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "undeclared atom"


class ArityMismatch(QHCError, ValueError):
    pass


class SortClash(QHCError, TypeError):
    pass


class CaptureViolation(QHCError, ValueError):
    pass


class UnboundMetavariable(QHCError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unbound metavariable"


class UnknownCalculus(QHCError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown calculus"


class UnknownLemma(QHCError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown lemma"


class NonPropositionalInput(QHCError, ValueError):
    pass


class UnknownAtom(QHCError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown atom"


class CyclicLemmaDependency(QHCError, ValueError):
    pass


class ScriptError(QHCError, ValueError):
    """A proof script that cannot be read; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        super().__init__(message if lineno is None else f"line {lineno}: {message}")
        self.lineno = lineno


class DeductionError(QHCError, ValueError):
    pass
