"""Exception hierarchy shared by every module.

All errors raised on purpose by the library derive from :class:`FractalError`;
the CLI maps any of them to exit status 2.
"""


class FractalError(Exception):
    """Base class for library errors."""


class DomainError(FractalError, ValueError):
    """An argument lies outside the domain of an operation."""


class GammaPoleError(DomainError):
    """A gamma ratio hits an isolated pole in its numerator."""


class ConvergenceError(FractalError, ArithmeticError):
    """A series summation did not reach its tolerance within the term cap."""


class NoPrimitiveError(DomainError):
    """The series has no single-valued primitive."""


class PoleEvaluationError(DomainError):
    """Evaluation requested at a pole."""


class DocumentError(DomainError):
    """A series document is malformed."""
