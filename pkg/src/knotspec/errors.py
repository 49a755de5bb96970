"""Exception hierarchy.

Every validation failure raised by the library derives from
:class:`KnotSpecError`, which the CLI maps to exit status 2.
"""


class KnotSpecError(ValueError):
    """Base class for all validation errors."""


class InvalidFraction(KnotSpecError):
    pass


class DegenerateTower(KnotSpecError):
    """A continued-fraction tower divides by zero while folding."""


class NotAKnot(KnotSpecError):
    """The parameters describe a link with more than one component."""


class InvalidFamily(KnotSpecError):
    """Structurally invalid knot-family parameters."""


class NotHTAdmissible(KnotSpecError):
    """An expansion has a coefficient with absolute value below 2."""


class NoArcToStabilize(KnotSpecError):
    pass


class PreconditionViolation(KnotSpecError):
    pass


class HypothesisNotSatisfied(KnotSpecError):
    """The input does not meet the hypothesis of a conjectural formula."""


class InvalidStrandCount(KnotSpecError):
    pass


class UnsupportedStrandCount(KnotSpecError):
    pass


class ParseError(KnotSpecError):
    """A text literal could not be parsed.

    ``token`` holds the offending piece of input.
    """

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token
