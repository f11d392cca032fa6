"""Exception hierarchy.

Every error carries a machine-readable ``code`` and the process exit status
the command-line front end uses when the error escapes a command.
"""


class ConvCodesError(Exception):
    code = "Error"
    exit_status = 1


class ParameterError(ConvCodesError, ValueError):
    code = "ParameterError"
    exit_status = 2


class DivisibilityError(ParameterError):
    code = "DivisibilityError"


class SearchLimitError(ParameterError):
    code = "SearchLimitError"


class DimensionError(ParameterError):
    code = "DimensionError"


class DuplicateAbscissaError(ParameterError):
    code = "DuplicateAbscissaError"


class LayoutError(ParameterError):
    code = "LayoutError"


class FieldMismatchError(ConvCodesError, ValueError):
    code = "FieldMismatchError"
    exit_status = 2


class SingularMatrixError(ConvCodesError, ArithmeticError):
    code = "SingularMatrixError"
    exit_status = 3


class NotInSpaceError(ConvCodesError, ValueError):
    """A polynomial is not a member of the requested span."""

    code = "NotInSpaceError"
    exit_status = 3


class VerificationError(ConvCodesError):
    code = "VerificationError"
    exit_status = 3


class ConditionViolation(VerificationError):
    """A structural condition on a conversion matrix failed.

    ``witness`` names the offending index tuple, e.g. ``(s, i, j)``.
    """

    code = "ConditionViolation"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InconsistentSymbolsError(VerificationError):
    code = "InconsistentSymbolsError"


class NotACodewordError(VerificationError):
    code = "NotACodewordError"


class InsufficientGroupError(VerificationError):
    code = "InsufficientGroupError"


class BudgetExceededError(ConvCodesError):
    code = "BudgetExceededError"
    exit_status = 3


class SpecFileError(ConvCodesError):
    code = "SpecFileError"
    exit_status = 4
