"""Exception hierarchy shared by every module of the package."""


class ProfileError(Exception):
    """Base class for all errors raised by minprofile."""


class InvalidGraphError(ProfileError, ValueError):
    pass


class InvalidOrderingError(ProfileError, ValueError):
    pass


class NotConnectedError(ProfileError, ValueError):
    pass


class NotAChainError(ProfileError, ValueError):
    pass


class NotTwoEdgeConnectedError(ProfileError, ValueError):
    pass


class NotABridgeError(ProfileError, ValueError):
    pass


class PreconditionError(ProfileError, ValueError):
    """A documented precondition of a transform does not hold."""


class SwapRefusedError(PreconditionError):
    """A swap was requested under a guarantee whose hypotheses fail."""


class RuleNotApplicableError(ProfileError, ValueError):
    pass


class CapacityError(ProfileError):
    """Instance exceeds the configured exact-solver capacity."""


class BudgetExhaustedError(ProfileError):
    """Search stopped on its node or time budget before proving optimality."""


class ParseError(ProfileError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
