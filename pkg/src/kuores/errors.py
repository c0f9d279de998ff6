"""Exception hierarchy shared by every kuores module."""


class KuoresError(Exception):
    """Base class for all library errors."""


class NotInvertible(KuoresError, ZeroDivisionError):
    pass


class DivisionByZero(KuoresError, ZeroDivisionError):
    pass


class UnsupportedDivision(KuoresError, ValueError):
    """Division by a non-monic polynomial over a ring that is not a field."""


class ExactDivisionError(KuoresError, ValueError):
    """An exact quotient was requested but the division leaves a remainder."""


class VariableMismatch(KuoresError, TypeError):
    pass


class FieldMismatch(KuoresError, TypeError):
    pass


class NotPrime(KuoresError, ValueError):
    pass


class ReducibleModulus(KuoresError, ValueError):
    pass


class NonMonicInput(KuoresError, ValueError):
    pass


class DegenerateInput(KuoresError, ValueError):
    pass


class DegenerateResultant(KuoresError, ValueError):
    pass


class UndefinedResult(KuoresError, ValueError):
    """gcd(0, 0), the Newton polygon of zero, and similar."""


class ResultantMismatch(KuoresError, RuntimeError):
    """Two independent resultant algorithms disagreed."""


class TheoremViolation(KuoresError, RuntimeError):
    """A finite-field instance contradicts one of the verified statements."""


class ParseError(KuoresError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
