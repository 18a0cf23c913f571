"""Module: Exceptions"""


class PermPolyError(Exception):
    """Class: base error of the package"""


class FieldError(PermPolyError, ValueError):
    """Class: invalid field request or field misuse"""


class FieldMismatchError(FieldError):
    """Class: operands live in different fields"""


class PoleError(PermPolyError, ArithmeticError):
    """Class: a rational map was evaluated at a root of its denominator"""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"denominator vanishes at element {index}")


class HypothesisError(PermPolyError, ValueError):
    """Class: constructor parameters violate the family hypotheses"""


class ViewError(PermPolyError, ValueError):
    """Class: a subgroup view cannot be built for the given field"""


class InversionError(PermPolyError, ArithmeticError):
    """Class: explicit inversion found zero or several preimages"""
