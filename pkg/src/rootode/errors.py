"""Exception types shared across the package."""


class RootodeError(Exception):
    """Base class for errors raised by this package."""


class VariableMismatchError(RootodeError):
    """Polynomials in different variables were combined."""


class NonExactDivisionError(RootodeError):
    """An exact polynomial division left a remainder.

    Raised where divisibility is a mathematical certainty, so hitting this
    signals an implementation bug rather than bad input.
    """


class EmptyKernelError(RootodeError):
    """A linear system that must be singular turned out not to be."""


class DomainError(RootodeError):
    """Input lies outside the validity domain of a formula or method."""


class SingularIntegrandError(RootodeError):
    """An integrand evaluated to a non-finite value inside the interval."""


class QuadratureError(RootodeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class ParseError(RootodeError):
    """Polynomial text could not be parsed.

    The offset of the offending character is kept in ``position``.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
