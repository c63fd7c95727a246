"""Exception types shared across the package."""


class BochnerError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BochnerError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(BochnerError):
    """Malformed textual input (scalar strings, JSON documents, CLI flags)."""


class InvalidOperator(BochnerError):
    """A differential operator violating the degree condition deg(a_i) <= i,
    with vanishing leading coefficient, or otherwise unusable."""


class InvalidEigenSystem(BochnerError):
    """An eigenvalue/eigenpolynomial family violating the monic, degree or
    normalization requirements."""


class InsufficientData(BochnerError):
    """A table or data set is too small for the requested computation."""


class DegenerateSpectrum(BochnerError):
    """Eigenvalues collide, or vanish at a positive index.

    `indices` carries the offending positions: a pair (n, m) for a collision,
    a singleton (n,) for a vanishing eigenvalue.
    """

    def __init__(self, indices, message=None):
        self.indices = tuple(indices)
        if message is None:
            if len(self.indices) == 1:
                message = f"eigenvalue at index {self.indices[0]} vanishes"
            else:
                message = "eigenvalues at indices {} coincide".format(
                    ", ".join(str(i) for i in self.indices)
                )
        super().__init__(message)


class NoFiniteOrderOperator(BochnerError):
    """The prescribed eigen-data admits no differential operator of the
    requested finite order.

    `order` is the order that was tested; `failure` is the first table
    position (n, k) at which the finite-order criterion breaks.
    """

    def __init__(self, order, failure, message=None):
        self.order = order
        self.failure = tuple(failure)
        if message is None:
            message = (
                f"no operator of order {order}: criterion fails first at "
                f"(n, k) = {self.failure}"
            )
        super().__init__(message)


class VerificationError(BochnerError):
    """An internal cross-check that is guaranteed to hold has failed."""
