"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`CubicMCMError`,
so callers (and the CLI) can separate domain failures from programming bugs.
"""


class CubicMCMError(Exception):
    pass


class InternalError(CubicMCMError):
    """An invariant that the mathematics guarantees was violated."""


# charge lattice / betti engine
class ZeroChargeError(CubicMCMError, ValueError):
    pass


class InvalidBundleError(CubicMCMError, ValueError):
    pass


class InvalidDescriptorError(CubicMCMError, ValueError):
    pass


class VariantMismatchError(InvalidDescriptorError):
    pass


# polynomial core
class ArityMismatchError(CubicMCMError, ValueError):
    pass


class FieldMismatchError(CubicMCMError, ValueError):
    pass


class DimensionMismatchError(CubicMCMError, ValueError):
    pass


class NotSquareError(DimensionMismatchError):
    pass


class NoSolutionError(CubicMCMError, ValueError):
    pass


class NotHomogeneousError(CubicMCMError, ValueError):
    pass


class InconsistentGradingError(CubicMCMError, ValueError):
    pass


# matrix factorizations
class SingularCubicError(CubicMCMError, ValueError):
    pass


class NotOnCurveError(CubicMCMError, ValueError):
    pass


class OrderThreePointError(CubicMCMError, ValueError):
    pass


class InflectionPointError(CubicMCMError, ValueError):
    pass


class DegeneratePointError(CubicMCMError, ValueError):
    pass


class InhomogeneousInputError(CubicMCMError, ValueError):
    pass


class NotMinimalError(CubicMCMError, ValueError):
    pass


# serialization
class ParseError(CubicMCMError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class VerificationFailedError(CubicMCMError, ValueError):
    pass
