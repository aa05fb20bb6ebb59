"""Exception hierarchy.

``MathError`` subclasses signal a failed mathematical precondition (CLI exit
code 1); ``InputError`` subclasses signal malformed input (exit code 2).
"""


class SingidxError(Exception):
    pass


class InputError(SingidxError):
    pass


class MathError(SingidxError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class UnknownVariableError(InputError, KeyError):
    def __init__(self, name: str, offset: int | None = None):
        self.name = name
        self.offset = offset
        where = f" (at byte {offset})" if offset is not None else ""
        super().__init__(f"unknown variable {name!r}{where}")

    def __str__(self) -> str:
        return self.args[0]


class DimensionError(InputError, ValueError):
    pass


class SingularMatrixError(InputError, ValueError):
    pass


class PosetError(InputError, ValueError):
    pass


class MissingDataError(MathError):
    pass


class InfiniteColengthError(MathError):
    """An ideal that had to be m-primary has infinite colength."""


class NotAlgebraicallyIsolatedError(MathError):
    pass


class NotTangentError(MathError):
    pass


class ChainError(InfiniteColengthError):
    """A partial complete-intersection chain is not an ICIS."""


class GenericityError(MathError):
    pass


class SignatureMismatchError(SingidxError):
    """The two inertia computations disagree; indicates a bug."""


class DegenerateFormError(SingidxError):
    """The ELK form has a kernel although NF(J) is nonzero; indicates a bug."""
