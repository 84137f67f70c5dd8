"""Exception types shared across the package."""


class SplitcountError(Exception):
    """Base class for all errors raised by this package."""


class NonExactDivision(SplitcountError):
    """Polynomial division left a nonzero remainder.

    Every quotient evaluated here is exact by construction, so this always
    signals a bug (a mistranscribed formula or broken arithmetic), never a
    legitimate runtime state.
    """


class DimensionMismatch(SplitcountError):
    """Operands live in incompatible ambient dimensions."""


class InvalidLabel(SplitcountError):
    """A dimension/defect tuple violates the chain ordering constraints."""


class InvalidParameters(SplitcountError):
    """Numeric parameters outside the operation's domain."""


class SingularOperator(SplitcountError):
    """An operator required to be invertible is singular."""


class MissingBaseCase(SplitcountError):
    """A self-reproducing tuple was reached but no base value was supplied."""
