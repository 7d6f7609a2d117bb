"""Exception types shared across the package."""


class StructureError(ValueError):
    """Operands are structurally incompatible (mismatched variable tables,
    non-square matrix, malformed input)."""


class InexactDivision(ArithmeticError):
    """poly_exact_div found no polynomial quotient."""


class ExactDivisionFailed(RuntimeError):
    """A seed mutation's exchange division was inexact.

    This signals a violation of the Laurent property, i.e. an internal bug
    or an invalid input seed, never a legitimate runtime condition.
    """


class NotBipartite(ValueError):
    """The mutable subquiver has a vertex that is neither a source nor a sink."""


class BudgetExceeded(RuntimeError):
    """A computation hit a configured size or iteration budget."""

    def __init__(self, message, **stats):
        super().__init__(message)
        self.stats = dict(stats)
