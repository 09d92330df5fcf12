"""Exception types shared by the library and the kernels."""


class RegpolyError(Exception):
    """Base class for every error raised by this package."""


class ClosureExceedsCap(RegpolyError):
    """Breadth-first closure produced more elements than allowed."""

    def __init__(self, cap):
        super().__init__(f"closure exceeded cap of {cap} elements")
        self.cap = cap


class OrderExceedsCap(RegpolyError):
    """No power of the element up to the cap is the identity."""


class OrderMismatch(RegpolyError):
    """The constructed group does not have the expected order."""


class NotASubgroup(RegpolyError):
    """A claimed subgroup is not a subset of the group or not closed."""


class WrongRank(RegpolyError):
    """An operation specific to one rank was handed a system of another."""


class CosetOverflow(RegpolyError):
    """Coset enumeration hit its limit on live cosets.

    This is an inconclusive outcome, never evidence that the group is infinite.
    """

    def __init__(self, limit):
        super().__init__(f"coset enumeration exceeded {limit} live cosets")
        self.limit = limit


class SearchBudgetExceeded(RegpolyError):
    """Backtracking isomorphism search ran out of its node budget."""


class DimensionError(RegpolyError, ValueError):
    """Operands have incompatible shapes."""
