"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: InputError and subclasses
exit 2, BudgetExceededError exits 4.  InternalInconsistencyError signals a
bug (two provably equivalent computations disagreed) and is never caught.
"""


class InputError(ValueError):
    """Invalid user-supplied data: bad text, bad parameters, bad generator sets."""


class ParseError(InputError):
    """Text that does not match the monomial grammar.

    position is the character offset into the original input string.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ConstructionError(InputError):
    """A requested construction is inconsistent or fails its verification."""


class BudgetExceededError(RuntimeError):
    """A configured search budget would be exceeded; no partial results are produced."""

    def __init__(self, message: str, candidates: int | None = None):
        super().__init__(message)
        self.candidates = candidates


class InternalInconsistencyError(RuntimeError):
    """Two independent routes to the same fact disagreed.  Always a bug."""
