"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: InputError -> 2, VerificationError -> 1,
BudgetExceeded -> 3.
"""


class FrobgrowError(Exception):
    """Base class for all package errors."""


class InputError(FrobgrowError):
    """Malformed user input: bad expressions, bad ring files, bad config."""


class ParseError(InputError):
    """Lexical or syntactic error in a polynomial expression.

    Carries the 0-based character position of the offending token.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ModulusMismatch(InputError):
    """Operands live over different prime fields."""


class RingMismatch(InputError):
    """Operands live in different ambient rings."""


class BudgetExceeded(FrobgrowError):
    """A configured computation budget (pairs, subsets, matrix size,
    iterations, wall clock) was exhausted.  Never a wrong answer."""

    def __init__(self, budget_name, limit):
        super().__init__(f"budget '{budget_name}' exceeded (limit {limit})")
        self.budget_name = budget_name
        self.limit = limit


class VerificationError(FrobgrowError):
    """A mathematical verification failed; carries a witness when known."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
