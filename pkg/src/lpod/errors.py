"""Exception hierarchy shared by the solver, the parser and the CLI."""


class LpodError(Exception):
    """Base class for every error raised by this package."""


class LpodSyntaxError(LpodError):
    """Malformed program or formula text.

    ``line`` and ``column`` are 1-based and point at the offending token.
    """

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class EmptyHead(LpodSyntaxError):
    pass


class EmptyDisjunct(LpodSyntaxError):
    pass


class DomainError(LpodError):
    """A literal is looked up outside an interpretation's domain, or two
    interpretations over different domains are compared."""


class NotAnLpod(LpodError):
    """The operation is only defined for programs whose head levels are single literals."""


class DisjunctiveReduct(LpodError):
    pass


class BudgetExceeded(LpodError):
    def __init__(self, needed, budget):
        super().__init__(f"search space of {needed} candidates exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


class NotABrewkaAnswerSet(LpodError):
    pass


class UndefinedDegree(LpodError):
    pass


class TooManyVariables(LpodError):
    pass
