class AutomatonError(ValueError):
    """Base class for errors raised by this package."""


class DefinitionError(AutomatonError):
    """A machine, vector or matrix is malformed (dimensions, names, sums)."""


class InputError(AutomatonError):
    """A word contains a symbol outside the machine's alphabet."""


class NonTerminationError(AutomatonError):
    """A restart machine halts with probability zero in a single round."""


class FormatError(AutomatonError):
    """A machine file could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
