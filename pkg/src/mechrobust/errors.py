class InputError(ValueError):
    """Invalid argument or malformed input data."""


class DSMParseError(InputError):
    """A design structure matrix file could not be parsed."""

    def __init__(self, message, line=None, column=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if column is not None:
            loc.append(f"column {column}")
        super().__init__(f"{', '.join(loc)}: {message}" if loc else message)
        self.line = line
        self.column = column
